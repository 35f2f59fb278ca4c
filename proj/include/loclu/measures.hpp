#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "loclu/matrix.hpp"

namespace loclu {

// One or more embedding columns over the full vertex set.
struct Embedding {
  std::vector<std::vector<double>> columns;
};

// Mean dip over the embedding columns restricted to the members. Lower means
// the members look like one tight group in the graph representation.
double graph_unimodality(const Embedding& embedding, std::span<const std::uint32_t> members);

// Mean dip over the designated attribute columns restricted to the members.
// Throws InvalidInput when `designated` is empty (the measure is undefined).
double attribute_unimodality(const AttributeMatrix& attrs, std::span<const std::uint32_t> members,
                             std::span<const std::size_t> designated);

double compactness(double gu, double au);

// Normalized mutual information between two vertex subsets of {0..n-1},
// treated as binary labelings of all n vertices: 2 I(A;B) / (H(A) + H(B)),
// natural log. 1 when the labelings are identical; 0 when either labeling has
// zero entropy and they differ. Member lists must be sorted, unique, in range.
double nmi(std::span<const std::uint32_t> detected, std::span<const std::uint32_t> truth,
           std::size_t n);

// F1 = 2PR/(P+R) with precision |A∩B|/|A| and recall |A∩B|/|B|; 0 when the
// sets are disjoint. Throws InvalidInput when either set is empty.
double f1_score(std::span<const std::uint32_t> detected, std::span<const std::uint32_t> truth);

}  // namespace loclu
