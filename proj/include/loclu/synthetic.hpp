#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "loclu/graph.hpp"
#include "loclu/matrix.hpp"

namespace loclu {

// Planted-partition instance with attribute clusters nested inside the graph
// clusters. Edges follow the usual two-density block model; each graph block
// is then bisected (by vertex order) into two ground-truth clusters. The
// leading ceil(relevant_ratio * d) attribute columns are cluster-relevant:
// tight Gaussians with one mean per (truth cluster, column). The remaining
// columns get the same treatment under a random relabeling of the vertices,
// so they carry structure uncorrelated with the graph.
struct SyntheticSpec {
  std::vector<std::size_t> cluster_sizes;  // pre-bisection block sizes, each >= 2
  double p_in = 0.35;
  double p_out = 0.01;
  std::size_t d = 20;
  double relevant_ratio = 0.5;
  std::array<double, 2> relevant_mean_range{0.0, 10.0};
  double relevant_variance = 0.001;
  std::array<double, 2> irrelevant_mean_range{10.0, 20.0};
  double irrelevant_variance = 1.0;
  // When positive, per-column truth-cluster means are redrawn until pairwise
  // at least this far apart, guaranteeing recoverable structure.
  double min_mean_separation = 0.0;
  std::uint64_t rng_seed = 0;

  void validate() const;  // throws InvalidInput
};

struct SyntheticInstance {
  Graph graph;
  AttributeMatrix attributes;
  std::vector<std::uint32_t> truth_labels;  // post-bisection cluster per vertex
};

SyntheticInstance generate(const SyntheticSpec& spec);

// Spec with k block sizes drawn uniformly from [lo, hi] (lo >= 4), defaults
// otherwise; the instance seed is the same `seed`.
SyntheticSpec variable_size_spec(std::size_t lo, std::size_t hi, std::size_t k,
                                 std::uint64_t seed);

// Ground-truth cluster (sorted member list) containing the given vertex.
std::vector<std::uint32_t> truth_cluster_of(const std::vector<std::uint32_t>& labels,
                                            std::uint32_t vertex);

}  // namespace loclu
