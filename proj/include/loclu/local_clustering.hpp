#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "loclu/dip.hpp"
#include "loclu/matrix.hpp"

namespace loclu {

// A working cluster: sorted unique vertex ids, always containing the seed.
struct CandidateSet {
  std::vector<std::uint32_t> members;
  std::uint32_t seed_id = 0;
};

// Recursive modal-interval shrink along one attribute column: while the
// members' values look multimodal (dip test at cfg.alpha), keep only the side
// of the modal interval the seed's value falls on (strictly below, strictly
// above, or inside it). Stops as soon as the dip test passes, when a shrink
// step would not shrink (heavy ties), or when the set becomes degenerate.
// The seed is never dropped and the member set never grows.
CandidateSet local_clustering(const CandidateSet& candidates, const AttributeMatrix& attrs,
                              std::size_t attribute, const DipConfig& cfg);

}  // namespace loclu
