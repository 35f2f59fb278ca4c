#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "loclu/dip.hpp"
#include "loclu/graph.hpp"
#include "loclu/matrix.hpp"

namespace loclu {

// What the user asks for: a seed vertex plus the attribute columns the cluster
// should be unimodal in (possibly none, leaving only the graph embedding).
struct Preference {
  std::uint32_t seed_id = 0;
  std::vector<std::size_t> designated;
};

struct AttributeDipInfo {
  std::size_t attribute = 0;  // column index; the embedding column is attrs.cols
  double dip = 0.0;
  double p_value = 0.0;
};

struct ClusterResult {
  std::vector<std::uint32_t> members;  // sorted, contains the seed
  double gu = 0.0;                     // dip of the embedding over the members
  double au = 0.0;                     // mean dip of designated columns over the members
  double compactness = 0.0;            // gu + au
  EmbeddingVector embedding;
  std::vector<AttributeDipInfo> per_attribute_dips;  // over all vertices, sweep order source
};

// Full pipeline: embed the graph by early-stopped power iteration, append the
// embedding as an extra column, dip-test the designated columns plus the
// embedding over all vertices, then shrink from the full vertex set with
// local_clustering per column in descending-dip order (ties by ascending
// column index, so the embedding goes last among equals). The sweep repeats
// until a full pass no longer shrinks the set, so the output tests unimodal
// in every swept column, not just the last one processed.
ClusterResult run_loclu(const Graph& graph, const AttributeMatrix& attrs, const Preference& pref,
                        const PowerIterConfig& pi_cfg, const DipConfig& dip_cfg);

// Re-runs the dip test on every designated column and the embedding column
// restricted to the result members; true when all verdicts are unimodal.
bool verify_unimodality(const ClusterResult& result, const Graph& graph,
                        const AttributeMatrix& attrs, const Preference& pref,
                        const DipConfig& dip_cfg);

// Column with the largest dip over all vertices (ties to the lowest index);
// the usual way to pick a designated attribute when the user has none.
std::size_t auto_designate(const AttributeMatrix& attrs);

}  // namespace loclu
