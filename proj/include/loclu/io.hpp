#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "loclu/graph.hpp"
#include "loclu/matrix.hpp"

namespace loclu {

// Edge-list text format: optional first line "n <count>", '#' comments and
// blank lines ignored, then one "u v" pair of 0-based ids per line. Input is
// treated as undirected; duplicate edges (either orientation) are merged and
// self-loops dropped, with counts reported via LoadStats.
struct LoadStats {
  std::size_t self_loops_dropped = 0;
  std::size_t duplicate_edges_merged = 0;
};

Graph load_graph(const std::string& path, LoadStats* stats = nullptr);
void save_graph(const std::string& path, const Graph& graph);

// CSV of attribute rows, one per vertex. An optional first line
// "#types <t0>,<t1>,..." marks each column num or cat; categorical columns
// are one-hot expanded (distinct values in sorted order). Values must be
// finite. Row count must equal n when n is known (pass SIZE_MAX to skip).
AttributeMatrix load_attributes(const std::string& path, std::size_t n);
void save_attributes(const std::string& path, const AttributeMatrix& attrs);

// One integer per line, n lines.
std::vector<std::uint32_t> load_labels(const std::string& path, std::size_t n);
void save_labels(const std::string& path, const std::vector<std::uint32_t>& labels);

// One vertex id per line; returned sorted unique. Ids must be < n.
std::vector<std::uint32_t> load_member_list(const std::string& path, std::size_t n);
void save_member_list(const std::string& path, const std::vector<std::uint32_t>& members);

}  // namespace loclu
