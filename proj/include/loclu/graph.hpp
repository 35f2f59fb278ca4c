#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace loclu {

// Undirected simple graph in CSR form. Neighbor lists are sorted; no
// self-loops or duplicate edges.
class Graph {
 public:
  Graph() = default;

  // Strict: throws InvalidInput on out-of-range ids, self-loops, duplicates.
  static Graph from_edges(std::size_t n,
                          std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);

  // Assembles from per-vertex neighbor lists (will be sorted; must be
  // symmetric and loop/duplicate free).
  static Graph from_neighbor_lists(std::vector<std::vector<std::uint32_t>> adj);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return adj_.size() / 2; }
  std::size_t degree(std::uint32_t v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const std::uint32_t> neighbors(std::uint32_t v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }

  // All undirected edges as (u, v) with u < v, sorted.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const;

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::uint32_t> adj_;
};

struct PowerIterConfig {
  double epsilon_hat = 0.001;  // threshold on the velocity change (max norm)
  std::size_t max_iter = 1000;
  std::uint64_t rng_seed = 0;

  void validate() const;  // throws InvalidInput
};

struct EmbeddingVector {
  std::vector<double> values;  // unit L1 norm
  std::size_t iterations = 0;
};

// One step of the lazy-free random walk: out[i] is the mean of v over i's
// neighbors. Isolated vertices keep their value (self-transition).
std::vector<double> transition_apply(const Graph& graph, std::span<const double> v);

// Power iteration on the random-walk transition matrix, L1-normalizing each
// iterate, started from a standard normal vector drawn from rng_seed. Stops
// early once the per-entry velocity |v_{t+1} - v_t| stops changing (max-norm
// difference <= epsilon_hat) so the iterate still separates loosely-coupled
// vertex groups instead of collapsing to the stationary vector.
EmbeddingVector power_iteration(const Graph& graph, const PowerIterConfig& cfg);

// Same, but from a caller-supplied start vector (size n).
EmbeddingVector power_iteration_from(const Graph& graph, std::vector<double> v0,
                                     const PowerIterConfig& cfg);

// Eigenvector for the second-smallest eigenvalue of the random-walk Laplacian
// I - D^{-1}A, computed densely via the symmetrized operator with deflation of
// the known stationary pair. Test oracle; refuses n > 2048 or isolated
// vertices.
std::vector<double> fiedler_vector(const Graph& graph);

}  // namespace loclu
