#include "loclu/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "loclu/errors.hpp"
#include "loclu/rng.hpp"

namespace loclu {

void PowerIterConfig::validate() const {
  if (!(epsilon_hat > 0.0) || !std::isfinite(epsilon_hat))
    throw InvalidInput("epsilon_hat must be positive");
  if (max_iter == 0) throw InvalidInput("max_iter must be positive");
}

Graph Graph::from_edges(std::size_t n,
                        std::span<const std::pair<std::uint32_t, std::uint32_t>> edges) {
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n)
      throw InvalidInput("edge endpoint " + std::to_string(std::max(u, v)) +
                         " out of range for n = " + std::to_string(n));
    if (u == v) throw InvalidInput("self-loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto& nb = adj[i];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw InvalidInput("duplicate edge at vertex " + std::to_string(i));
  }
  return from_neighbor_lists(std::move(adj));
}

Graph Graph::from_neighbor_lists(std::vector<std::vector<std::uint32_t>> adj) {
  Graph g;
  g.n_ = adj.size();
  g.offsets_.assign(g.n_ + 1, 0);
  std::size_t total = 0;
  for (std::size_t i = 0; i < g.n_; ++i) {
    std::sort(adj[i].begin(), adj[i].end());
    total += adj[i].size();
    g.offsets_[i + 1] = total;
  }
  g.adj_.reserve(total);
  for (auto& nb : adj) g.adj_.insert(g.adj_.end(), nb.begin(), nb.end());
  return g;
}

std::vector<std::pair<std::uint32_t, std::uint32_t>> Graph::edges() const {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
  out.reserve(edge_count());
  for (std::uint32_t u = 0; u < n_; ++u) {
    for (std::uint32_t v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<double> transition_apply(const Graph& graph, std::span<const double> v) {
  if (v.size() != graph.vertex_count()) throw InvalidInput("transition_apply: size mismatch");
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(graph.vertex_count());
  std::vector<double> out(v.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < n; ++i) {
    const auto u = static_cast<std::uint32_t>(i);
    const auto nb = graph.neighbors(u);
    if (nb.empty()) {
      out[u] = v[u];
      continue;
    }
    double sum = 0.0;
    for (std::uint32_t w : nb) sum += v[w];
    out[u] = sum / static_cast<double>(nb.size());
  }
  return out;
}

namespace {

// L1 norm accumulated in index order; keeps iterates bit-stable across runs.
double l1_norm(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += std::abs(x);
  return s;
}

}  // namespace

EmbeddingVector power_iteration_from(const Graph& graph, std::vector<double> v0,
                                     const PowerIterConfig& cfg) {
  cfg.validate();
  const std::size_t n = graph.vertex_count();
  if (n == 0) throw InvalidInput("power_iteration: empty graph");
  if (v0.size() != n) throw InvalidInput("power_iteration: start vector size mismatch");

  std::vector<double> v = std::move(v0);
  std::vector<double> velocity(n, 0.0);  // |v_t - v_{t-1}|, zero before the first step
  std::size_t t = 0;
  while (t < cfg.max_iter) {
    std::vector<double> next = transition_apply(graph, v);
    const double norm = l1_norm(next);
    if (norm == 0.0) break;  // walk annihilated the vector; keep the last iterate
    for (double& x : next) x /= norm;

    double accel = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double vel = std::abs(next[i] - v[i]);
      accel = std::max(accel, std::abs(vel - velocity[i]));
      velocity[i] = vel;
    }
    v = std::move(next);
    ++t;
    if (accel <= cfg.epsilon_hat) break;
  }
  return {std::move(v), t};
}

EmbeddingVector power_iteration(const Graph& graph, const PowerIterConfig& cfg) {
  cfg.validate();
  if (graph.vertex_count() == 0) throw InvalidInput("power_iteration: empty graph");
  SplitMix64 gen(derive_stream(cfg.rng_seed, /*tag=*/2));
  std::vector<double> v0(graph.vertex_count());
  for (double& x : v0) x = gen.next_normal();
  return power_iteration_from(graph, std::move(v0), cfg);
}

std::vector<double> fiedler_vector(const Graph& graph) {
  const std::size_t n = graph.vertex_count();
  if (n == 0) throw InvalidInput("fiedler_vector: empty graph");
  if (n > 2048) throw InvalidInput("fiedler_vector: dense oracle limited to n <= 2048");
  for (std::uint32_t u = 0; u < n; ++u) {
    if (graph.degree(u) == 0) throw InvalidInput("fiedler_vector: isolated vertex unsupported");
  }

  // Work with the symmetric S = D^{-1/2} A D^{-1/2}; its spectrum matches the
  // random-walk operator and its dominant eigenvector is known in closed form
  // (sqrt of the degrees). The second eigenvector of the walk Laplacian is
  // D^{-1/2} times the second eigenvector of S. Iterating on (S + I)/2 keeps
  // the spectrum in [0, 1] so the most-negative eigenvalue cannot win.
  std::vector<double> sqrt_deg(n);
  for (std::uint32_t u = 0; u < n; ++u) sqrt_deg[u] = std::sqrt(static_cast<double>(graph.degree(u)));
  std::vector<double> u1 = sqrt_deg;
  double u1n = 0.0;
  for (double x : u1) u1n += x * x;
  u1n = std::sqrt(u1n);
  for (double& x : u1) x /= u1n;

  auto deflate = [&](std::vector<double>& z) {
    double dot = 0.0;
    for (std::size_t i = 0; i < n; ++i) dot += z[i] * u1[i];
    for (std::size_t i = 0; i < n; ++i) z[i] -= dot * u1[i];
  };
  auto normalize = [&](std::vector<double>& z) {
    double s = 0.0;
    for (double x : z) s += x * x;
    s = std::sqrt(s);
    if (s > 0.0) {
      for (double& x : z) x /= s;
    }
  };

  SplitMix64 gen(0x5eedf1ed1e57ull);
  std::vector<double> z(n);
  for (double& x : z) x = gen.next_normal();
  deflate(z);
  normalize(z);

  std::vector<double> next(n);
  for (std::size_t it = 0; it < 200000; ++it) {
    for (std::uint32_t i = 0; i < n; ++i) {
      double sum = 0.0;
      for (std::uint32_t w : graph.neighbors(i)) sum += z[w] / (sqrt_deg[i] * sqrt_deg[w]);
      next[i] = 0.5 * (sum + z[i]);
    }
    deflate(next);
    normalize(next);
    double diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) diff = std::max(diff, std::abs(next[i] - z[i]));
    // Eigenvectors are sign-ambiguous; compare against the flipped iterate too.
    double diff_flip = 0.0;
    for (std::size_t i = 0; i < n; ++i) diff_flip = std::max(diff_flip, std::abs(next[i] + z[i]));
    z.swap(next);
    if (std::min(diff, diff_flip) < 1e-13) break;
  }

  for (std::size_t i = 0; i < n; ++i) z[i] /= sqrt_deg[i];
  normalize(z);
  return z;
}

}  // namespace loclu
