#include "loclu/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "loclu/errors.hpp"
#include "loclu/rng.hpp"

namespace loclu {
namespace {

// Stream tags; every (seed, tag, index) triple is an independent generator.
enum : std::uint64_t {
  kTagEdges = 10,       // index: row vertex
  kTagRelevantMean = 11,  // index: column
  kTagIrrelevantMean = 12,
  kTagValues = 13,  // index: vertex
  kTagPermutation = 14,
  kTagSizes = 15,
};

std::vector<double> draw_means(SplitMix64& gen, std::size_t k, double lo, double hi,
                               double min_sep) {
  std::vector<double> means(k);
  while (true) {
    for (double& m : means) m = gen.next_in(lo, hi);
    if (min_sep <= 0.0) return means;
    bool ok = true;
    for (std::size_t i = 0; i < k && ok; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        if (std::abs(means[i] - means[j]) < min_sep) {
          ok = false;
          break;
        }
      }
    }
    if (ok) return means;
  }
}

}  // namespace

void SyntheticSpec::validate() const {
  if (cluster_sizes.empty()) throw InvalidInput("synthetic: no cluster sizes");
  for (std::size_t s : cluster_sizes) {
    if (s < 2) throw InvalidInput("synthetic: cluster sizes must be >= 2 (each is bisected)");
  }
  const std::size_t n = std::accumulate(cluster_sizes.begin(), cluster_sizes.end(), std::size_t{0});
  if (n < 4) throw InvalidInput("synthetic: need at least 4 vertices");
  if (!(p_in >= 0.0 && p_in <= 1.0) || !(p_out >= 0.0 && p_out <= 1.0))
    throw InvalidInput("synthetic: edge probabilities must lie in [0, 1]");
  if (d == 0) throw InvalidInput("synthetic: need at least one attribute column");
  if (!(relevant_ratio >= 0.0 && relevant_ratio <= 1.0))
    throw InvalidInput("synthetic: relevant_ratio must lie in [0, 1]");
  if (!(relevant_mean_range[0] <= relevant_mean_range[1]) ||
      !(irrelevant_mean_range[0] <= irrelevant_mean_range[1]))
    throw InvalidInput("synthetic: malformed mean range");
  if (!(relevant_variance > 0.0) || !(irrelevant_variance > 0.0))
    throw InvalidInput("synthetic: variances must be positive");
  if (min_mean_separation < 0.0) throw InvalidInput("synthetic: negative mean separation");
  if (min_mean_separation > 0.0) {
    // A feasibility sanity bound: k points pairwise min_sep apart need
    // (k-1) * min_sep of room, or mean redraws would loop forever.
    const double k = static_cast<double>(2 * cluster_sizes.size());
    if ((k - 1.0) * min_mean_separation >= relevant_mean_range[1] - relevant_mean_range[0])
      throw InvalidInput("synthetic: mean separation infeasible for the mean range");
  }
}

SyntheticInstance generate(const SyntheticSpec& spec) {
  spec.validate();
  const std::size_t blocks = spec.cluster_sizes.size();
  const std::size_t n =
      std::accumulate(spec.cluster_sizes.begin(), spec.cluster_sizes.end(), std::size_t{0});

  // Vertex layout: blocks are contiguous, each split in halves (first half
  // gets the even truth label).
  std::vector<std::uint32_t> block_of(n), labels(n);
  {
    std::size_t v = 0;
    for (std::size_t b = 0; b < blocks; ++b) {
      const std::size_t size = spec.cluster_sizes[b];
      const std::size_t first_half = (size + 1) / 2;
      for (std::size_t i = 0; i < size; ++i, ++v) {
        block_of[v] = static_cast<std::uint32_t>(b);
        labels[v] = static_cast<std::uint32_t>(2 * b + (i >= first_half ? 1 : 0));
      }
    }
  }
  const std::size_t k = 2 * blocks;  // truth clusters

  // Edges: one stream per row so rows can be drawn in parallel yet the graph
  // only depends on the seed.
  std::vector<std::vector<std::uint32_t>> upper(n);
  const std::ptrdiff_t pn = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::ptrdiff_t ii = 0; ii < pn; ++ii) {
    const auto i = static_cast<std::uint32_t>(ii);
    SplitMix64 gen(derive_stream(spec.rng_seed, kTagEdges, i));
    for (std::uint32_t j = i + 1; j < n; ++j) {
      const double p = block_of[i] == block_of[j] ? spec.p_in : spec.p_out;
      if (gen.next_unit() < p) upper[i].push_back(j);
    }
  }
  std::vector<std::vector<std::uint32_t>> adj(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j : upper[i]) {
      adj[i].push_back(j);
      adj[j].push_back(i);
    }
  }

  // Attribute means. Relevant columns follow the truth clusters; irrelevant
  // columns follow the truth clusters of a randomly relabeled vertex set.
  const std::size_t relevant =
      static_cast<std::size_t>(std::ceil(spec.relevant_ratio * static_cast<double>(spec.d)));
  std::vector<std::vector<double>> rel_means(relevant), irr_means(spec.d - relevant);
  for (std::size_t c = 0; c < relevant; ++c) {
    SplitMix64 gen(derive_stream(spec.rng_seed, kTagRelevantMean, c));
    rel_means[c] = draw_means(gen, k, spec.relevant_mean_range[0], spec.relevant_mean_range[1],
                              spec.min_mean_separation);
  }
  for (std::size_t c = 0; c < spec.d - relevant; ++c) {
    SplitMix64 gen(derive_stream(spec.rng_seed, kTagIrrelevantMean, c));
    irr_means[c] =
        draw_means(gen, k, spec.irrelevant_mean_range[0], spec.irrelevant_mean_range[1], 0.0);
  }

  std::vector<std::uint32_t> pseudo(n);
  {
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    SplitMix64 gen(derive_stream(spec.rng_seed, kTagPermutation));
    for (std::size_t i = n - 1; i > 0; --i) {
      const std::size_t j = static_cast<std::size_t>(gen.next_index(i + 1));
      std::swap(perm[i], perm[j]);
    }
    for (std::size_t v = 0; v < n; ++v) pseudo[v] = labels[perm[v]];
  }

  AttributeMatrix attrs(n, spec.d);
  const double rel_sd = std::sqrt(spec.relevant_variance);
  const double irr_sd = std::sqrt(spec.irrelevant_variance);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t vv = 0; vv < pn; ++vv) {
    const auto v = static_cast<std::uint32_t>(vv);
    SplitMix64 gen(derive_stream(spec.rng_seed, kTagValues, v));
    for (std::size_t c = 0; c < relevant; ++c)
      attrs.at(v, c) = rel_means[c][labels[v]] + rel_sd * gen.next_normal();
    for (std::size_t c = relevant; c < spec.d; ++c)
      attrs.at(v, c) = irr_means[c - relevant][pseudo[v]] + irr_sd * gen.next_normal();
  }

  SyntheticInstance inst;
  inst.graph = Graph::from_neighbor_lists(std::move(adj));
  inst.attributes = std::move(attrs);
  inst.truth_labels = std::move(labels);
  return inst;
}

SyntheticSpec variable_size_spec(std::size_t lo, std::size_t hi, std::size_t k,
                                 std::uint64_t seed) {
  if (lo < 4 || hi < lo) throw InvalidInput("variable_size_spec: need 4 <= lo <= hi");
  if (k == 0) throw InvalidInput("variable_size_spec: need at least one block");
  SyntheticSpec spec;
  spec.rng_seed = seed;
  spec.cluster_sizes.resize(k);
  SplitMix64 gen(derive_stream(seed, kTagSizes));
  for (std::size_t& s : spec.cluster_sizes)
    s = lo + static_cast<std::size_t>(gen.next_index(hi - lo + 1));
  return spec;
}

std::vector<std::uint32_t> truth_cluster_of(const std::vector<std::uint32_t>& labels,
                                            std::uint32_t vertex) {
  if (vertex >= labels.size()) throw InvalidInput("truth_cluster_of: vertex out of range");
  std::vector<std::uint32_t> out;
  for (std::uint32_t v = 0; v < labels.size(); ++v) {
    if (labels[v] == labels[vertex]) out.push_back(v);
  }
  return out;
}

}  // namespace loclu
