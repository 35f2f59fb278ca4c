#include "loclu/loclu.hpp"

#include <algorithm>
#include <numeric>

#include "loclu/errors.hpp"
#include "loclu/local_clustering.hpp"
#include "loclu/measures.hpp"

namespace loclu {
namespace {

void check_preference(const Preference& pref, std::size_t n, std::size_t d) {
  if (pref.seed_id >= n) throw InvalidInput("run_loclu: seed vertex out of range");
  std::vector<std::size_t> seen = pref.designated;
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw InvalidInput("run_loclu: duplicate designated attribute");
  for (std::size_t c : pref.designated) {
    if (c >= d) throw InvalidInput("run_loclu: designated attribute out of range");
  }
}

}  // namespace

ClusterResult run_loclu(const Graph& graph, const AttributeMatrix& attrs, const Preference& pref,
                        const PowerIterConfig& pi_cfg, const DipConfig& dip_cfg) {
  const std::size_t n = graph.vertex_count();
  if (n == 0) throw InvalidInput("run_loclu: empty graph");
  if (attrs.rows != n) throw InvalidInput("run_loclu: attribute row count != vertex count");
  check_preference(pref, n, attrs.cols);
  pi_cfg.validate();
  dip_cfg.validate();

  ClusterResult result;
  result.embedding = power_iteration(graph, pi_cfg);

  const AttributeMatrix aug = attrs.with_appended_column(result.embedding.values);
  const std::size_t embedding_col = attrs.cols;

  std::vector<std::size_t> sweep = pref.designated;
  sweep.push_back(embedding_col);

  result.per_attribute_dips.resize(sweep.size());
  for (std::size_t i = 0; i < sweep.size(); ++i) {
    const DipResult r = dip_test(aug.column(sweep[i]), dip_cfg);
    result.per_attribute_dips[i] = {sweep[i], r.dip, *r.p_value};
  }
  std::stable_sort(result.per_attribute_dips.begin(), result.per_attribute_dips.end(),
                   [](const AttributeDipInfo& a, const AttributeDipInfo& b) {
                     if (a.dip != b.dip) return a.dip > b.dip;
                     return a.attribute < b.attribute;
                   });

  CandidateSet c;
  c.seed_id = pref.seed_id;
  c.members.resize(n);
  std::iota(c.members.begin(), c.members.end(), 0u);
  // A single ordered pass is not always enough: a later column can remove
  // members in a way that re-splits an earlier column. Repeat the sweep until
  // a full pass leaves the set unchanged, so every column's last verdict is
  // computed on the final member set. Each extra pass strictly shrinks the
  // set, which bounds the loop.
  while (true) {
    const std::size_t before = c.members.size();
    for (const AttributeDipInfo& info : result.per_attribute_dips) {
      c = local_clustering(c, aug, info.attribute, dip_cfg);
    }
    if (c.members.size() == before) break;
  }
  result.members = std::move(c.members);

  Embedding emb{{result.embedding.values}};
  result.gu = graph_unimodality(emb, result.members);
  result.au = pref.designated.empty()
                  ? 0.0  // no designated columns; compactness reduces to gu
                  : attribute_unimodality(attrs, result.members, pref.designated);
  result.compactness = compactness(result.gu, result.au);
  return result;
}

bool verify_unimodality(const ClusterResult& result, const Graph& graph,
                        const AttributeMatrix& attrs, const Preference& pref,
                        const DipConfig& dip_cfg) {
  dip_cfg.validate();
  const std::size_t n = graph.vertex_count();
  if (attrs.rows != n || result.embedding.values.size() != n)
    throw InvalidInput("verify_unimodality: size mismatch");
  if (result.members.empty()) throw InvalidInput("verify_unimodality: empty result");
  check_preference(pref, n, attrs.cols);

  for (std::size_t col : pref.designated) {
    const DipResult r = dip_test(attrs.gather_column(result.members, col), dip_cfg);
    if (!(*r.p_value > dip_cfg.alpha)) return false;
  }
  std::vector<double> emb(result.members.size());
  for (std::size_t i = 0; i < result.members.size(); ++i)
    emb[i] = result.embedding.values[result.members[i]];
  const DipResult r = dip_test(emb, dip_cfg);
  return *r.p_value > dip_cfg.alpha;
}

std::size_t auto_designate(const AttributeMatrix& attrs) {
  if (attrs.cols == 0 || attrs.rows == 0)
    throw InvalidInput("auto_designate: empty attribute matrix");
  std::vector<std::vector<double>> cols(attrs.cols);
  for (std::size_t j = 0; j < attrs.cols; ++j) cols[j] = attrs.column(j);
  const std::vector<double> dips = batch_dips(cols);
  std::size_t best = 0;
  for (std::size_t j = 1; j < dips.size(); ++j) {
    if (dips[j] > dips[best]) best = j;
  }
  return best;
}

}  // namespace loclu
