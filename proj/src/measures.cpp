#include "loclu/measures.hpp"

#include <algorithm>
#include <cmath>

#include "loclu/dip.hpp"
#include "loclu/errors.hpp"

namespace loclu {
namespace {

void check_members(std::span<const std::uint32_t> members, std::size_t n, const char* what) {
  if (members.empty()) throw InvalidInput(std::string(what) + ": empty member list");
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (members[i] >= n) throw InvalidInput(std::string(what) + ": member id out of range");
    if (i > 0 && members[i] <= members[i - 1])
      throw InvalidInput(std::string(what) + ": member list must be sorted and unique");
  }
}

std::size_t intersection_size(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  std::size_t i = 0, j = 0, c = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j])
      ++i;
    else if (b[j] < a[i])
      ++j;
    else
      ++c, ++i, ++j;
  }
  return c;
}

}  // namespace

double graph_unimodality(const Embedding& embedding, std::span<const std::uint32_t> members) {
  if (embedding.columns.empty()) throw InvalidInput("graph_unimodality: empty embedding");
  const std::size_t n = embedding.columns.front().size();
  for (const auto& col : embedding.columns) {
    if (col.size() != n) throw InvalidInput("graph_unimodality: ragged embedding columns");
  }
  check_members(members, n, "graph_unimodality");
  double sum = 0.0;
  std::vector<double> vals(members.size());
  for (const auto& col : embedding.columns) {
    for (std::size_t i = 0; i < members.size(); ++i) vals[i] = col[members[i]];
    sum += dip_statistic(vals).dip;
  }
  return sum / static_cast<double>(embedding.columns.size());
}

double attribute_unimodality(const AttributeMatrix& attrs, std::span<const std::uint32_t> members,
                             std::span<const std::size_t> designated) {
  if (designated.empty())
    throw InvalidInput("attribute_unimodality: no designated attributes");
  check_members(members, attrs.rows, "attribute_unimodality");
  double sum = 0.0;
  for (std::size_t col : designated) {
    if (col >= attrs.cols) throw InvalidInput("attribute_unimodality: column out of range");
    sum += dip_statistic(attrs.gather_column(members, col)).dip;
  }
  return sum / static_cast<double>(designated.size());
}

double compactness(double gu, double au) { return gu + au; }

double nmi(std::span<const std::uint32_t> detected, std::span<const std::uint32_t> truth,
           std::size_t n) {
  if (n == 0) throw InvalidInput("nmi: n must be positive");
  if (!detected.empty()) check_members(detected, n, "nmi");
  if (!truth.empty()) check_members(truth, n, "nmi");

  const double total = static_cast<double>(n);
  const double n11 = static_cast<double>(intersection_size(detected, truth));
  const double n10 = static_cast<double>(detected.size()) - n11;
  const double n01 = static_cast<double>(truth.size()) - n11;
  const double n00 = total - n11 - n10 - n01;

  const auto h = [](double p) { return p > 0.0 ? -p * std::log(p) : 0.0; };
  const double pd = static_cast<double>(detected.size()) / total;
  const double pt = static_cast<double>(truth.size()) / total;
  const double h_detected = h(pd) + h(1.0 - pd);
  const double h_truth = h(pt) + h(1.0 - pt);

  if (h_detected + h_truth == 0.0) {
    // Both labelings constant: identical (both empty or both everything) or not.
    const bool identical = detected.size() == truth.size();
    return identical ? 1.0 : 0.0;
  }

  // I(A;B) = H(A) + H(B) - H(A,B); the reference oracle in the tests computes
  // the sum over cells instead.
  const double h_joint = h(n11 / total) + h(n10 / total) + h(n01 / total) + h(n00 / total);
  const double mi = h_detected + h_truth - h_joint;
  const double value = 2.0 * mi / (h_detected + h_truth);
  return std::clamp(value, 0.0, 1.0);
}

double f1_score(std::span<const std::uint32_t> detected, std::span<const std::uint32_t> truth) {
  if (detected.empty() || truth.empty()) throw InvalidInput("f1_score: empty set");
  const std::uint32_t max_id =
      std::max(detected.back(), truth.back());
  check_members(detected, static_cast<std::size_t>(max_id) + 1, "f1_score");
  check_members(truth, static_cast<std::size_t>(max_id) + 1, "f1_score");
  const double overlap = static_cast<double>(intersection_size(detected, truth));
  if (overlap == 0.0) return 0.0;
  const double precision = overlap / static_cast<double>(detected.size());
  const double recall = overlap / static_cast<double>(truth.size());
  return 2.0 * precision * recall / (precision + recall);
}

}  // namespace loclu
