#include "loclu/serial_kernels.hpp"

#include <algorithm>
#include <cmath>

#include "loclu/errors.hpp"
#include "loclu/graph.hpp"
#include "loclu/rng.hpp"

namespace loclu::serial {

double dip_pvalue(double dip, std::size_t n, const DipConfig& cfg) {
  cfg.validate();
  if (n == 0) throw InvalidInput("dip_pvalue: n must be positive");
  if (!std::isfinite(dip) || dip < 0.0) throw InvalidInput("dip_pvalue: invalid dip value");
  std::size_t exceed = 0;
  std::vector<double> u(n);
  for (std::size_t q = 0; q < cfg.bootstrap_b; ++q) {
    SplitMix64 gen(derive_stream(cfg.rng_seed, /*tag=*/1, q));
    for (double& v : u) v = gen.next_unit();
    std::sort(u.begin(), u.end());
    if (dip_statistic_sorted(u).dip >= dip) ++exceed;
  }
  return static_cast<double>(exceed) / static_cast<double>(cfg.bootstrap_b);
}

std::vector<double> batch_dips(const std::vector<std::vector<double>>& samples) {
  std::vector<double> out(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) out[i] = dip_statistic(samples[i]).dip;
  return out;
}

std::vector<double> transition_apply(const Graph& graph, std::span<const double> v) {
  if (v.size() != graph.vertex_count()) throw InvalidInput("transition_apply: size mismatch");
  std::vector<double> out(v.size());
  for (std::uint32_t i = 0; i < graph.vertex_count(); ++i) {
    const auto nb = graph.neighbors(i);
    if (nb.empty()) {
      out[i] = v[i];
      continue;
    }
    double sum = 0.0;
    for (std::uint32_t w : nb) sum += v[w];
    out[i] = sum / static_cast<double>(nb.size());
  }
  return out;
}

}  // namespace loclu::serial
