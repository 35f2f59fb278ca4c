#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace loclu {

struct DipConfig {
  double alpha = 0.05;            // significance level for the unimodality verdict
  std::size_t bootstrap_b = 1000; // uniform null replicates for the p-value
  std::uint64_t rng_seed = 0;

  void validate() const;  // throws InvalidInput
};

struct DipResult {
  double dip = 0.0;
  std::optional<double> p_value;     // absent when only the statistic was computed
  double modal_low = 0.0;            // value bounds of the modal interval
  double modal_high = 0.0;
  std::size_t modal_index_low = 0;   // positions in the ascending-sorted sample
  std::size_t modal_index_high = 0;

  bool unimodal(double alpha) const { return p_value.has_value() && *p_value > alpha; }
};

// Hartigan dip statistic: the largest vertical distance between the empirical
// CDF and the closest unimodal CDF, floored at 1/(2n). Samples with n < 4 or
// all values equal take the convention dip = 1/(2n), modal interval [min, max].
// Throws InvalidInput on an empty or non-finite sample.
DipResult dip_statistic(std::span<const double> sample);

// Same, but the input must already be sorted ascending (not re-checked).
DipResult dip_statistic_sorted(std::span<const double> sorted);

// Bootstrap p-value against the uniform null: the fraction of `bootstrap_b`
// uniform(0,1) samples of size n whose dip is >= the observed dip. Replicates
// use per-index RNG streams, so the result does not depend on thread count.
double dip_pvalue(double dip, std::size_t n, const DipConfig& cfg);

// dip_statistic + dip_pvalue. Degenerate samples (n < 4 or all equal) get
// p = 1 without bootstrapping.
DipResult dip_test(std::span<const double> sample, const DipConfig& cfg);

// Dip statistic of each sample; parallel across samples.
std::vector<double> batch_dips(const std::vector<std::vector<double>>& samples);

}  // namespace loclu
