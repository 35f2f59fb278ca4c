#include "loclu/dip.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <vector>

#include "loclu/errors.hpp"
#include "loclu/rng.hpp"

namespace loclu {

void DipConfig::validate() const {
  if (!(alpha > 0.0 && alpha < 1.0)) throw InvalidInput("alpha must lie in (0, 1)");
  if (bootstrap_b == 0) throw InvalidInput("bootstrap_b must be positive");
}

namespace {

void check_finite(std::span<const double> sample) {
  if (sample.empty()) throw InvalidInput("dip: empty sample");
  for (double v : sample) {
    if (!std::isfinite(v)) throw InvalidInput("dip: non-finite sample value");
  }
}

// Chains of hull corners over the CDF staircase points (x[k], k).
// prev[j] is the previous corner of the greatest convex minorant ending at j;
// next[k] is the next corner of the least concave majorant starting at k.
// Slopes are compared cross-multiplied so tied abscissas need no division.
void minorant_chain(std::span<const double> x, std::vector<std::size_t>& prev) {
  const std::size_t n = x.size();
  prev.assign(n, 0);
  for (std::size_t j = 1; j < n; ++j) {
    prev[j] = j - 1;
    while (true) {
      const std::size_t p = prev[j];
      if (p == 0) break;
      const std::size_t pp = prev[p];
      if ((x[j] - x[p]) * static_cast<double>(p - pp) <
          (x[p] - x[pp]) * static_cast<double>(j - p))
        break;
      prev[j] = pp;
    }
  }
}

void majorant_chain(std::span<const double> x, std::vector<std::size_t>& next) {
  const std::size_t n = x.size();
  next.assign(n, n - 1);
  for (std::size_t k = n - 1; k-- > 0;) {
    next[k] = k + 1;
    while (true) {
      const std::size_t q = next[k];
      if (q == n - 1) break;
      const std::size_t qq = next[q];
      if ((x[k] - x[q]) * (static_cast<double>(q) - static_cast<double>(qq)) <
          (x[q] - x[qq]) * (static_cast<double>(k) - static_cast<double>(q)))
        break;
      next[k] = qq;
    }
  }
}

// Largest deviation of the CDF above a minorant segment between corners
// jb < je, measured in 2n units. 1 is the resolution floor of the statistic.
double minorant_deviation(std::span<const double> x, std::size_t jb, std::size_t je) {
  double best = 1.0;
  if (je - jb > 1 && x[je] != x[jb]) {
    const double c = static_cast<double>(je - jb) / (x[je] - x[jb]);
    for (std::size_t jj = jb; jj <= je; ++jj) {
      const double t = static_cast<double>(jj - jb + 1) - (x[jj] - x[jb]) * c;
      if (t > best) best = t;
    }
  }
  return best;
}

double majorant_deviation(std::span<const double> x, std::size_t jb, std::size_t je) {
  double best = 1.0;
  if (je - jb > 1 && x[je] != x[jb]) {
    const double c = static_cast<double>(je - jb) / (x[je] - x[jb]);
    for (std::size_t jj = jb; jj <= je; ++jj) {
      const double t = (x[jj] - x[jb]) * c - (static_cast<double>(jj - jb) - 1.0);
      if (t > best) best = t;
    }
  }
  return best;
}

struct Core {
  double dip_2n;  // dip in 2n units
  std::size_t lo, hi;
};

// Modal-window refinement over the sorted sample. Repeatedly fits the convex
// minorant / concave majorant over the current window [low, high], walks both
// corner chains to find their largest cross distance d, and either stops
// (d no longer exceeds the dip collected so far) or records the deviations
// outside the tighter window and shrinks into it.
Core dip_core(std::span<const double> x) {
  const std::size_t n = x.size();
  std::vector<std::size_t> mn, mj;
  minorant_chain(x, mn);
  majorant_chain(x, mj);

  std::size_t low = 0, high = n - 1;
  double dip = 1.0;
  std::vector<std::size_t> g, l;  // corner indexes: g high->low, l low->high

  while (true) {
    g.clear();
    g.push_back(high);
    while (g.back() > low) g.push_back(mn[g.back()]);
    l.clear();
    l.push_back(low);
    while (l.back() < high) l.push_back(mj[l.back()]);
    const std::size_t gl = g.size(), ll = l.size();

    std::size_t ig = gl - 1, ih = ll - 1;
    double d = 0.0;
    if (gl != 2 || ll != 2) {
      std::ptrdiff_t ix = static_cast<std::ptrdiff_t>(gl) - 2;
      std::size_t iv = 1;
      do {
        const std::size_t gi = g[static_cast<std::size_t>(ix)];
        const std::size_t li = l[iv];
        if (gi > li) {
          // majorant corner li against the minorant chord ending at gi
          const std::size_t jb = g[static_cast<std::size_t>(ix) + 1];
          const double dx = static_cast<double>(li - jb + 1) -
                            (x[li] - x[jb]) * static_cast<double>(gi - jb) / (x[gi] - x[jb]);
          const std::size_t at = iv;
          ++iv;
          if (dx >= d) {
            d = dx;
            ig = static_cast<std::size_t>(ix) + 1;
            ih = at;
          }
        } else {
          // minorant corner gi against the majorant chord ending at li
          const std::size_t jb = l[iv - 1];
          const double dx = (x[gi] - x[jb]) * static_cast<double>(li - jb) / (x[li] - x[jb]) -
                            (static_cast<double>(gi - jb) - 1.0);
          const std::size_t at = static_cast<std::size_t>(ix);
          --ix;
          if (dx >= d) {
            d = dx;
            ig = at;
            ih = iv;
          }
        }
        if (ix < 0) ix = 0;
        if (iv > ll - 1) iv = ll - 1;
      } while (g[static_cast<std::size_t>(ix)] != l[iv]);
    } else {
      d = 1.0;
    }

    if (d < dip) break;

    double dip_l = 0.0;
    for (std::size_t s = ig; s + 1 < gl; ++s)
      dip_l = std::max(dip_l, minorant_deviation(x, g[s + 1], g[s]));
    double dip_u = 0.0;
    for (std::size_t s = ih; s + 1 < ll; ++s)
      dip_u = std::max(dip_u, majorant_deviation(x, l[s], l[s + 1]));
    dip = std::max(dip, std::max(dip_l, dip_u));

    const std::size_t low2 = g[ig], high2 = l[ih];
    if (low2 == low && high2 == high) break;  // no further refinement possible
    low = low2;
    high = high2;
    if (low >= high) break;
  }
  return {dip, low, high};
}

DipResult degenerate_result(std::span<const double> sorted) {
  const std::size_t n = sorted.size();
  DipResult r;
  r.dip = 1.0 / (2.0 * static_cast<double>(n));
  r.modal_low = sorted.front();
  r.modal_high = sorted.back();
  r.modal_index_low = 0;
  r.modal_index_high = n - 1;
  return r;
}

}  // namespace

DipResult dip_statistic_sorted(std::span<const double> sorted) {
  check_finite(sorted);
  const std::size_t n = sorted.size();
  if (n < 4 || sorted.front() == sorted.back()) return degenerate_result(sorted);
  const Core core = dip_core(sorted);
  DipResult r;
  r.dip = core.dip_2n / (2.0 * static_cast<double>(n));
  r.modal_low = sorted[core.lo];
  r.modal_high = sorted[core.hi];
  r.modal_index_low = core.lo;
  r.modal_index_high = core.hi;
  return r;
}

DipResult dip_statistic(std::span<const double> sample) {
  check_finite(sample);
  std::vector<double> x(sample.begin(), sample.end());
  std::sort(x.begin(), x.end());
  return dip_statistic_sorted(x);
}

double dip_pvalue(double dip, std::size_t n, const DipConfig& cfg) {
  cfg.validate();
  if (n == 0) throw InvalidInput("dip_pvalue: n must be positive");
  if (!std::isfinite(dip) || dip < 0.0) throw InvalidInput("dip_pvalue: invalid dip value");

  const std::ptrdiff_t b = static_cast<std::ptrdiff_t>(cfg.bootstrap_b);
  std::size_t exceed = 0;
#pragma omp parallel for reduction(+ : exceed) schedule(static)
  for (std::ptrdiff_t q = 0; q < b; ++q) {
    SplitMix64 gen(derive_stream(cfg.rng_seed, /*tag=*/1, static_cast<std::uint64_t>(q)));
    std::vector<double> u(n);
    for (double& v : u) v = gen.next_unit();
    std::sort(u.begin(), u.end());
    if (dip_statistic_sorted(u).dip >= dip) ++exceed;
  }
  return static_cast<double>(exceed) / static_cast<double>(cfg.bootstrap_b);
}

DipResult dip_test(std::span<const double> sample, const DipConfig& cfg) {
  cfg.validate();
  check_finite(sample);
  std::vector<double> x(sample.begin(), sample.end());
  std::sort(x.begin(), x.end());
  DipResult r = dip_statistic_sorted(x);
  if (x.size() < 4 || x.front() == x.back()) {
    r.p_value = 1.0;  // unimodal by convention
  } else {
    r.p_value = dip_pvalue(r.dip, x.size(), cfg);
  }
  return r;
}

std::vector<double> batch_dips(const std::vector<std::vector<double>>& samples) {
  std::vector<double> out(samples.size());
  const std::ptrdiff_t m = static_cast<std::ptrdiff_t>(samples.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < m; ++i) {
    out[static_cast<std::size_t>(i)] = dip_statistic(samples[static_cast<std::size_t>(i)]).dip;
  }
  return out;
}

}  // namespace loclu
