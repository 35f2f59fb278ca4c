#include "loclu/dip_reference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "loclu/errors.hpp"

namespace loclu {
namespace {

// The sample collapses to distinct-value blocks. For block r at value v[r],
// a[r] is the cumulative count strictly before it (the CDF's lower corner)
// and b[r] the count through it (the upper corner). Everything below works in
// count units: a band of half-width h around the CDF corresponds to h counts.

struct Blocks {
  std::vector<double> v;
  std::vector<double> a, b;
};

Blocks collapse(const std::vector<double>& sorted) {
  Blocks bl;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    bl.v.push_back(sorted[i]);
    bl.a.push_back(static_cast<double>(i));
    bl.b.push_back(static_cast<double>(j));
    i = j;
  }
  return bl;
}

bool turns_right(double x0, double y0, double x1, double y1, double x2, double y2) {
  return (x1 - x0) * (y2 - y0) - (x2 - x0) * (y1 - y0) <= 0.0;
}

// Lower convex hull: drop the middle point when the path turns right-or-straight.
void push_lower(std::vector<std::size_t>& hull, const std::vector<double>& xs,
                const std::vector<double>& ys, std::size_t idx) {
  while (hull.size() >= 2) {
    const std::size_t m = hull[hull.size() - 1], f = hull[hull.size() - 2];
    if (turns_right(xs[f], ys[f], xs[m], ys[m], xs[idx], ys[idx]))
      hull.pop_back();
    else
      break;
  }
  hull.push_back(idx);
}

// Piecewise-linear function through the hull points, queried at ascending xs.
struct HullEval {
  const std::vector<double>& xs;
  const std::vector<double>& ys;
  const std::vector<std::size_t>& hull;
  std::size_t seg = 0;

  double at(double x) {
    while (seg + 1 < hull.size() && xs[hull[seg + 1]] < x) ++seg;
    const std::size_t p = hull[seg];
    if (seg + 1 == hull.size()) return ys[p];
    const std::size_t q = hull[seg + 1];
    if (xs[q] == xs[p]) return ys[p];
    return ys[p] + (x - xs[p]) * (ys[q] - ys[p]) / (xs[q] - xs[p]);
  }
};

}  // namespace

// A unimodal fit with modal interval [v[p], v[q]] and band half-width h is,
// outside the interval, the convex minorant of the lower corners shifted up
// by h on the left and the concave majorant of the upper corners shifted
// down by h on the right; across the interval it is the straight line
// joining the two shifted hull endpoints, (v[p], a[p]+h) to (v[q], b[q]-h).
// The smallest h admitting that fit is driven by three deviation families:
//   left:   upper corners poking above the left hull, b[r] - hull(v[r]) <= 2h
//   right:  lower corners poking below the right hull, hull(v[r]) - a[r] <= 2h
//   middle: both corners of every interior block within h of the line.
// The modal segment is the steepest part of a unimodal fit, so a candidate is
// only feasible while its line is at least as steep as the hull segments it
// joins; raising h flattens the line, which bounds h from above. Candidates
// whose bounds cross are skipped; the optimum always survives because it
// admits the canonical fit. The dip is the minimum over the rest, floored at
// half a count (the resolution of an empirical CDF), divided by n.
double dip_reference(std::span<const double> sample) {
  if (sample.empty()) throw InvalidInput("dip_reference: empty sample");
  for (double x : sample) {
    if (!std::isfinite(x)) throw InvalidInput("dip_reference: non-finite sample value");
  }
  std::vector<double> sorted(sample.begin(), sample.end());
  std::sort(sorted.begin(), sorted.end());
  const double n = static_cast<double>(sorted.size());
  if (sorted.size() < 4 || sorted.front() == sorted.back()) return 1.0 / (2.0 * n);

  const Blocks bl = collapse(sorted);
  const std::size_t k = bl.v.size();

  // left_dev[p]: largest gap from an upper corner left of block p up to the
  // lower hull of the a-corners through p. The hull grows incrementally; the
  // rescans keep this quadratic overall.
  std::vector<double> left_dev(k, 0.0), right_dev(k, 0.0);
  std::vector<double> left_slope(k, 0.0), right_slope(k, 0.0);
  {
    std::vector<std::size_t> hull;
    for (std::size_t p = 0; p < k; ++p) {
      push_lower(hull, bl.v, bl.a, p);
      HullEval ev{bl.v, bl.a, hull};
      double worst = 0.0;
      for (std::size_t r = 0; r < p; ++r) worst = std::max(worst, bl.b[r] - ev.at(bl.v[r]));
      left_dev[p] = worst;
      if (hull.size() >= 2) {
        const std::size_t m = hull[hull.size() - 1], f = hull[hull.size() - 2];
        left_slope[p] = (bl.a[m] - bl.a[f]) / (bl.v[m] - bl.v[f]);
      }
    }
  }
  {
    // Mirrored coordinates turn the concave majorant of the b-corners into a
    // lower hull built right to left; negating both axes preserves slopes, so
    // the mirrored hull's last slope is the original hull's first.
    std::vector<std::size_t> hull;
    std::vector<double> xs(k), ys(k);
    for (std::size_t i = 0; i < k; ++i) {
      xs[i] = -bl.v[k - 1 - i];
      ys[i] = -bl.b[k - 1 - i];
    }
    for (std::size_t qq = 0; qq < k; ++qq) {
      push_lower(hull, xs, ys, qq);
      HullEval ev{xs, ys, hull};
      double worst = 0.0;
      for (std::size_t r = 0; r < qq; ++r)
        worst = std::max(worst, -ev.at(xs[r]) - bl.a[k - 1 - r]);
      right_dev[k - 1 - qq] = worst;
      if (hull.size() >= 2) {
        const std::size_t m = hull[hull.size() - 1], f = hull[hull.size() - 2];
        right_slope[k - 1 - qq] = (ys[m] - ys[f]) / (xs[m] - xs[f]);
      }
    }
  }

  double best = std::numeric_limits<double>::infinity();
  for (std::size_t p = 0; p < k; ++p) {
    if (left_dev[p] / 2.0 >= best) continue;
    for (std::size_t q = p; q < k; ++q) {
      double h = std::max(left_dev[p], right_dev[q]) / 2.0;
      if (p == q) {
        // Single-block mode: the fit jumps by b[p] - a[p] - 2h at the mode,
        // which must not invert.
        if (h > (bl.b[p] - bl.a[p]) / 2.0) continue;
        best = std::min(best, h);
        continue;
      }
      h = std::max({h, (bl.b[p] - bl.a[p]) / 2.0, (bl.b[q] - bl.a[q]) / 2.0});
      const double span_v = bl.v[q] - bl.v[p];
      for (std::size_t r = p + 1; r < q; ++r) {
        const double lam = (bl.v[r] - bl.v[p]) / span_v;
        const double base = bl.a[p] + lam * (bl.b[q] - bl.a[p]);
        const double up = bl.b[r] - base;
        if (up > 0.0) h = std::max(h, up / (2.0 * (1.0 - lam)));
        const double down = base - bl.a[r];
        if (down > 0.0) h = std::max(h, down / (2.0 * lam));
      }
      // Maximum-slope condition: the shifted modal line may not end up
      // flatter than the hull segments it continues (this also keeps it from
      // sloping downward).
      const double steepest_join = std::max(left_slope[p], right_slope[q]);
      if (bl.b[q] - bl.a[p] - 2.0 * h < steepest_join * span_v) continue;
      best = std::min(best, h);
    }
  }

  return std::max(best, 0.5) / n;
}

}  // namespace loclu
