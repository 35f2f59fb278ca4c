#pragma once

#include <cstddef>
#include <span>

namespace loclu {

// Brute-force dip statistic, used to validate dip_statistic. Enumerates every
// candidate modal interval over the distinct values and measures, via explicit
// hull constructions, the smallest uniform band 2h that admits a unimodal CDF
// (convex up to the interval, one line across it, concave after). Roughly
// cubic in the number of distinct values; intended for n up to ~500.
// Deliberately shares no code with the fast path.
double dip_reference(std::span<const double> sample);

}  // namespace loclu
