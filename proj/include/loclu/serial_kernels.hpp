#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "loclu/dip.hpp"

namespace loclu {

class Graph;

// Plain single-threaded counterparts of the OpenMP kernels. They are written
// as straightforward loops and must produce bit-identical results; the tests
// compare them against the parallel paths and the bench target times both.
namespace serial {

double dip_pvalue(double dip, std::size_t n, const DipConfig& cfg);

std::vector<double> batch_dips(const std::vector<std::vector<double>>& samples);

std::vector<double> transition_apply(const Graph& graph, std::span<const double> v);

}  // namespace serial
}  // namespace loclu
