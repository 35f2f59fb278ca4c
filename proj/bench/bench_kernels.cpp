// Times the OpenMP kernels against their serial reference twins.
// Build and run manually; not part of the test suite.

#include <chrono>
#include <cstdio>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "loclu/dip.hpp"
#include "loclu/graph.hpp"
#include "loclu/rng.hpp"
#include "loclu/serial_kernels.hpp"
#include "loclu/synthetic.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

template <typename F>
double time_best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = clock_type::now();
    f();
    const auto t1 = clock_type::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

void report(const char* name, double serial_s, double parallel_s) {
  std::printf("%-18s serial %8.4fs   parallel %8.4fs   speedup %.2fx\n", name, serial_s,
              parallel_s, serial_s / parallel_s);
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; 'parallel' timings run the same serial code\n");
#endif

  // dip_pvalue: one statistic, many bootstrap replicates.
  {
    loclu::SplitMix64 rng(7);
    std::vector<double> sample(2000);
    for (double& x : sample) x = rng.next_normal();
    const double dip = loclu::dip_statistic(sample).dip;
    loclu::DipConfig cfg;
    cfg.bootstrap_b = 2000;
    double sink = 0;
    const double ts = time_best_of(
        3, [&] { sink += loclu::serial::dip_pvalue(dip, sample.size(), cfg); });
    const double tp =
        time_best_of(3, [&] { sink += loclu::dip_pvalue(dip, sample.size(), cfg); });
    report("dip_pvalue", ts, tp);
    if (sink < 0) std::printf("impossible\n");
  }

  // batch_dips: many independent columns.
  {
    loclu::SplitMix64 rng(8);
    std::vector<std::vector<double>> cols(64, std::vector<double>(4000));
    for (auto& c : cols)
      for (double& x : c) x = rng.next_unit();
    std::vector<double> out;
    const double ts = time_best_of(3, [&] { out = loclu::serial::batch_dips(cols); });
    const double tp = time_best_of(3, [&] { out = loclu::batch_dips(cols); });
    report("batch_dips", ts, tp);
  }

  // transition_apply: one random-walk step on a large sparse graph.
  {
    loclu::SyntheticSpec spec;
    spec.cluster_sizes = {20000, 20000};
    spec.p_in = 0.002;
    spec.p_out = 0.0005;
    spec.d = 1;
    spec.min_mean_separation = 0.0;
    spec.rng_seed = 9;
    const auto inst = loclu::generate(spec);
    std::vector<double> v(inst.graph.vertex_count(), 1.0 / inst.graph.vertex_count());
    std::vector<double> out;
    const double ts = time_best_of(5, [&] {
      for (int k = 0; k < 50; ++k) out = loclu::serial::transition_apply(inst.graph, v);
    });
    const double tp = time_best_of(5, [&] {
      for (int k = 0; k < 50; ++k) out = loclu::transition_apply(inst.graph, v);
    });
    if (out.empty()) std::printf("impossible\n");
    report("transition_apply", ts, tp);
  }

  return 0;
}
