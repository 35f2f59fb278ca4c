#include <utility>
#include <vector>

#include "doctest.h"
#include "loclu/dip.hpp"
#include "loclu/graph.hpp"
#include "loclu/rng.hpp"
#include "loclu/serial_kernels.hpp"
#include "loclu/synthetic.hpp"

// The OpenMP kernels must match their serial counterparts bit for bit: the
// parallel loops only distribute independent work items, they never reorder
// floating-point accumulation.

TEST_CASE("bootstrap p-value is identical serial vs parallel") {
  loclu::DipConfig cfg;
  cfg.bootstrap_b = 500;

  loclu::SplitMix64 rng(81);
  for (std::size_t trial = 0; trial < 6; ++trial) {
    const std::size_t n = 20 + 90 * trial;
    std::vector<double> x(n);
    for (double& v : x) v = (trial % 2) ? rng.next_normal() : rng.next_unit();
    const double dip = loclu::dip_statistic(x).dip;
    cfg.rng_seed = 1000 + trial;

    const double serial = loclu::serial::dip_pvalue(dip, n, cfg);
    const double parallel = loclu::dip_pvalue(dip, n, cfg);
    CHECK(serial == parallel);
  }
}

TEST_CASE("batch dips are identical serial vs parallel") {
  loclu::SplitMix64 rng(82);
  std::vector<std::vector<double>> samples;
  for (std::size_t i = 0; i < 40; ++i) {
    std::vector<double> x(5 + rng.next_index(300));
    for (double& v : x) {
      v = rng.next_normal();
      if (i % 3 == 0 && rng.next_unit() < 0.5) v += 8.0;  // some bimodal
    }
    samples.push_back(std::move(x));
  }

  const std::vector<double> serial = loclu::serial::batch_dips(samples);
  const std::vector<double> parallel = loclu::batch_dips(samples);
  CHECK(serial == parallel);
}

TEST_CASE("transition step is identical serial vs parallel") {
  loclu::SyntheticSpec spec;
  spec.cluster_sizes = {400, 400};
  spec.p_in = 0.05;
  spec.p_out = 0.005;
  spec.d = 1;
  spec.rng_seed = 83;
  const loclu::Graph graph = loclu::generate(spec).graph;

  loclu::SplitMix64 rng(84);
  std::vector<double> v(graph.vertex_count());
  for (double& x : v) x = rng.next_normal();

  for (int step = 0; step < 5; ++step) {
    const std::vector<double> serial = loclu::serial::transition_apply(graph, v);
    const std::vector<double> parallel = loclu::transition_apply(graph, v);
    REQUIRE(serial == parallel);
    v = serial;
  }
}
