#include <algorithm>
#include <vector>

#include "doctest.h"
#include "loclu/errors.hpp"
#include "loclu/local_clustering.hpp"
#include "loclu/matrix.hpp"
#include "loclu/rng.hpp"

using loclu::AttributeMatrix;
using loclu::CandidateSet;
using loclu::DipConfig;
using loclu::InvalidInput;
using loclu::local_clustering;

namespace {

AttributeMatrix one_column(std::vector<double> values) {
  AttributeMatrix m;
  m.rows = values.size();
  m.cols = 1;
  m.values = std::move(values);
  return m;
}

CandidateSet everyone(std::size_t n, std::uint32_t seed) {
  CandidateSet c;
  c.members.resize(n);
  for (std::size_t i = 0; i < n; ++i) c.members[i] = static_cast<std::uint32_t>(i);
  c.seed_id = seed;
  return c;
}

}  // namespace

TEST_CASE("three well-separated modes resolve to the seed's mode") {
  loclu::SplitMix64 rng(41);
  std::vector<double> vals;
  // modes at 0, 10, 20 with 120 points each, sd 0.1
  for (int m = 0; m < 3; ++m)
    for (int i = 0; i < 120; ++i) vals.push_back(10.0 * m + 0.1 * rng.next_normal());
  AttributeMatrix attrs = one_column(vals);
  DipConfig cfg;
  cfg.rng_seed = 41;

  for (std::uint32_t seed : {5u, 125u, 245u}) {
    CandidateSet out = local_clustering(everyone(360, seed), attrs, 0, cfg);
    CHECK(std::binary_search(out.members.begin(), out.members.end(), seed));
    // recovered set ~= the seed's mode of 120 points
    std::size_t correct = 0;
    for (auto m : out.members)
      if (m / 120 == seed / 120) ++correct;
    const double f1 = 2.0 * correct / (out.members.size() + 120.0);
    CHECK(f1 >= 0.95);
  }
}

TEST_CASE("already unimodal data is left unchanged") {
  loclu::SplitMix64 rng(42);
  std::vector<double> vals;
  for (int i = 0; i < 200; ++i) vals.push_back(rng.next_normal());
  AttributeMatrix attrs = one_column(vals);
  DipConfig cfg;
  cfg.rng_seed = 42;
  CandidateSet in = everyone(200, 3);
  CandidateSet out = local_clustering(in, attrs, 0, cfg);
  CHECK(out.members == in.members);
  CHECK(out.seed_id == 3);
}

TEST_CASE("a seed whose value is a lone top outlier ends alone") {
  // Two heavy atoms at 5 and 10, seed value 20 above both. The modal interval
  // lands on the upper atom, the seed is strictly above it, and the kept side
  // is just the seed itself.
  std::vector<double> vals;
  for (int i = 0; i < 30; ++i) vals.push_back(5);
  for (int i = 0; i < 30; ++i) vals.push_back(10);
  vals.push_back(20);
  AttributeMatrix attrs = one_column(vals);
  DipConfig cfg;
  cfg.rng_seed = 43;
  CandidateSet out = local_clustering(everyone(61, 60), attrs, 0, cfg);
  REQUIRE(out.members.size() == 1);
  CHECK(out.members[0] == 60);
}

TEST_CASE("a seed below the modal atom keeps only the lower side") {
  // Lone low value plus two balanced atoms: modal interval is the upper atom,
  // the kept side is the outlier plus the middle atom, and the follow-up test
  // on that side passes (single dominant atom sits at the dip floor).
  std::vector<double> vals{0};
  for (int i = 0; i < 30; ++i) vals.push_back(5);
  for (int i = 0; i < 30; ++i) vals.push_back(10);
  AttributeMatrix attrs = one_column(vals);
  DipConfig cfg;
  cfg.rng_seed = 43;
  CandidateSet out = local_clustering(everyone(61, 0), attrs, 0, cfg);
  REQUIRE(out.members.size() == 31);
  CHECK(out.members[0] == 0);
  for (std::size_t i = 1; i < out.members.size(); ++i) CHECK(out.members[i] == i);
}

TEST_CASE("singleton-ish modes end in a small set containing the seed") {
  // Every value distinct and spread out: the recursion must terminate and
  // never lose the seed.
  std::vector<double> vals;
  for (int i = 0; i < 24; ++i) vals.push_back(i * i * 1.37);
  AttributeMatrix attrs = one_column(vals);
  DipConfig cfg;
  cfg.rng_seed = 44;
  CandidateSet out = local_clustering(everyone(24, 11), attrs, 0, cfg);
  CHECK(std::binary_search(out.members.begin(), out.members.end(), 11u));
  CHECK(out.members.size() <= 24);
}

TEST_CASE("members only shrink, never grow") {
  loclu::SplitMix64 rng(45);
  std::vector<double> vals;
  for (int i = 0; i < 100; ++i) vals.push_back(rng.next_unit() < 0.5 ? rng.next_normal() : 6 + rng.next_normal());
  AttributeMatrix attrs = one_column(vals);
  DipConfig cfg;
  cfg.rng_seed = 45;
  CandidateSet in = everyone(100, 7);
  CandidateSet out = local_clustering(in, attrs, 0, cfg);
  CHECK(out.members.size() <= in.members.size());
  // every output member was an input member
  for (auto m : out.members) CHECK(std::binary_search(in.members.begin(), in.members.end(), m));
}

TEST_CASE("heavy ties cannot loop forever") {
  // Two atoms only: after one shrink the set is all-equal (degenerate dip,
  // p = 1 by convention) so the recursion stops.
  std::vector<double> vals;
  for (int i = 0; i < 50; ++i) vals.push_back(1.0);
  for (int i = 0; i < 50; ++i) vals.push_back(2.0);
  AttributeMatrix attrs = one_column(vals);
  DipConfig cfg;
  cfg.rng_seed = 46;
  CandidateSet out = local_clustering(everyone(100, 0), attrs, 0, cfg);
  CHECK(std::binary_search(out.members.begin(), out.members.end(), 0u));
  CHECK(out.members.size() <= 100);
}

TEST_CASE("input validation") {
  AttributeMatrix attrs = one_column({1, 2, 3, 4});
  DipConfig cfg;
  CandidateSet c = everyone(4, 0);

  CHECK_THROWS_AS((void)local_clustering(c, attrs, 1, cfg), InvalidInput);  // bad column

  CandidateSet bad = c;
  bad.seed_id = 9;  // seed not a member
  CHECK_THROWS_AS((void)local_clustering(bad, attrs, 0, cfg), InvalidInput);

  bad = c;
  bad.members = {2, 1};  // unsorted
  bad.seed_id = 1;
  CHECK_THROWS_AS((void)local_clustering(bad, attrs, 0, cfg), InvalidInput);

  bad = c;
  bad.members = {1, 1, 2};  // duplicate
  bad.seed_id = 1;
  CHECK_THROWS_AS((void)local_clustering(bad, attrs, 0, cfg), InvalidInput);

  bad = c;
  bad.members = {1, 7};  // out of range
  bad.seed_id = 1;
  CHECK_THROWS_AS((void)local_clustering(bad, attrs, 0, cfg), InvalidInput);

  bad = c;
  bad.members.clear();  // empty
  CHECK_THROWS_AS((void)local_clustering(bad, attrs, 0, cfg), InvalidInput);
}
