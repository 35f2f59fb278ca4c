#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "loclu/errors.hpp"
#include "loclu/io.hpp"
#include "loclu/rng.hpp"
#include "loclu/synthetic.hpp"

using loclu::AttributeMatrix;
using loclu::Graph;
using loclu::InvalidInput;
using loclu::ParseError;

namespace {

struct TempDir {
  std::filesystem::path dir;
  TempDir() {
    dir = std::filesystem::temp_directory_path() /
          ("loclu_io_test_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(dir);
  }
  ~TempDir() { std::filesystem::remove_all(dir); }
  std::string file(const std::string& name) const { return (dir / name).string(); }
  std::string write(const std::string& name, const std::string& content) const {
    const std::string p = file(name);
    std::ofstream out(p);
    out << content;
    return p;
  }
};

}  // namespace

TEST_CASE("graph round-trip") {
  TempDir tmp;
  loclu::SplitMix64 rng(71);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (std::uint32_t i = 0; i < 25; ++i)
    for (std::uint32_t j = i + 1; j < 25; ++j)
      if (rng.next_unit() < 0.2) edges.push_back({i, j});
  Graph g = Graph::from_edges(25, edges);

  const std::string p = tmp.file("g.edges");
  loclu::save_graph(p, g);
  Graph h = loclu::load_graph(p);
  CHECK(h.vertex_count() == 25);
  CHECK(h.edges() == g.edges());
}

TEST_CASE("graph loader semantics") {
  TempDir tmp;

  SUBCASE("n header fixes the vertex count beyond the max id") {
    Graph g = loclu::load_graph(tmp.write("a.edges", "n 7\n0 1\n1 2\n"));
    CHECK(g.vertex_count() == 7);
    CHECK(g.edge_count() == 2);
  }

  SUBCASE("without a header the count is max id + 1") {
    Graph g = loclu::load_graph(tmp.write("b.edges", "0 1\n4 2\n"));
    CHECK(g.vertex_count() == 5);
  }

  SUBCASE("comments and blank lines are skipped") {
    Graph g = loclu::load_graph(tmp.write("c.edges", "# a comment\n\nn 3\n# more\n0 2\n"));
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 1);
  }

  SUBCASE("self-loops and duplicates are counted, merged, dropped") {
    loclu::LoadStats stats;
    Graph g = loclu::load_graph(tmp.write("d.edges", "0 1\n1 0\n2 2\n0 1\n1 2\n"), &stats);
    CHECK(g.edge_count() == 2);  // {0,1} and {1,2}
    CHECK(stats.self_loops_dropped == 1);
    CHECK(stats.duplicate_edges_merged == 2);
  }

  SUBCASE("malformed lines carry line numbers") {
    try {
      (void)loclu::load_graph(tmp.write("e.edges", "0 1\nnot numbers\n"));
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 2);
    }
    CHECK_THROWS_AS((void)loclu::load_graph(tmp.write("f.edges", "0 1 9\n")), ParseError);
    CHECK_THROWS_AS((void)loclu::load_graph(tmp.write("g.edges", "n 2\n0 5\n")), ParseError);
    CHECK_THROWS_AS((void)loclu::load_graph(tmp.file("missing.edges")), InvalidInput);
  }
}

TEST_CASE("attribute round-trip is bit-exact") {
  TempDir tmp;
  loclu::SplitMix64 rng(72);
  AttributeMatrix m(40, 3);
  for (double& x : m.values) x = rng.next_normal() * 1e3;

  const std::string p = tmp.file("a.csv");
  loclu::save_attributes(p, m);
  AttributeMatrix r = loclu::load_attributes(p, 40);
  CHECK(r.rows == m.rows);
  CHECK(r.cols == m.cols);
  CHECK(r.values == m.values);  // %.17g round-trips doubles exactly
}

TEST_CASE("attribute loader") {
  TempDir tmp;

  SUBCASE("categorical columns are one-hot expanded over sorted values") {
    AttributeMatrix m = loclu::load_attributes(
        tmp.write("c.csv", "#types num,cat\n1.5,b\n2.5,a\n3.5,b\n"), 3);
    REQUIRE(m.rows == 3);
    REQUIRE(m.cols == 3);  // num + one-hot(a) + one-hot(b)
    CHECK(m.at(0, 0) == 1.5);
    CHECK(m.at(0, 1) == 0.0);  // a
    CHECK(m.at(0, 2) == 1.0);  // b
    CHECK(m.at(1, 1) == 1.0);
    CHECK(m.at(1, 2) == 0.0);
    CHECK(m.at(2, 1) == 0.0);
    CHECK(m.at(2, 2) == 1.0);
  }

  SUBCASE("ragged rows are rejected with the right line") {
    try {
      (void)loclu::load_attributes(tmp.write("r.csv", "1,2\n3\n"), SIZE_MAX);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 2);
    }
  }

  SUBCASE("non-finite and non-numeric cells are rejected") {
    CHECK_THROWS_AS((void)loclu::load_attributes(tmp.write("n.csv", "1,nan\n"), SIZE_MAX),
                    ParseError);
    CHECK_THROWS_AS((void)loclu::load_attributes(tmp.write("i.csv", "inf,2\n"), SIZE_MAX),
                    ParseError);
    CHECK_THROWS_AS((void)loclu::load_attributes(tmp.write("x.csv", "1,zz\n"), SIZE_MAX),
                    ParseError);
  }

  SUBCASE("row count must match the graph when known") {
    CHECK_THROWS_AS((void)loclu::load_attributes(tmp.write("m.csv", "1\n2\n"), 3), InvalidInput);
    CHECK_NOTHROW((void)loclu::load_attributes(tmp.write("ok.csv", "1\n2\n"), SIZE_MAX));
  }

  SUBCASE("misplaced types header is rejected") {
    CHECK_THROWS_AS((void)loclu::load_attributes(tmp.write("h.csv", "1\n#types num\n2\n"), SIZE_MAX),
                    ParseError);
  }

  SUBCASE("comment lines between rows are fine and error lines stay accurate") {
    try {
      (void)loclu::load_attributes(tmp.write("k.csv", "# note\n1.0\n# pad\nbad\n"), SIZE_MAX);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line == 4);
    }
  }
}

TEST_CASE("labels and member lists") {
  TempDir tmp;

  std::vector<std::uint32_t> labels{0, 0, 1, 1, 2};
  const std::string p = tmp.file("l.txt");
  loclu::save_labels(p, labels);
  CHECK(loclu::load_labels(p, 5) == labels);
  CHECK_THROWS_AS((void)loclu::load_labels(p, 4), InvalidInput);  // count mismatch

  std::vector<std::uint32_t> members{3, 1, 4};
  const std::string q = tmp.file("m.txt");
  loclu::save_member_list(q, members);
  CHECK(loclu::load_member_list(q, 10) == std::vector<std::uint32_t>{1, 3, 4});  // sorted
  CHECK_THROWS_AS((void)loclu::load_member_list(q, 4), InvalidInput);  // 4 out of range
}

TEST_CASE("generated instance survives a full save/load cycle") {
  TempDir tmp;
  loclu::SyntheticSpec spec;
  spec.cluster_sizes = {20, 20};
  spec.d = 3;
  spec.rng_seed = 73;
  loclu::SyntheticInstance inst = loclu::generate(spec);

  loclu::save_graph(tmp.file("i.edges"), inst.graph);
  loclu::save_attributes(tmp.file("i.csv"), inst.attributes);
  loclu::save_labels(tmp.file("i.labels"), inst.truth_labels);

  Graph g = loclu::load_graph(tmp.file("i.edges"));
  AttributeMatrix a = loclu::load_attributes(tmp.file("i.csv"), g.vertex_count());
  auto l = loclu::load_labels(tmp.file("i.labels"), g.vertex_count());
  CHECK(g.edges() == inst.graph.edges());
  CHECK(a.values == inst.attributes.values);
  CHECK(l == inst.truth_labels);
}
