#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "symtree/canonical_form.h"
#include "symtree/coloring.h"
#include "symtree/errors.h"
#include "symtree/graph.h"
#include "symtree/graph_io.h"
#include "symtree/oracle.h"
#include "test_util.h"

namespace symtree {
namespace {

using testing::apex;

std::vector<Vertex> nb(const Graph& g, Vertex v) {
  auto s = g.neighbors(v);
  return {s.begin(), s.end()};
}

TEST(LoadEdgeList, ApexFixture) {
  auto lg = testing::load_fixture("apex.el");
  EXPECT_EQ(lg.graph, apex());
  EXPECT_EQ(lg.graph.num_vertices(), 8u);
  EXPECT_EQ(lg.graph.num_edges(), 14u);
  EXPECT_EQ(nb(lg.graph, 0), nb(lg.graph, 2));
  EXPECT_EQ(nb(lg.graph, 1), nb(lg.graph, 3));
  EXPECT_EQ(nb(lg.graph, 0), (std::vector<Vertex>{1, 3, 7}));
}

TEST(LoadEdgeList, DropsDuplicatesAndSelfLoops) {
  std::istringstream in("0 1\n1 0\n2 2\n0 1\n");
  Graph g = load_edge_list(in);
  EXPECT_EQ(g.num_vertices(), 3u);
  EXPECT_EQ(g.num_edges(), 1u);
  EXPECT_EQ(g.degree(2), 0u);
}

TEST(LoadEdgeList, CommentsOnlyGivesEmptyGraph) {
  std::istringstream in("# nothing\n# here\n");
  Graph g = load_edge_list(in);
  EXPECT_EQ(g.num_vertices(), 0u);
  EXPECT_EQ(g.num_edges(), 0u);
}

TEST(LoadEdgeList, CompactsIdsInFirstAppearanceOrder) {
  std::istringstream in("10 5\n5 7\n");
  std::vector<std::uint64_t> ids;
  Graph g = load_edge_list(in, &ids);
  EXPECT_EQ(ids, (std::vector<std::uint64_t>{10, 5, 7}));
  EXPECT_TRUE(g.has_edge(0, 1));
  EXPECT_TRUE(g.has_edge(1, 2));
  EXPECT_FALSE(g.has_edge(0, 2));
}

TEST(LoadEdgeList, MalformedTokenReportsLine) {
  std::istringstream in("0 1\n# ok\n1 x\n");
  try {
    load_edge_list(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  std::istringstream three("0 1 2\n");
  EXPECT_THROW(load_edge_list(three), ParseError);
  std::istringstream negative("0 -1\n");
  EXPECT_THROW(load_edge_list(negative), ParseError);
}

TEST(LoadDimacs, HeaderOnly) {
  std::istringstream in("c comment\np edge 3 0\n");
  auto d = load_dimacs(in);
  EXPECT_EQ(d.graph.num_vertices(), 3u);
  EXPECT_EQ(d.graph.num_edges(), 0u);
  EXPECT_TRUE(d.coloring.is_unit());
}

TEST(LoadDimacs, DuplicateEdgeLinesCountTowardHeader) {
  std::istringstream in("p edge 2 2\ne 1 2\ne 1 2\n");
  auto d = load_dimacs(in);
  EXPECT_EQ(d.graph.num_edges(), 1u);
}

TEST(LoadDimacs, Errors) {
  std::istringstream mismatch("p edge 3 2\ne 1 2\n");
  EXPECT_THROW(load_dimacs(mismatch), ParseError);
  std::istringstream range("p edge 2 1\ne 1 3\n");
  try {
    load_dimacs(range);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
  std::istringstream no_header("e 1 2\n");
  EXPECT_THROW(load_dimacs(no_header), ParseError);
  std::istringstream twice("p edge 2 0\np edge 2 0\n");
  EXPECT_THROW(load_dimacs(twice), ParseError);
  std::istringstream junk("p edge 2 0\nx 1\n");
  EXPECT_THROW(load_dimacs(junk), ParseError);
}

TEST(LoadDimacs, VertexColors) {
  std::istringstream in("p edge 4 3\ne 1 2\ne 2 3\ne 3 4\nn 2 5\nn 3 5\n");
  auto d = load_dimacs(in);
  ASSERT_EQ(d.coloring.num_cells(), 2u);
  EXPECT_EQ(d.coloring.cells()[0], (std::vector<Vertex>{0, 3}));
  EXPECT_EQ(d.coloring.cells()[1], (std::vector<Vertex>{1, 2}));
}

TEST(ApplyPermutation, ApexExamples) {
  Graph g = apex();
  auto gamma1 = Permutation::from_cycles(8, {{1, 3}, {5, 7}});
  EXPECT_NE(apply_permutation(g, gamma1), g);

  auto gamma2 = Permutation::from_cycles(8, {{0, 1}});
  auto moved = apply_permutation(g, gamma2).edges();
  auto original = g.edges();
  std::set<Edge> expected(original.begin(), original.end());
  expected.erase({0, 3});
  expected.erase({1, 2});
  expected.insert({0, 2});
  expected.insert({1, 3});
  EXPECT_EQ(std::set<Edge>(moved.begin(), moved.end()), expected);

  EXPECT_EQ(apply_permutation(g, Permutation::identity(8)), g);
  auto swap13 = Permutation::from_cycles(8, {{1, 3}});
  EXPECT_EQ(apply_permutation(g, swap13), g);
}

TEST(Permutation, RejectsNonBijection) {
  EXPECT_THROW(Permutation(std::vector<Vertex>{0, 0, 1}), ContractViolation);
  EXPECT_THROW(Permutation(std::vector<Vertex>{0, 3}), ContractViolation);
  EXPECT_THROW(apply_permutation(apex(), Permutation::identity(3)), ContractViolation);
}

TEST(Permutation, CycleString) {
  auto p = Permutation::from_cycles(8, {{5, 7}, {1, 3}});
  EXPECT_EQ(p.to_cycle_string(), "(1,3)(5,7)");
  EXPECT_EQ(Permutation::identity(4).to_cycle_string(), "()");
  EXPECT_EQ(Permutation::from_cycles(8, {{4, 5, 6}}).to_cycle_string(), "(4,5,6)");
}

TEST(Coloring, PermutedMovesCellsForward) {
  auto pi = Coloring::from_cells({{0, 1, 2}, {3, 4, 5, 6}, {7}});
  auto gamma = Permutation::from_cycles(8, {{1, 3}, {5, 7}});
  auto moved = pi.permuted(gamma);
  EXPECT_EQ(moved.cells(), (std::vector<std::vector<Vertex>>{{0, 2, 3}, {1, 4, 6, 7}, {5}}));
}

TEST(Coloring, ProjectKeepsGlobalColors) {
  auto pi = Coloring::from_cells({{0, 1, 2, 3, 4, 5, 6}, {7}});
  std::vector<Vertex> tri{4, 5, 6};
  auto p = pi.project(tri);
  EXPECT_EQ(p.cells(), (std::vector<std::vector<Vertex>>{{4, 5, 6}}));
  EXPECT_EQ(p.global_color(5), 0u);
  std::vector<Vertex> some{3, 7};
  auto q = pi.project(some);
  EXPECT_EQ(q.cells(), (std::vector<std::vector<Vertex>>{{3}, {7}}));
  EXPECT_EQ(q.position(7), 1u);
  EXPECT_EQ(q.global_color(7), 7u);
  EXPECT_FALSE(q.contains(4));
  EXPECT_THROW(q.cell_index(4), ContractViolation);
}

TEST(Coloring, RejectsBadCells) {
  EXPECT_THROW(Coloring::from_cells({{0, 1}, {}}), ContractViolation);
  EXPECT_THROW(Coloring::from_cells({{0, 1}, {1}}), ContractViolation);
}

TEST(CompareForms, DistinguishesK3FromP3) {
  Graph k3(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
  Graph p3(3, std::vector<Edge>{{0, 1}, {1, 2}});
  Graph p3b(3, std::vector<Edge>{{0, 2}, {1, 2}});
  auto unit = Coloring::unit(3);
  auto fk = oracle::brute_canon(k3, unit);
  auto fp = oracle::brute_canon(p3, unit);
  EXPECT_NE(compare_forms(fk, fp), std::strong_ordering::equal);
  EXPECT_EQ(compare_forms(fp, oracle::brute_canon(p3b, unit)), std::strong_ordering::equal);
}

TEST(CompareForms, VertexLabelsCompareBeforeEdges) {
  CanonicalForm a{{{0, 0}, {1, 0}}, {{0, 1}}};
  CanonicalForm b{{{0, 0}, {1, 1}}, {}};
  EXPECT_TRUE(compare_forms(a, b) < 0);
}

TEST(CanonicalForm, SerializeLayout) {
  CanonicalForm f{{{0, 0}, {1, 0}, {2, 2}}, {{0, 2}, {1, 2}}};
  EXPECT_EQ(serialize_certificate(f), "3 2\n0 0 2\n0 2\n1 2\n");
}

TEST(GraphCoreProperty, PermutationRoundTrip) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 1000; ++trial) {
    std::size_t n = 1 + rng() % 64;
    Graph g = testing::random_graph(rng, n, 0.1 + 0.3 * (trial % 3));
    Permutation p = testing::random_permutation(rng, n);
    ASSERT_EQ(apply_permutation(apply_permutation(g, p), p.inverse()), g);
    ASSERT_EQ(p.then(p.inverse()), Permutation::identity(n));
  }
}

TEST(GraphCoreProperty, SerializationIdempotent) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = rng() % 40;
    Graph g = testing::random_graph(rng, n, 0.15);
    std::stringstream s;
    save_edge_list(g, s);
    ASSERT_EQ(load_edge_list(s), g);
  }
}

TEST(GraphCoreProperty, FormOrderIsTotal) {
  std::mt19937_64 rng(13);
  std::vector<CanonicalForm> forms;
  for (int i = 0; i < 60; ++i) {
    std::size_t n = 1 + rng() % 5;
    Graph g = testing::random_graph(rng, n, 0.5);
    forms.push_back(oracle::brute_canon(g, testing::random_coloring(rng, n, 2)));
  }
  for (const auto& a : forms) {
    for (const auto& b : forms) {
      auto ab = compare_forms(a, b);
      auto ba = compare_forms(b, a);
      ASSERT_EQ(ab == 0, ba == 0);
      ASSERT_EQ(ab < 0, ba > 0);
      ASSERT_EQ(ab == 0, a == b);
      for (const auto& c : forms) {
        if (ab < 0 && compare_forms(b, c) < 0) ASSERT_TRUE(compare_forms(a, c) < 0);
      }
    }
  }
}

}  // namespace
}  // namespace symtree
