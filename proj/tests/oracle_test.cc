#include <gtest/gtest.h>

#include <random>
#include <set>

#include "symtree/errors.h"
#include "symtree/oracle.h"
#include "test_util.h"

namespace symtree {
namespace {

using Sets = std::set<std::vector<Vertex>>;

Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(n, edges);
}

TEST(BruteCanon, Examples) {
  Graph k3(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
  auto f = oracle::brute_canon(k3, Coloring::unit(3));
  EXPECT_EQ(f.edges, (std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 1}, {0, 2}, {1, 2}}));
  Graph p3(3, std::vector<Edge>{{0, 1}, {1, 2}});
  EXPECT_NE(oracle::brute_canon(p3, Coloring::unit(3)), f);
  Graph two_triangles(6, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  EXPECT_NE(oracle::brute_canon(cycle(6), Coloring::unit(6)),
            oracle::brute_canon(two_triangles, Coloring::unit(6)));
  // Colors are cell positions.
  auto colored = oracle::brute_canon(p3, Coloring::from_cells({{1}, {0, 2}}));
  EXPECT_EQ(colored.vertex_labels,
            (std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 0}, {1, 1}, {2, 1}}));
  EXPECT_EQ(colored.edges, (std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 1}, {0, 2}}));
}

TEST(BruteAut, Examples) {
  EXPECT_EQ(oracle::brute_aut(testing::apex(), Coloring::unit(8)).size(), 48u);
  EXPECT_EQ(oracle::brute_aut(cycle(4), Coloring::unit(4)).size(), 8u);
  // Spider with legs of length 1, 2 and 3.
  Graph tree(7, std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}});
  auto trivial = oracle::brute_aut(tree, Coloring::unit(7));
  ASSERT_EQ(trivial.size(), 1u);
  EXPECT_TRUE(trivial[0].is_identity());
  std::vector<Edge> k4;
  for (Vertex a = 0; a < 4; ++a) {
    for (Vertex b = a + 1; b < 4; ++b) k4.emplace_back(a, b);
  }
  EXPECT_EQ(oracle::brute_aut(Graph(4, k4), Coloring::unit(4)).size(), 24u);
  EXPECT_EQ(oracle::brute_aut(Graph(4, k4), Coloring::from_cells({{0}, {1, 2, 3}})).size(), 6u);
}

TEST(BruteSsm, Examples) {
  Graph g = testing::apex();
  Coloring unit = Coloring::unit(8);
  Vertex four[] = {4};
  Vertex seven[] = {7};
  std::vector<Vertex> all{0, 1, 2, 3, 4, 5, 6, 7};
  EXPECT_EQ(oracle::brute_ssm(g, unit, four), (Sets{{4}, {5}, {6}}));
  EXPECT_EQ(oracle::brute_ssm(g, unit, seven), (Sets{{7}}));
  EXPECT_EQ(oracle::brute_ssm(g, unit, all), (Sets{all}));
}

TEST(Oracle, Guards) {
  EXPECT_THROW(oracle::brute_canon(cycle(9), Coloring::unit(9)), ContractViolation);
  EXPECT_THROW(oracle::brute_aut(cycle(17), Coloring::unit(17)), ContractViolation);
  Vertex q[] = {0};
  EXPECT_THROW(oracle::brute_ssm(cycle(17), Coloring::unit(17), q), ContractViolation);
  EXPECT_EQ(oracle::brute_aut(cycle(16), Coloring::unit(16)).size(), 32u);
}

TEST(Oracle, Enumeration) {
  std::size_t count = 0;
  oracle::for_each_graph(2, [&](const Graph&) { ++count; });
  EXPECT_EQ(count, 2u);
  std::set<std::vector<Edge>> distinct;
  oracle::for_each_graph(3, [&](const Graph& g) { distinct.insert(g.edges()); });
  EXPECT_EQ(distinct.size(), 8u);
  auto sample = oracle::sample_graphs(12, 50, 7);
  EXPECT_EQ(sample.size(), 50u);
  EXPECT_EQ(sample, oracle::sample_graphs(12, 50, 7));
  std::size_t edges = 0;
  for (const auto& g : sample) edges += g.num_edges();
  // 66 pairs per graph at probability 1/2.
  EXPECT_NEAR(static_cast<double>(edges) / 50.0, 33.0, 4.0);
}

TEST(Oracle, IsomorphismClassCounts) {
  // Unlabeled graph counts for 4, 5 and 6 vertices.
  const std::size_t expected[] = {11, 34, 156};
  for (std::size_t n = 4; n <= 6; ++n) {
    std::set<CanonicalForm> classes;
    oracle::for_each_graph(n, [&](const Graph& g) {
      classes.insert(oracle::brute_canon(g, Coloring::unit(n)));
    });
    EXPECT_EQ(classes.size(), expected[n - 4]) << n;
  }
}

TEST(OracleProperty, AutomorphismsFormAGroup) {
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + rng() % 8;
    Graph g = testing::random_graph(rng, n, 0.2 + 0.2 * (trial % 3));
    Coloring pi = testing::random_coloring(rng, n, 1 + trial % 2);
    auto auts = oracle::brute_aut(g, pi);
    std::set<Permutation> group(auts.begin(), auts.end());
    ASSERT_TRUE(group.count(Permutation::identity(n)));
    for (int k = 0; k < 20; ++k) {
      const auto& a = auts[rng() % auts.size()];
      const auto& b = auts[rng() % auts.size()];
      ASSERT_TRUE(group.count(a.then(b)));
      ASSERT_TRUE(group.count(a.inverse()));
    }
    for (const auto& p : auts) {
      ASSERT_EQ(apply_permutation(g, p), g);
      for (Vertex v = 0; v < n; ++v) ASSERT_EQ(pi.cell_index(v), pi.cell_index(p(v)));
    }
    ASSERT_EQ(auts.size(), testing::closure_size(auts, n));
  }
}

TEST(OracleProperty, CanonIsInvariant) {
  std::mt19937_64 rng(82);
  for (int trial = 0; trial < 300; ++trial) {
    std::size_t n = 1 + rng() % 8;
    Graph g = testing::random_graph(rng, n, 0.3 + 0.1 * (trial % 3));
    Coloring pi = testing::random_coloring(rng, n, 1 + trial % 3);
    Permutation gamma = testing::random_permutation(rng, n);
    ASSERT_EQ(oracle::brute_canon(g, pi),
              oracle::brute_canon(apply_permutation(g, gamma), pi.permuted(gamma)));
    auto auts = oracle::brute_aut(g, pi);
    ASSERT_EQ(auts.size(), oracle::brute_aut(apply_permutation(g, gamma), pi.permuted(gamma)).size());
  }
}

}  // namespace
}  // namespace symtree
