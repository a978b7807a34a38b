#ifndef SYMTREE_TESTS_TEST_UTIL_H_
#define SYMTREE_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "symtree/autotree.h"
#include "symtree/coloring.h"
#include "symtree/graph.h"
#include "symtree/graph_io.h"
#include "symtree/permutation.h"

namespace symtree::testing {

inline Graph apex() {
  return Graph(8, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {4, 6},
                                    {0, 7}, {1, 7}, {2, 7}, {3, 7}, {4, 7}, {5, 7}, {6, 7}});
}

inline std::string fixture_path(const std::string& name) {
  return std::string(SYMTREE_FIXTURE_DIR) + "/" + name;
}

struct LabeledGraph {
  Graph graph;
  std::vector<std::uint64_t> ids;
  Vertex vertex(std::uint64_t original) const {
    return static_cast<Vertex>(std::find(ids.begin(), ids.end(), original) - ids.begin());
  }
  std::uint64_t original(Vertex v) const { return ids[v]; }
};

inline LabeledGraph load_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name));
  LabeledGraph lg;
  lg.graph = load_edge_list(in, &lg.ids);
  return lg;
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (coin(rng)) edges.emplace_back(a, b);
    }
  }
  return Graph(n, edges);
}

inline Permutation random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return Permutation(p);
}

// Random coloring with up to `colors` distinct values, cells in value order.
inline Coloring random_coloring(std::mt19937_64& rng, std::size_t n, std::size_t colors) {
  std::vector<std::uint64_t> values(n);
  for (auto& v : values) v = rng() % colors;
  return Coloring::from_values(values);
}

// Coloring on the local ids of induced_subgraph(g, c.carrier()).
inline Coloring localize(const Coloring& c) {
  auto carrier = c.carrier();
  std::vector<std::vector<Vertex>> cells;
  for (std::size_t i = 0; i < c.num_cells(); ++i) {
    std::vector<Vertex> cell;
    for (Vertex v : c.cell(i)) {
      cell.push_back(static_cast<Vertex>(std::lower_bound(carrier.begin(), carrier.end(), v) -
                                         carrier.begin()));
    }
    cells.push_back(std::move(cell));
  }
  return Coloring::from_cells(std::move(cells));
}

// Plain backtracking isomorphism test for colored graphs; the i-th cells
// of pa and pb must correspond.
inline bool isomorphic(const Graph& a, const Coloring& pa, const Graph& b, const Coloring& pb) {
  const std::size_t n = a.num_vertices();
  if (n != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  if (pa.num_cells() != pb.num_cells()) return false;
  for (std::size_t c = 0; c < pa.num_cells(); ++c) {
    if (pa.cell(c).size() != pb.cell(c).size()) return false;
  }
  std::vector<Vertex> image(n);
  std::vector<bool> used(n, false);
  auto extend = [&](auto&& self, Vertex v) -> bool {
    if (v == n) return true;
    for (Vertex c = 0; c < n; ++c) {
      if (used[c] || pa.cell_index(v) != pb.cell_index(c) || a.degree(v) != b.degree(c)) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) ok = a.has_edge(u, v) == b.has_edge(image[u], c);
      if (!ok) continue;
      used[c] = true;
      image[v] = c;
      if (self(self, v + 1)) return true;
      used[c] = false;
    }
    return false;
  };
  return extend(extend, 0);
}

// Size of the group generated by gens, by explicit closure. Only for small
// groups.
inline std::size_t closure_size(const std::vector<Permutation>& gens, std::size_t n) {
  std::set<Permutation> seen{Permutation::identity(n)};
  std::vector<Permutation> queue{Permutation::identity(n)};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const auto& g : gens) {
      Permutation next = queue[i].then(g);
      if (seen.insert(next).second) queue.push_back(next);
    }
  }
  return seen.size();
}

// Corpus used by the exactness checks: every graph with n <= 5 plus
// `sampled` random graphs with 6 or 7 vertices.
std::vector<Graph> small_corpus(std::size_t sampled, std::uint64_t seed);

// Node-by-node description of a tree following the sorted child order:
// (kind, number of children, form) per node in preorder.
inline std::vector<std::string> tree_shape(const AutoTree& tree) {
  std::vector<std::string> out;
  if (tree.empty()) return out;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    const AutoTreeNode& n = tree.node(stack.back());
    stack.pop_back();
    std::ostringstream s;
    s << static_cast<int>(n.kind) << '/' << n.children.size() << '/';
    for (auto [l, c] : n.form.vertex_labels) s << l << ':' << c << ',';
    s << '/';
    for (auto [x, y] : n.form.edges) s << x << '-' << y << ',';
    out.push_back(s.str());
    for (std::size_t i = n.children.size(); i-- > 0;) stack.push_back(n.children[i]);
  }
  return out;
}

}  // namespace symtree::testing

#endif  // SYMTREE_TESTS_TEST_UTIL_H_
