#include "symtree/oracle.h"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <random>

#include "symtree/errors.h"

namespace symtree::oracle {

namespace {

// Position of each vertex's cell in pi.
std::vector<std::uint32_t> cell_positions(const Graph& g, const Coloring& pi) {
  const std::size_t n = g.num_vertices();
  if (pi.size() != n || (n > 0 && pi.carrier().back() + 1 != n)) {
    throw ContractViolation("oracle: coloring must cover the graph");
  }
  std::vector<std::uint32_t> out(n);
  for (std::size_t c = 0; c < pi.num_cells(); ++c) {
    for (Vertex v : pi.cell(c)) out[v] = static_cast<std::uint32_t>(pi.cell_start(c));
  }
  return out;
}

std::vector<std::vector<bool>> matrix(const Graph& g) {
  std::vector<std::vector<bool>> adj(g.num_vertices(), std::vector<bool>(g.num_vertices()));
  for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
  return adj;
}

// Iterated (color, sorted neighbor colors) until the number of classes stops
// growing. Every automorphism preserves the result.
std::vector<std::uint32_t> naive_classes(const Graph& g, std::vector<std::uint32_t> color) {
  const std::size_t n = g.num_vertices();
  std::size_t classes = std::set<std::uint32_t>(color.begin(), color.end()).size();
  for (;;) {
    std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>, std::uint32_t> ids;
    std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> keys(n);
    for (Vertex v = 0; v < n; ++v) {
      keys[v].first = color[v];
      for (Vertex w : g.neighbors(v)) keys[v].second.push_back(color[w]);
      std::sort(keys[v].second.begin(), keys[v].second.end());
      ids.emplace(keys[v], 0);
    }
    std::uint32_t next = 0;
    for (auto& [k, id] : ids) id = next++;
    for (Vertex v = 0; v < n; ++v) color[v] = ids[keys[v]];
    if (ids.size() == classes) return color;
    classes = ids.size();
  }
}

}  // namespace

CanonicalForm brute_canon(const Graph& g, const Coloring& pi) {
  const std::size_t n = g.num_vertices();
  if (n > kMaxCanonVertices) throw ContractViolation("brute_canon: graph too large");
  cell_positions(g, pi);  // validates the carrier
  auto edges = g.edges();
  // Per cell, the vertices and their label range start.
  std::vector<std::vector<Vertex>> groups;
  for (std::size_t c = 0; c < pi.num_cells(); ++c) {
    auto cell = pi.cell(c);
    groups.emplace_back(cell.begin(), cell.end());
  }
  std::vector<Vertex> label(n);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> best;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cur;
  bool have = false;
  // Odometer over per-cell permutations.
  for (;;) {
    for (std::size_t c = 0; c < groups.size(); ++c) {
      for (std::size_t i = 0; i < groups[c].size(); ++i) {
        label[groups[c][i]] = static_cast<Vertex>(pi.cell_start(c) + i);
      }
    }
    cur.clear();
    for (auto [u, v] : edges) cur.emplace_back(std::min(label[u], label[v]), std::max(label[u], label[v]));
    std::sort(cur.begin(), cur.end());
    if (!have || cur < best) {
      best = cur;
      have = true;
    }
    std::size_t c = 0;
    while (c < groups.size() && !std::next_permutation(groups[c].begin(), groups[c].end())) ++c;
    if (c == groups.size()) break;
  }
  CanonicalForm form;
  for (std::size_t c = 0; c < pi.num_cells(); ++c) {
    for (std::size_t i = 0; i < pi.cell(c).size(); ++i) {
      form.vertex_labels.emplace_back(static_cast<std::uint32_t>(pi.cell_start(c) + i),
                                      static_cast<std::uint32_t>(pi.cell_start(c)));
    }
  }
  form.edges = std::move(best);
  return form;
}

std::vector<Permutation> brute_aut(const Graph& g, const Coloring& pi) {
  const std::size_t n = g.num_vertices();
  if (n > kMaxAutVertices) throw ContractViolation("brute_aut: graph too large");
  std::vector<std::uint32_t> cls = naive_classes(g, cell_positions(g, pi));
  auto adj = matrix(g);
  std::vector<Vertex> image(n);
  std::vector<bool> used(n, false);
  std::vector<Permutation> out;
  auto extend = [&](auto&& self, Vertex v) -> void {
    if (v == n) {
      out.emplace_back(image);
      return;
    }
    for (Vertex c = 0; c < n; ++c) {
      if (used[c] || cls[c] != cls[v]) continue;
      bool ok = true;
      for (Vertex u = 0; u < v && ok; ++u) ok = adj[u][v] == adj[image[u]][c];
      if (!ok) continue;
      used[c] = true;
      image[v] = c;
      self(self, v + 1);
      used[c] = false;
    }
  };
  extend(extend, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::set<std::vector<Vertex>> brute_ssm(std::span<const Permutation> automorphisms,
                                        std::span<const Vertex> q) {
  std::set<std::vector<Vertex>> out;
  for (const auto& p : automorphisms) {
    std::vector<Vertex> img;
    for (Vertex v : q) img.push_back(p(v));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    out.insert(std::move(img));
  }
  return out;
}

std::set<std::vector<Vertex>> brute_ssm(const Graph& g, const Coloring& pi,
                                        std::span<const Vertex> q) {
  auto auts = brute_aut(g, pi);
  return brute_ssm(auts, q);
}

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = i + 1; j < n; ++j, ++bit) {
      if ((mask >> bit) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

void for_each_graph(std::size_t n, const std::function<void(const Graph&)>& f) {
  if (n > 7) throw ContractViolation("for_each_graph: n too large");
  std::size_t pairs = n * (n - (n > 0)) / 2;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    f(graph_from_mask(n, mask));
  }
}

std::vector<Graph> sample_graphs(std::size_t n, std::size_t count, std::uint64_t seed) {
  if (n > 12) throw ContractViolation("sample_graphs: n too large");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(0.5);
  std::vector<Graph> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Edge> edges;
    for (Vertex a = 0; a < n; ++a) {
      for (Vertex b = a + 1; b < n; ++b) {
        if (coin(rng)) edges.emplace_back(a, b);
      }
    }
    out.emplace_back(n, edges);
  }
  return out;
}

}  // namespace symtree::oracle
