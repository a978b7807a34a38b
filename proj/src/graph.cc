#include "symtree/graph.h"

#include <algorithm>

#include "symtree/errors.h"

namespace symtree {

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  std::vector<Edge> directed;
  directed.reserve(edges.size() * 2);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw ContractViolation("edge endpoint out of range");
    if (u == v) continue;
    directed.emplace_back(u, v);
    directed.emplace_back(v, u);
  }
  std::sort(directed.begin(), directed.end());
  directed.erase(std::unique(directed.begin(), directed.end()), directed.end());
  offsets_.assign(n + 1, 0);
  adjacency_.reserve(directed.size());
  for (auto [u, v] : directed) {
    ++offsets_[u + 1];
    adjacency_.push_back(v);
  }
  for (std::size_t i = 0; i < n; ++i) offsets_[i + 1] += offsets_[i];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph apply_permutation(const Graph& g, const Permutation& gamma) {
  if (gamma.size() != g.num_vertices()) {
    throw ContractViolation("permutation size does not match graph");
  }
  std::vector<Edge> edges = g.edges();
  for (auto& [u, v] : edges) {
    u = gamma(u);
    v = gamma(v);
  }
  return Graph(g.num_vertices(), edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<std::int64_t> local(g.num_vertices(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.num_vertices() || local[vertices[i]] != -1) {
      throw ContractViolation("invalid vertex list for induced subgraph");
    }
    local[vertices[i]] = static_cast<std::int64_t>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      if (local[w] > static_cast<std::int64_t>(i)) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(local[w]));
      }
    }
  }
  return Graph(vertices.size(), edges);
}

}  // namespace symtree
