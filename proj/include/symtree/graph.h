#ifndef SYMTREE_GRAPH_H_
#define SYMTREE_GRAPH_H_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "symtree/permutation.h"

namespace symtree {

using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1, stored as sorted adjacency
// arrays. Self-loops and duplicate edges are dropped on construction.
class Graph {
 public:
  Graph() = default;
  // Throws ContractViolation if an endpoint is >= n.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, const std::vector<Edge>& edges)
      : Graph(n, std::span<const Edge>(edges)) {}

  std::size_t num_vertices() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t num_edges() const { return adjacency_.size() / 2; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  // Every edge once as (u, v) with u < v, in ascending order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
};

// G^gamma: edge (u, v) becomes (gamma(u), gamma(v)).
Graph apply_permutation(const Graph& g, const Permutation& gamma);

// The subgraph induced by `vertices`; vertex vertices[i] becomes i.
Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

}  // namespace symtree

#endif  // SYMTREE_GRAPH_H_
