#ifndef SYMTREE_SRC_LOCAL_GRAPH_H_
#define SYMTREE_SRC_LOCAL_GRAPH_H_

#include <cstdint>
#include <span>
#include <vector>

#include "symtree/graph.h"

namespace symtree::detail {

// Induced subgraph with local ids 0..k-1 (local i is vertices[i]), adjacency
// sorted. Built without copying the whole parent graph.
struct LocalGraph {
  std::vector<std::uint32_t> offsets{0};
  std::vector<std::uint32_t> adjacency;
  std::size_t scanned = 0;  // parent adjacency entries read while building

  std::size_t size() const { return offsets.size() - 1; }
  std::size_t num_edges() const { return adjacency.size() / 2; }
  std::span<const std::uint32_t> neighbors(std::uint32_t v) const {
    return {adjacency.data() + offsets[v], adjacency.data() + offsets[v + 1]};
  }
  bool has_edge(std::uint32_t u, std::uint32_t v) const;
};

LocalGraph extract_local(const Graph& g, std::span<const Vertex> vertices);
LocalGraph local_from_graph(const Graph& g);

// Per-thread vertex -> local index scratch map over the whole graph, reset to
// -1 by the owner after use.
std::vector<std::int32_t>& scratch_index(std::size_t n);

}  // namespace symtree::detail

#endif  // SYMTREE_SRC_LOCAL_GRAPH_H_
