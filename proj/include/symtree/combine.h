#ifndef SYMTREE_COMBINE_H_
#define SYMTREE_COMBINE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "symtree/big_int.h"
#include "symtree/canonical_form.h"
#include "symtree/coloring.h"
#include "symtree/graph.h"
#include "symtree/permutation.h"

namespace symtree {

// Labels are parallel to the node coloring's carrier. A vertex's label is
// its global color plus its rank inside that color class, so labels of a
// node never collide with labels of a disjoint node of the same tree.
struct NodeLabeling {
  std::vector<Vertex> labels;
  CanonicalForm form;
};

NodeLabeling singleton_form(Vertex v, std::size_t color);

struct LeafLabeling {
  NodeLabeling labeling;
  // Aut(G[leaf], coloring) on indices into the carrier.
  std::vector<Permutation> generators;
  BigInt group_order = 1;
};

// Non-singleton leaf: canonical labeling of G[carrier] by the base labeler.
// Throws ContractViolation when node_coloring is discrete.
LeafLabeling combine_cl(const Graph& g, const Coloring& node_coloring);

struct ChildLabeling {
  std::span<const Vertex> vertices;  // ascending
  std::span<const Vertex> labels;    // parallel to vertices
  const CanonicalForm* form = nullptr;
  std::uint64_t tie_key = 0;         // orders children with equal forms
};

struct StructuralLabeling {
  NodeLabeling labeling;
  // Children indices in the order used: non-descending (form, tie_key).
  std::vector<std::size_t> order;
};

// Internal node: children are sorted, then each color class of the node is
// ranked by (child position, child label).
StructuralLabeling combine_st(const Graph& g, const Coloring& node_coloring,
                              std::span<const ChildLabeling> children);

}  // namespace symtree

#endif  // SYMTREE_COMBINE_H_
