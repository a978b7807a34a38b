#ifndef SYMTREE_REFINEMENT_H_
#define SYMTREE_REFINEMENT_H_

#include <span>

#include "symtree/coloring.h"
#include "symtree/graph.h"

namespace symtree {

// Coarsest equitable refinement of pi. Rounds recompute, for every vertex of
// a non-singleton cell, the sorted multiset of its neighbors' cell positions;
// a cell whose vertices disagree is replaced in place by sub-cells in
// ascending signature order. pi must color exactly 0..n-1.
Coloring refine(const Graph& g, const Coloring& pi);

// True when every two vertices of a cell have equally many neighbors in
// each cell (carrier must be 0..n-1).
bool is_equitable(const Graph& g, const Coloring& pi);

// pi restricted to `vertices`, cell order kept, global colors retained.
Coloring project(const Coloring& pi, std::span<const Vertex> vertices);

}  // namespace symtree

#endif  // SYMTREE_REFINEMENT_H_
