#ifndef SYMTREE_REDUCTION_H_
#define SYMTREE_REDUCTION_H_

#include <vector>

#include "symtree/autotree.h"
#include "symtree/coloring.h"
#include "symtree/graph.h"

namespace symtree {

// Vertices with the same neighborhood and the same refined color form a
// class. Such twins are never adjacent, so G is recovered from the graph on
// class representatives by blowing each one up into an independent set.
struct StructuralReduction {
  Graph reduced_graph;
  // Equitable on reduced_graph; class sizes are part of the initial colors.
  Coloring reduced_coloring;
  // classes[r]: members of reduced vertex r in G, ascending; classes[r][0]
  // is the representative. Reduced ids follow ascending representatives.
  std::vector<std::vector<Vertex>> classes;
  // G vertex -> reduced vertex.
  std::vector<Vertex> reduced_of;

  bool trivial() const { return classes.size() == reduced_of.size(); }
};

// `refined` must be an equitable coloring of g (for example refine(g, pi)).
StructuralReduction reduce_structural_equivalence(const Graph& g, const Coloring& refined);

// Rebuilds a tree over g from a tree over the reduced graph: twins of a
// singleton leaf become extra singleton siblings, classmates of a leaf
// vertex join that leaf. Forms are recomputed over g.
AutoTree expand_structural_equivalence(const AutoTree& reduced_tree,
                                       const StructuralReduction& reduction,
                                       const Graph& g, unsigned threads = 1);

}  // namespace symtree

#endif  // SYMTREE_REDUCTION_H_
