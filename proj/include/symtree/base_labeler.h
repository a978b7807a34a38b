#ifndef SYMTREE_BASE_LABELER_H_
#define SYMTREE_BASE_LABELER_H_

#include <cstddef>
#include <span>
#include <vector>

#include "symtree/big_int.h"
#include "symtree/canonical_form.h"
#include "symtree/coloring.h"
#include "symtree/graph.h"
#include "symtree/permutation.h"

namespace symtree {

struct IrResult {
  // vertex -> canonical label in 0..n-1.
  Permutation labeling;
  // (g, pi) under `labeling`; a vertex's color is its cell position in pi.
  CanonicalForm form;
  // Generate Aut(g, pi). Every one is checked before it is returned.
  std::vector<Permutation> generators;
  // |Aut(g, pi)| from the stabilizer chain along the first search path.
  BigInt group_order = 1;
  std::size_t nodes_visited = 0;
};

// First non-singleton cell. Throws ContractViolation if c is discrete.
std::span<const Vertex> target_cell(const Coloring& c);

// Individualization-refinement search. pi must color exactly 0..n-1.
IrResult canonical_labeling_ir(const Graph& g, const Coloring& pi);

}  // namespace symtree

#endif  // SYMTREE_BASE_LABELER_H_
