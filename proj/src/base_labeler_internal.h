#ifndef SYMTREE_SRC_BASE_LABELER_INTERNAL_H_
#define SYMTREE_SRC_BASE_LABELER_INTERNAL_H_

#include <cstdint>
#include <vector>

#include "local_graph.h"
#include "symtree/base_labeler.h"

namespace symtree::detail {

// Search on a local graph; cells must cover 0..g.size()-1. Form colors are
// the cell positions of `cells`.
IrResult ir_search(const LocalGraph& g, const std::vector<std::vector<std::uint32_t>>& cells);

}  // namespace symtree::detail

#endif  // SYMTREE_SRC_BASE_LABELER_INTERNAL_H_
