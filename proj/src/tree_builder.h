#ifndef SYMTREE_SRC_TREE_BUILDER_H_
#define SYMTREE_SRC_TREE_BUILDER_H_

#include <cstdint>
#include <vector>

#include "symtree/autotree.h"
#include "symtree/reduction.h"

namespace symtree {

class TreeBuilder {
 public:
  // `refined` must be equitable on g.
  static AutoTree build_plain(const Graph& g, const Coloring& refined,
                              const BuildOptions& options);
  static AutoTree expand(const AutoTree& reduced_tree, const StructuralReduction& reduction,
                         const Graph& g, unsigned threads);

 private:
  static void divide_all(AutoTree& tree, const BuildOptions& options);
  // Labels every node bottom-up; tie_keys[i] breaks ties between children
  // with equal forms.
  static void label_all(AutoTree& tree, unsigned threads,
                        const std::vector<std::uint64_t>& tie_keys);
};

}  // namespace symtree

#endif  // SYMTREE_SRC_TREE_BUILDER_H_
