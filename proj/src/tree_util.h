#ifndef SYMTREE_SRC_TREE_UTIL_H_
#define SYMTREE_SRC_TREE_UTIL_H_

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "symtree/autotree.h"

namespace symtree::detail {

inline void require_plain(const AutoTree& tree) {
  if (tree.reduced()) {
    throw std::invalid_argument(
        "operation needs a tree built without structural-equivalence reduction");
  }
}

// Maximal runs of consecutive equal-form children, as positions into
// node.children.
inline std::vector<std::vector<std::size_t>> equal_form_runs(const AutoTree& tree,
                                                             const AutoTreeNode& node) {
  std::vector<std::vector<std::size_t>> runs;
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    if (i > 0) {
      const AutoTreeNode& a = tree.node(node.children[i - 1]);
      const AutoTreeNode& b = tree.node(node.children[i]);
      if (a.digest == b.digest && a.form == b.form) {
        runs.back().push_back(i);
        continue;
      }
    }
    runs.push_back({i});
  }
  return runs;
}

// For nodes with equal forms: result[i] is the vertex of `to` carrying the
// label of from.vertices[i].
inline std::vector<Vertex> align(const AutoTreeNode& from, const AutoTreeNode& to) {
  std::unordered_map<Vertex, Vertex> by_label;
  by_label.reserve(to.vertices.size());
  for (std::size_t i = 0; i < to.vertices.size(); ++i) by_label[to.labels[i]] = to.vertices[i];
  std::vector<Vertex> out(from.vertices.size());
  for (std::size_t i = 0; i < from.vertices.size(); ++i) out[i] = by_label.at(from.labels[i]);
  return out;
}

// Index of v in the node's ascending vertex list.
inline std::size_t slot_of(const AutoTreeNode& node, Vertex v) {
  return static_cast<std::size_t>(
      std::lower_bound(node.vertices.begin(), node.vertices.end(), v) - node.vertices.begin());
}

}  // namespace symtree::detail

#endif  // SYMTREE_SRC_TREE_UTIL_H_
