#ifndef SYMTREE_SSM_H_
#define SYMTREE_SSM_H_

#include <cstddef>
#include <span>
#include <vector>

#include "symtree/autotree.h"

namespace symtree {

struct SsmMatch {
  // The image set, ascending.
  std::vector<Vertex> vertices;
  // witness[i] is the image of the i-th smallest query vertex under one
  // automorphism realizing this match.
  std::vector<Vertex> witness;
};

// All sets q^sigma, sigma in Aut(G, pi), q itself included, ascending by
// vertex list. Duplicate query ids are ignored. Needs a tree built with
// reduce = false; throws std::invalid_argument on an empty query, an
// out-of-range id or a reduced tree.
std::vector<SsmMatch> ssm(const AutoTree& tree, std::span<const Vertex> query);

// Deepest node whose vertex set contains every query vertex.
std::size_t deepest_node_containing(const AutoTree& tree, std::span<const Vertex> query);

// Images of q_part inside non-singleton leaf `leaf`: color-constrained
// induced matches of G[q_part] in G[leaf], kept only if they lie in the
// orbit of q_part under the leaf's group. Empty if q_part is not inside the
// leaf.
std::vector<std::vector<Vertex>> sm_leaf(const AutoTree& tree, std::size_t leaf,
                                         std::span<const Vertex> q_part);

}  // namespace symtree

#endif  // SYMTREE_SSM_H_
