#ifndef SYMTREE_AUTOMORPHISM_H_
#define SYMTREE_AUTOMORPHISM_H_

#include <cstddef>
#include <span>
#include <vector>

#include "symtree/autotree.h"
#include "symtree/big_int.h"
#include "symtree/permutation.h"

namespace symtree {

// The functions below need a tree built with BuildOptions::reduce = false
// and throw std::invalid_argument otherwise.

// Generators of Aut(G, pi): lifted leaf generators plus, for every run of
// equal-form siblings, the swaps of adjacent siblings. Each is verified;
// a failure throws InternalConsistencyError.
std::vector<Permutation> generators(const AutoTree& tree);

// Orbit partition of <gens> on 0..n-1. Orbits ascending inside, ordered by
// smallest element.
std::vector<std::vector<Vertex>> orbits(std::span<const Permutation> gens, std::size_t n);

// Product of leaf group orders and k! for every run of k equal-form siblings.
BigInt group_order(const AutoTree& tree);

// Number of distinct sets S^sigma over sigma in Aut(G, pi).
BigInt count_set_images(const AutoTree& tree, std::span<const Vertex> s);

class AutomorphismIndex {
 public:
  explicit AutomorphismIndex(const AutoTree& tree);

  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<std::vector<Vertex>>& orbits() const { return orbits_; }
  const BigInt& group_order() const { return order_; }
  bool are_automorphic(Vertex u, Vertex v) const { return orbit_of_.at(u) == orbit_of_.at(v); }

 private:
  std::vector<Permutation> generators_;
  std::vector<std::vector<Vertex>> orbits_;
  std::vector<std::size_t> orbit_of_;
  BigInt order_;
};

bool are_automorphic(const AutoTree& tree, Vertex u, Vertex v);

}  // namespace symtree

#endif  // SYMTREE_AUTOMORPHISM_H_
