#ifndef SYMTREE_ORACLE_H_
#define SYMTREE_ORACLE_H_

// Exhaustive reference implementations for tests. Nothing here calls the
// refinement, search or tree code.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <vector>

#include "symtree/canonical_form.h"
#include "symtree/coloring.h"
#include "symtree/graph.h"
#include "symtree/permutation.h"

namespace symtree::oracle {

inline constexpr std::size_t kMaxCanonVertices = 8;
inline constexpr std::size_t kMaxAutVertices = 16;

// Minimum form of (g, pi)^gamma over every bijection that sends the i-th
// cell of pi onto that cell's label range. Colors are cell positions in pi.
// Throws ContractViolation for n > kMaxCanonVertices.
CanonicalForm brute_canon(const Graph& g, const Coloring& pi);

// Every automorphism of (g, pi), identity included, ascending. Candidate
// images are restricted by a naive degree-profile refinement of its own.
// Throws ContractViolation for n > kMaxAutVertices.
std::vector<Permutation> brute_aut(const Graph& g, const Coloring& pi);

// { q^sigma : sigma in Aut(g, pi) } as ascending vertex lists.
std::set<std::vector<Vertex>> brute_ssm(const Graph& g, const Coloring& pi,
                                        std::span<const Vertex> q);
std::set<std::vector<Vertex>> brute_ssm(std::span<const Permutation> automorphisms,
                                        std::span<const Vertex> q);

// Graph whose edge set is the bits of `mask` over pairs (i, j), i < j, in
// lexicographic order.
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

// Calls f on all 2^(n(n-1)/2) labeled graphs on n vertices (n <= 7).
void for_each_graph(std::size_t n, const std::function<void(const Graph&)>& f);

// `count` graphs on n vertices (n <= 12) with each edge present with
// probability 1/2, from a fixed seed.
std::vector<Graph> sample_graphs(std::size_t n, std::size_t count, std::uint64_t seed);

}  // namespace symtree::oracle

#endif  // SYMTREE_ORACLE_H_
