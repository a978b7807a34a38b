#ifndef SYMTREE_CANONICAL_FORM_H_
#define SYMTREE_CANONICAL_FORM_H_

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symtree/graph.h"

namespace symtree {

// A labeled, colored graph reduced to plain data: (label, color) for every
// vertex sorted by label, and the relabeled edges (a < b) sorted. Forms are
// totally ordered: vertex labels first, then edges, both lexicographically.
struct CanonicalForm {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> vertex_labels;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;

  std::uint64_t digest() const;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

std::strong_ordering compare_forms(const CanonicalForm& a, const CanonicalForm& b);

// Form of G[vertices] where vertices[i] gets labels[i] and colors[i]. Edges
// are those of g with both endpoints in `vertices`.
CanonicalForm make_form(const Graph& g, std::span<const Vertex> vertices,
                        std::span<const Vertex> labels,
                        std::span<const std::uint32_t> colors);

// Text certificate. Line 1 "n m", line 2 the colors in label order, then one
// "a b" line per edge. Requires labels to be exactly 0..n-1.
std::string serialize_certificate(const CanonicalForm& form);

}  // namespace symtree

#endif  // SYMTREE_CANONICAL_FORM_H_
