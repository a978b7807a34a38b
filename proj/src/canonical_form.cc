#include "symtree/canonical_form.h"

#include <algorithm>
#include <sstream>

#include "symtree/errors.h"

namespace symtree {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t x) {
  h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

}  // namespace

std::uint64_t CanonicalForm::digest() const {
  std::uint64_t h = mix(vertex_labels.size(), edges.size());
  for (auto [l, c] : vertex_labels) h = mix(h, (std::uint64_t{l} << 32) | c);
  for (auto [a, b] : edges) h = mix(h, (std::uint64_t{a} << 32) | b);
  return h;
}

std::strong_ordering compare_forms(const CanonicalForm& a, const CanonicalForm& b) {
  return a <=> b;
}

CanonicalForm make_form(const Graph& g, std::span<const Vertex> vertices,
                        std::span<const Vertex> labels,
                        std::span<const std::uint32_t> colors) {
  if (labels.size() != vertices.size() || colors.size() != vertices.size()) {
    throw ContractViolation("make_form: size mismatch");
  }
  CanonicalForm form;
  form.vertex_labels.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    form.vertex_labels.emplace_back(labels[i], colors[i]);
  }
  std::sort(form.vertex_labels.begin(), form.vertex_labels.end());
  // Label lookup by binary search over the sorted vertex ids.
  std::vector<std::pair<Vertex, Vertex>> label_of;
  label_of.reserve(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) label_of.emplace_back(vertices[i], labels[i]);
  std::sort(label_of.begin(), label_of.end());
  auto find = [&](Vertex v) -> const std::pair<Vertex, Vertex>* {
    auto it = std::lower_bound(label_of.begin(), label_of.end(), std::make_pair(v, Vertex{0}));
    return (it != label_of.end() && it->first == v) ? &*it : nullptr;
  };
  for (auto [u, lu] : label_of) {
    for (Vertex w : g.neighbors(u)) {
      if (w <= u) continue;
      if (auto* p = find(w)) {
        form.edges.emplace_back(std::min(lu, p->second), std::max(lu, p->second));
      }
    }
  }
  std::sort(form.edges.begin(), form.edges.end());
  return form;
}

std::string serialize_certificate(const CanonicalForm& form) {
  for (std::size_t i = 0; i < form.vertex_labels.size(); ++i) {
    if (form.vertex_labels[i].first != i) {
      throw ContractViolation("certificate labels must be 0..n-1");
    }
  }
  std::ostringstream out;
  out << form.vertex_labels.size() << ' ' << form.edges.size() << '\n';
  for (std::size_t i = 0; i < form.vertex_labels.size(); ++i) {
    if (i) out << ' ';
    out << form.vertex_labels[i].second;
  }
  out << '\n';
  for (auto [a, b] : form.edges) out << a << ' ' << b << '\n';
  return out.str();
}

}  // namespace symtree
