#include "symtree/permutation.h"

#include <algorithm>

#include "symtree/errors.h"

namespace symtree {

Permutation::Permutation(std::vector<Vertex> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Vertex v : images_) {
    if (v >= images_.size() || seen[v]) {
      throw ContractViolation("permutation is not a bijection");
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.images_.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.images_[i] = static_cast<Vertex>(i);
  return p;
}

Permutation Permutation::from_cycles(std::size_t n,
                                     const std::vector<std::vector<Vertex>>& cycles) {
  std::vector<Vertex> images(n);
  for (std::size_t i = 0; i < n; ++i) images[i] = static_cast<Vertex>(i);
  std::vector<bool> used(n, false);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      Vertex a = cycle[i];
      Vertex b = cycle[(i + 1) % cycle.size()];
      if (a >= n || b >= n || used[a]) {
        throw ContractViolation("invalid cycle notation");
      }
      used[a] = true;
      images[a] = b;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<Vertex>(i);
  return p;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.size() != size()) throw ContractViolation("permutation sizes differ");
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[i] = next.images_[images_[i]];
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::vector<Vertex> Permutation::moved_points() const {
  std::vector<Vertex> out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) out.push_back(static_cast<Vertex>(i));
  }
  return out;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> done(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (done[start] || images_[start] == start) continue;
    out += '(';
    Vertex v = static_cast<Vertex>(start);
    bool first = true;
    while (!done[v]) {
      done[v] = true;
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
      v = images_[v];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace symtree
