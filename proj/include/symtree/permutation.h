#ifndef SYMTREE_PERMUTATION_H_
#define SYMTREE_PERMUTATION_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace symtree {

using Vertex = std::uint32_t;

// A bijection of {0, ..., n-1}. p(v) is the image v^p.
class Permutation {
 public:
  Permutation() = default;
  // Throws ContractViolation unless images is a bijection of [0, size).
  explicit Permutation(std::vector<Vertex> images);

  static Permutation identity(std::size_t n);
  // Cycles use the (a,b,c) convention: a -> b -> c -> a.
  static Permutation from_cycles(std::size_t n,
                                 const std::vector<std::vector<Vertex>>& cycles);

  std::size_t size() const { return images_.size(); }
  Vertex operator()(Vertex v) const { return images_[v]; }
  std::span<const Vertex> images() const { return images_; }

  Permutation inverse() const;
  // First this, then next: v -> next(this(v)).
  Permutation then(const Permutation& next) const;
  bool is_identity() const;
  std::vector<Vertex> moved_points() const;

  // Fixed points omitted, smallest element first in each cycle, cycles in
  // order of their smallest element. The identity prints as "()".
  std::string to_cycle_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<Vertex> images_;
};

}  // namespace symtree

#endif  // SYMTREE_PERMUTATION_H_
