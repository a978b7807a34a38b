#ifndef SYMTREE_COLORING_H_
#define SYMTREE_COLORING_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "symtree/permutation.h"

namespace symtree {

// An ordered partition of a vertex set (the carrier) into non-empty cells.
// Within a cell vertices are kept ascending; the order of cells is
// meaningful. position(v) is the number of carrier vertices in cells before
// v's cell. global_color(v) is the position v had in the coloring this one
// was projected from (equal to position(v) for a coloring that was not
// produced by project()).
class Coloring {
 public:
  Coloring() : starts_{0} {}

  // Single cell holding 0..n-1.
  static Coloring unit(std::size_t n);
  // Throws ContractViolation on empty cells or a vertex occurring twice.
  static Coloring from_cells(std::vector<std::vector<Vertex>> cells);
  // Carrier 0..n-1; one cell per distinct value, cells by ascending value.
  static Coloring from_values(std::span<const std::uint64_t> values);

  std::size_t size() const { return elements_.size(); }
  std::size_t num_cells() const { return starts_.size() - 1; }
  std::span<const Vertex> cell(std::size_t i) const {
    return {elements_.data() + starts_[i], elements_.data() + starts_[i + 1]};
  }
  std::size_t cell_start(std::size_t i) const { return starts_[i]; }
  std::span<const Vertex> carrier() const { return carrier_; }
  std::vector<std::vector<Vertex>> cells() const;

  bool contains(Vertex v) const;
  // The following throw ContractViolation if v is not in the carrier.
  std::size_t cell_index(Vertex v) const { return slot_cell_[slot(v)]; }
  std::size_t position(Vertex v) const { return starts_[cell_index(v)]; }
  std::size_t global_color(Vertex v) const { return slot_global_[slot(v)]; }

  bool is_discrete() const { return num_cells() == size(); }
  bool is_unit() const { return num_cells() <= 1; }

  // Cells mapped forward: v^gamma lands where v was. Global colors follow
  // their vertex. Requires every carrier vertex to be < gamma.size().
  Coloring permuted(const Permutation& gamma) const;

  // Cells restricted to `vertices` (empty cells dropped, order kept); each
  // vertex keeps its global color.
  Coloring project(std::span<const Vertex> vertices) const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  // Builds lookup tables; `globals` is parallel to elements_ (empty means
  // global color = position).
  void finish(std::vector<std::size_t> globals);
  std::size_t slot(Vertex v) const;

  std::vector<Vertex> elements_;
  std::vector<std::size_t> starts_;
  std::vector<Vertex> carrier_;
  std::vector<std::uint32_t> slot_cell_;
  std::vector<std::size_t> slot_global_;
  bool dense_ = true;
};

}  // namespace symtree

#endif  // SYMTREE_COLORING_H_
