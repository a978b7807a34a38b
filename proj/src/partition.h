#ifndef SYMTREE_SRC_PARTITION_H_
#define SYMTREE_SRC_PARTITION_H_

#include <cstdint>
#include <vector>

#include "local_graph.h"

namespace symtree::detail {

// Ordered partition of 0..n-1 used by refinement and search. A cell is
// named by the index of its first element in `elems`.
class Partition {
 public:
  Partition() = default;
  // cells must cover 0..n-1 exactly.
  explicit Partition(const std::vector<std::vector<std::uint32_t>>& cells);

  std::uint32_t size() const { return static_cast<std::uint32_t>(elems_.size()); }
  std::uint32_t num_cells() const { return num_cells_; }
  bool discrete() const { return num_cells_ == elems_.size(); }
  std::uint32_t cell_of(std::uint32_t v) const { return start_[id_of_[v]]; }
  std::uint32_t cell_size(std::uint32_t start) const { return size_[id_at_[start]]; }
  std::uint32_t position_of(std::uint32_t v) const { return pos_[v]; }
  const std::vector<std::uint32_t>& elements() const { return elems_; }
  std::vector<std::uint32_t> cell_starts() const;

  // First non-singleton cell, or size() when discrete.
  std::uint32_t first_nonsingleton() const;

  // Replaces v's cell C by [{v} | C \ {v}] and records v in `changed`.
  void individualize(std::uint32_t v, std::vector<std::uint32_t>* changed);

  // Equitable refinement in rounds. In each round every vertex gets the
  // sorted multiset of its neighbors' cell starts as signature, and each
  // cell is replaced in place by its sub-cells in ascending signature order.
  // Only vertices next to a vertex that changed cell are recomputed, so the
  // partition must be equitable apart from the moves listed in `changed`.
  void refine(const LocalGraph& g, std::vector<std::uint32_t> changed);
  void refine_all(const LocalGraph& g);

  // Quotient summary: per cell, its size and the (cell, count) pairs of a
  // representative's neighbors. Equal for partitions related by isomorphism.
  std::vector<std::uint32_t> invariant(const LocalGraph& g) const;

 private:
  void run(const LocalGraph& g, bool full, std::vector<std::uint32_t> changed);

  std::vector<std::uint32_t> elems_;
  std::vector<std::uint32_t> pos_;
  // Cells have ids that survive splits; one part of a split keeps the id.
  std::vector<std::uint32_t> id_of_;
  std::vector<std::uint32_t> start_;  // by id
  std::vector<std::uint32_t> size_;   // by id
  std::vector<std::uint32_t> id_at_;  // by start
  std::uint32_t num_cells_ = 0;
};

}  // namespace symtree::detail

#endif  // SYMTREE_SRC_PARTITION_H_
