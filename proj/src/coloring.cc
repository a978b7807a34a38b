#include "symtree/coloring.h"

#include <algorithm>
#include <map>

#include "symtree/errors.h"

namespace symtree {

Coloring Coloring::unit(std::size_t n) {
  Coloring c;
  c.elements_.resize(n);
  for (std::size_t i = 0; i < n; ++i) c.elements_[i] = static_cast<Vertex>(i);
  if (n > 0) c.starts_.push_back(n);
  c.finish({});
  return c;
}

Coloring Coloring::from_cells(std::vector<std::vector<Vertex>> cells) {
  Coloring c;
  for (auto& cell : cells) {
    if (cell.empty()) throw ContractViolation("coloring has an empty cell");
    std::sort(cell.begin(), cell.end());
    c.elements_.insert(c.elements_.end(), cell.begin(), cell.end());
    c.starts_.push_back(c.elements_.size());
  }
  c.finish({});
  return c;
}

Coloring Coloring::from_values(std::span<const std::uint64_t> values) {
  std::map<std::uint64_t, std::vector<Vertex>> by_value;
  for (std::size_t v = 0; v < values.size(); ++v) {
    by_value[values[v]].push_back(static_cast<Vertex>(v));
  }
  std::vector<std::vector<Vertex>> cells;
  for (auto& [value, cell] : by_value) cells.push_back(std::move(cell));
  return from_cells(std::move(cells));
}

void Coloring::finish(std::vector<std::size_t> globals) {
  carrier_ = elements_;
  std::sort(carrier_.begin(), carrier_.end());
  if (std::adjacent_find(carrier_.begin(), carrier_.end()) != carrier_.end()) {
    throw ContractViolation("coloring cells overlap");
  }
  dense_ = carrier_.empty() || carrier_.back() + 1 == carrier_.size();
  slot_cell_.assign(carrier_.size(), 0);
  slot_global_.assign(carrier_.size(), 0);
  for (std::size_t c = 0; c + 1 < starts_.size(); ++c) {
    for (std::size_t i = starts_[c]; i < starts_[c + 1]; ++i) {
      std::size_t s = slot(elements_[i]);
      slot_cell_[s] = static_cast<std::uint32_t>(c);
      slot_global_[s] = globals.empty() ? starts_[c] : globals[i];
    }
  }
}

std::size_t Coloring::slot(Vertex v) const {
  if (dense_) {
    if (v >= carrier_.size()) throw ContractViolation("vertex not in coloring");
    return v;
  }
  auto it = std::lower_bound(carrier_.begin(), carrier_.end(), v);
  if (it == carrier_.end() || *it != v) throw ContractViolation("vertex not in coloring");
  return static_cast<std::size_t>(it - carrier_.begin());
}

bool Coloring::contains(Vertex v) const {
  if (dense_) return v < carrier_.size();
  return std::binary_search(carrier_.begin(), carrier_.end(), v);
}

std::vector<std::vector<Vertex>> Coloring::cells() const {
  std::vector<std::vector<Vertex>> out;
  for (std::size_t c = 0; c < num_cells(); ++c) {
    auto span = cell(c);
    out.emplace_back(span.begin(), span.end());
  }
  return out;
}

Coloring Coloring::permuted(const Permutation& gamma) const {
  Coloring c;
  std::vector<std::pair<Vertex, std::size_t>> moved;
  std::vector<std::size_t> globals;
  for (std::size_t cell_i = 0; cell_i < num_cells(); ++cell_i) {
    moved.clear();
    for (Vertex v : cell(cell_i)) {
      if (v >= gamma.size()) throw ContractViolation("permutation too small for coloring");
      moved.emplace_back(gamma(v), global_color(v));
    }
    std::sort(moved.begin(), moved.end());
    for (auto [v, g] : moved) {
      c.elements_.push_back(v);
      globals.push_back(g);
    }
    c.starts_.push_back(c.elements_.size());
  }
  c.finish(std::move(globals));
  return c;
}

Coloring Coloring::project(std::span<const Vertex> vertices) const {
  std::vector<Vertex> keep(vertices.begin(), vertices.end());
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<std::pair<std::size_t, Vertex>> by_cell;
  by_cell.reserve(keep.size());
  for (Vertex v : keep) by_cell.emplace_back(cell_index(v), v);
  std::sort(by_cell.begin(), by_cell.end());
  Coloring c;
  std::vector<std::size_t> globals;
  for (std::size_t i = 0; i < by_cell.size(); ++i) {
    c.elements_.push_back(by_cell[i].second);
    globals.push_back(global_color(by_cell[i].second));
    if (i + 1 == by_cell.size() || by_cell[i + 1].first != by_cell[i].first) {
      c.starts_.push_back(c.elements_.size());
    }
  }
  c.finish(std::move(globals));
  return c;
}

}  // namespace symtree
