#include "symtree/refinement.h"

#include <algorithm>

#include "local_graph.h"
#include "partition.h"
#include "symtree/errors.h"

namespace symtree {

namespace {

void require_full_carrier(const Graph& g, const Coloring& pi) {
  if (pi.size() != g.num_vertices() ||
      (pi.size() > 0 && pi.carrier().back() + 1 != pi.size())) {
    throw ContractViolation("coloring must cover exactly the graph's vertices");
  }
}

}  // namespace

Coloring refine(const Graph& g, const Coloring& pi) {
  require_full_carrier(g, pi);
  detail::LocalGraph lg = detail::local_from_graph(g);
  detail::Partition part(pi.cells());
  part.refine_all(lg);
  std::vector<std::vector<Vertex>> cells;
  const auto& elems = part.elements();
  for (std::uint32_t s : part.cell_starts()) {
    cells.emplace_back(elems.begin() + s, elems.begin() + s + part.cell_size(s));
  }
  return Coloring::from_cells(std::move(cells));
}

bool is_equitable(const Graph& g, const Coloring& pi) {
  require_full_carrier(g, pi);
  std::vector<std::size_t> ref;
  std::vector<std::size_t> cur;
  auto counts = [&](Vertex v, std::vector<std::size_t>& out) {
    out.clear();
    for (Vertex w : g.neighbors(v)) out.push_back(pi.cell_index(w));
    std::sort(out.begin(), out.end());
  };
  for (std::size_t c = 0; c < pi.num_cells(); ++c) {
    auto cell = pi.cell(c);
    counts(cell[0], ref);
    for (std::size_t i = 1; i < cell.size(); ++i) {
      counts(cell[i], cur);
      if (cur != ref) return false;
    }
  }
  return true;
}

Coloring project(const Coloring& pi, std::span<const Vertex> vertices) {
  return pi.project(vertices);
}

}  // namespace symtree
