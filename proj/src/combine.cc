#include "symtree/combine.h"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "base_labeler_internal.h"
#include "local_graph.h"
#include "symtree/base_labeler.h"
#include "symtree/errors.h"

namespace symtree {

namespace {

std::vector<std::uint32_t> global_colors(const Coloring& c) {
  std::vector<std::uint32_t> out;
  out.reserve(c.size());
  for (Vertex v : c.carrier()) out.push_back(static_cast<std::uint32_t>(c.global_color(v)));
  return out;
}

}  // namespace

NodeLabeling singleton_form(Vertex /*v*/, std::size_t color) {
  NodeLabeling out;
  auto c = static_cast<std::uint32_t>(color);
  out.labels = {c};
  out.form.vertex_labels = {{c, c}};
  return out;
}

LeafLabeling combine_cl(const Graph& g, const Coloring& node_coloring) {
  if (node_coloring.is_discrete()) {
    throw ContractViolation("combine_cl: leaf coloring is discrete");
  }
  auto carrier = node_coloring.carrier();
  detail::LocalGraph lg = detail::extract_local(g, carrier);
  std::vector<std::vector<std::uint32_t>> cells;
  for (std::size_t c = 0; c < node_coloring.num_cells(); ++c) {
    std::vector<std::uint32_t> cell;
    for (Vertex v : node_coloring.cell(c)) {
      cell.push_back(static_cast<std::uint32_t>(
          std::lower_bound(carrier.begin(), carrier.end(), v) - carrier.begin()));
    }
    cells.push_back(std::move(cell));
  }
  IrResult ir = detail::ir_search(lg, cells);

  std::vector<std::uint32_t> colors = global_colors(node_coloring);
  // Rank inside each color class by the base labeler's canonical label.
  std::vector<std::size_t> idx(carrier.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return std::tie(colors[a], ir.labeling.images()[a]) <
           std::tie(colors[b], ir.labeling.images()[b]);
  });
  LeafLabeling out;
  out.labeling.labels.resize(carrier.size());
  for (std::size_t k = 0; k < idx.size();) {
    std::size_t j = k;
    while (j < idx.size() && colors[idx[j]] == colors[idx[k]]) {
      out.labeling.labels[idx[j]] = colors[idx[j]] + static_cast<Vertex>(j - k);
      ++j;
    }
    k = j;
  }
  out.labeling.form = make_form(g, carrier, out.labeling.labels, colors);
  out.generators = std::move(ir.generators);
  out.group_order = std::move(ir.group_order);
  return out;
}

StructuralLabeling combine_st(const Graph& g, const Coloring& node_coloring,
                              std::span<const ChildLabeling> children) {
  auto carrier = node_coloring.carrier();
  StructuralLabeling out;
  out.order.resize(children.size());
  std::iota(out.order.begin(), out.order.end(), 0);
  std::stable_sort(out.order.begin(), out.order.end(), [&](std::size_t a, std::size_t b) {
    auto c = *children[a].form <=> *children[b].form;
    if (c != 0) return c < 0;
    return children[a].tie_key < children[b].tie_key;
  });

  // (color, child position, child label, slot)
  std::vector<std::tuple<std::uint32_t, std::size_t, Vertex, std::size_t>> keys;
  keys.reserve(carrier.size());
  std::size_t covered = 0;
  for (std::size_t pos = 0; pos < out.order.size(); ++pos) {
    const ChildLabeling& child = children[out.order[pos]];
    for (std::size_t i = 0; i < child.vertices.size(); ++i) {
      Vertex v = child.vertices[i];
      auto it = std::lower_bound(carrier.begin(), carrier.end(), v);
      if (it == carrier.end() || *it != v) {
        throw ContractViolation("combine_st: child vertex outside the node");
      }
      keys.emplace_back(static_cast<std::uint32_t>(node_coloring.global_color(v)), pos,
                        child.labels[i], static_cast<std::size_t>(it - carrier.begin()));
    }
    covered += child.vertices.size();
  }
  if (covered != carrier.size()) {
    throw ContractViolation("combine_st: children do not partition the node");
  }
  std::sort(keys.begin(), keys.end());
  out.labeling.labels.assign(carrier.size(), 0);
  std::vector<std::uint32_t> colors(carrier.size());
  for (std::size_t k = 0; k < keys.size();) {
    std::size_t j = k;
    while (j < keys.size() && std::get<0>(keys[j]) == std::get<0>(keys[k])) {
      std::size_t slot = std::get<3>(keys[j]);
      out.labeling.labels[slot] = std::get<0>(keys[j]) + static_cast<Vertex>(j - k);
      colors[slot] = std::get<0>(keys[j]);
      ++j;
    }
    k = j;
  }
  out.labeling.form = make_form(g, carrier, out.labeling.labels, colors);
  return out;
}

}  // namespace symtree
