#include "symtree/autotree.h"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <unordered_map>

#include "local_graph.h"
#include "parallel.h"
#include "symtree/combine.h"
#include "symtree/errors.h"
#include "symtree/reduction.h"
#include "symtree/refinement.h"
#include "tree_builder.h"

namespace symtree {

Permutation AutoTree::canonical_labeling() const {
  if (nodes_.empty()) return Permutation();
  return Permutation(nodes_.front().labels);
}

const CanonicalForm& AutoTree::canonical_form() const {
  static const CanonicalForm kEmpty;
  return nodes_.empty() ? kEmpty : nodes_.front().form;
}

namespace {

// Connected components of a local graph, each as ascending local indices,
// ordered by smallest member.
std::vector<std::vector<std::uint32_t>> components(
    std::size_t n, const std::vector<std::vector<std::uint32_t>>& adj) {
  std::vector<std::int32_t> comp(n, -1);
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> stack;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    auto id = static_cast<std::int32_t>(out.size());
    out.emplace_back();
    comp[s] = id;
    stack.assign(1, s);
    while (!stack.empty()) {
      std::uint32_t v = stack.back();
      stack.pop_back();
      out.back().push_back(v);
      for (std::uint32_t w : adj[v]) {
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

std::vector<std::vector<std::uint32_t>> to_lists(const detail::LocalGraph& lg) {
  std::vector<std::vector<std::uint32_t>> adj(lg.size());
  for (std::uint32_t v = 0; v < lg.size(); ++v) {
    auto nb = lg.neighbors(v);
    adj[v].assign(nb.begin(), nb.end());
  }
  return adj;
}

Part make_part(const Coloring& c, std::vector<Vertex> vertices) {
  Part p;
  p.coloring = c.project(vertices);
  p.vertices = std::move(vertices);
  return p;
}

Part whole(const Coloring& c) {
  return make_part(c, std::vector<Vertex>(c.carrier().begin(), c.carrier().end()));
}

}  // namespace

Division divide_p(const Graph& g, const Coloring& node_coloring) {
  Division d;
  auto carrier = node_coloring.carrier();
  if (carrier.size() <= 1) {
    d.parts.push_back(whole(node_coloring));
    return d;
  }
  std::vector<Vertex> rest;
  for (std::size_t c = 0; c < node_coloring.num_cells(); ++c) {
    auto cell = node_coloring.cell(c);
    if (cell.size() == 1) {
      d.axis.singleton_vertices.push_back(cell[0]);
      d.parts.push_back(make_part(node_coloring, {cell[0]}));
    }
  }
  // singleton_vertices is in color order; membership via a sorted copy.
  std::vector<Vertex> singles = d.axis.singleton_vertices;
  std::sort(singles.begin(), singles.end());
  std::set_difference(carrier.begin(), carrier.end(), singles.begin(), singles.end(),
                      std::back_inserter(rest));
  if (rest.empty()) {
    d.axis.kind = DivideKind::kSingletonCells;
    return d;
  }
  detail::LocalGraph lg = detail::extract_local(g, rest);
  d.work = lg.scanned + lg.adjacency.size();
  auto comps = components(rest.size(), to_lists(lg));
  if (singles.empty() && comps.size() == 1) {
    d.parts.clear();
    d.parts.push_back(whole(node_coloring));
    return d;
  }
  d.axis.kind = DivideKind::kSingletonCells;
  for (const auto& comp : comps) {
    std::vector<Vertex> vs;
    vs.reserve(comp.size());
    for (std::uint32_t i : comp) vs.push_back(rest[i]);
    d.parts.push_back(make_part(node_coloring, std::move(vs)));
  }
  return d;
}

Division divide_s(const Graph& g, const Coloring& node_coloring) {
  Division d;
  auto carrier = node_coloring.carrier();
  if (carrier.size() <= 1) {
    d.parts.push_back(whole(node_coloring));
    return d;
  }
  detail::LocalGraph lg = detail::extract_local(g, carrier);
  d.work = lg.scanned;
  const std::size_t k = carrier.size();
  const std::size_t cells = node_coloring.num_cells();
  std::vector<std::uint32_t> cell_of(k);
  for (std::size_t i = 0; i < k; ++i) {
    cell_of[i] = static_cast<std::uint32_t>(node_coloring.cell_index(carrier[i]));
  }
  std::vector<std::uint32_t> cell_size(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    cell_size[c] = static_cast<std::uint32_t>(node_coloring.cell(c).size());
  }

  // Per vertex, neighbor counts per cell. Equitability means these agree
  // inside a cell; a complete cell pair is one where the count is maximal.
  std::vector<std::uint32_t> count(cells, 0);
  std::vector<std::uint32_t> touched;
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> profile(cells);
  std::vector<bool> have_profile(cells, false);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> mine;
  for (std::uint32_t v = 0; v < k; ++v) {
    touched.clear();
    for (std::uint32_t w : lg.neighbors(v)) {
      ++d.work;
      if (count[cell_of[w]]++ == 0) touched.push_back(cell_of[w]);
    }
    std::sort(touched.begin(), touched.end());
    mine.clear();
    for (std::uint32_t c : touched) {
      mine.emplace_back(c, count[c]);
      count[c] = 0;
    }
    std::uint32_t own = cell_of[v];
    if (!have_profile[own]) {
      profile[own] = mine;
      have_profile[own] = true;
    } else if (profile[own] != mine) {
      throw ContractViolation("divide_s: node coloring is not equitable");
    }
  }
  std::unordered_map<std::uint64_t, bool> complete;
  auto key = [](std::uint32_t a, std::uint32_t b) { return (std::uint64_t{a} << 32) | b; };
  for (std::uint32_t c = 0; c < cells; ++c) {
    for (auto [other, cnt] : profile[c]) {
      std::uint32_t full = other == c ? cell_size[c] - 1 : cell_size[other];
      if (cnt == full) {
        complete[key(c, other)] = true;
        if (other == c) {
          d.axis.clique_cells.push_back(c);
        } else if (c < other) {
          d.axis.biclique_cells.emplace_back(c, other);
        }
      }
    }
  }
  std::vector<std::vector<std::uint32_t>> residual(k);
  for (std::uint32_t v = 0; v < k; ++v) {
    for (std::uint32_t w : lg.neighbors(v)) {
      if (!complete.count(key(cell_of[v], cell_of[w]))) {
        residual[v].push_back(w);
        if (v < w) d.residual_edges.emplace_back(carrier[v], carrier[w]);
      }
    }
  }
  auto comps = components(k, residual);
  if (comps.size() == 1) {
    d.parts.push_back(whole(node_coloring));
    return d;
  }
  d.axis.kind = DivideKind::kCliqueBiclique;
  for (const auto& comp : comps) {
    std::vector<Vertex> vs;
    vs.reserve(comp.size());
    for (std::uint32_t i : comp) vs.push_back(carrier[i]);
    d.parts.push_back(make_part(node_coloring, std::move(vs)));
  }
  return d;
}

void TreeBuilder::divide_all(AutoTree& tree, const BuildOptions& options) {
  auto& nodes = tree.nodes_;
  const Graph& g = tree.graph_;
  std::vector<std::size_t> level{0};
  struct Outcome {
    Division p;
    Division s;
    bool tried_s = false;
  };
  while (!level.empty()) {
    std::vector<Outcome> outcomes(level.size());
    detail::parallel_for(level.size(), options.threads, [&](std::size_t i) {
      const AutoTreeNode& node = nodes[level[i]];
      if (node.vertices.size() <= 1) return;
      outcomes[i].p = divide_p(g, node.coloring);
      if (!outcomes[i].p.divided()) {
        outcomes[i].s = divide_s(g, node.coloring);
        outcomes[i].tried_s = true;
      }
    });
    std::vector<std::size_t> next;
    for (std::size_t i = 0; i < level.size(); ++i) {
      const std::size_t id = level[i];
      Outcome& out = outcomes[i];
      if (nodes[id].vertices.size() <= 1) {
        nodes[id].kind = NodeKind::kSingletonLeaf;
        continue;
      }
      if (out.tried_s && options.on_divide_s) {
        options.on_divide_s(DivideSEvent{g, nodes[id].coloring, out.s});
      }
      Division& chosen = out.p.divided() ? out.p : out.s;
      if (!chosen.divided()) {
        nodes[id].kind = NodeKind::kNonSingletonLeaf;
        continue;
      }
      nodes[id].kind = NodeKind::kInternal;
      nodes[id].axis = std::move(chosen.axis);
      for (Part& part : chosen.parts) {
        AutoTreeNode child;
        child.vertices = std::move(part.vertices);
        child.coloring = std::move(part.coloring);
        child.parent = id;
        child.depth = nodes[id].depth + 1;
        nodes[id].children.push_back(nodes.size());
        next.push_back(nodes.size());
        nodes.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
}

void TreeBuilder::label_all(AutoTree& tree, unsigned threads,
                            const std::vector<std::uint64_t>& tie_keys) {
  auto& nodes = tree.nodes_;
  const Graph& g = tree.graph_;
  std::size_t max_depth = 0;
  for (const auto& n : nodes) max_depth = std::max(max_depth, n.depth);
  std::vector<std::vector<std::size_t>> by_depth(max_depth + 1);
  for (std::size_t i = 0; i < nodes.size(); ++i) by_depth[nodes[i].depth].push_back(i);
  for (std::size_t d = max_depth + 1; d-- > 0;) {
    const auto& level = by_depth[d];
    detail::parallel_for(level.size(), threads, [&](std::size_t i) {
      AutoTreeNode& node = nodes[level[i]];
      switch (node.kind) {
        case NodeKind::kSingletonLeaf: {
          Vertex v = node.vertices[0];
          NodeLabeling l = singleton_form(v, node.coloring.global_color(v));
          node.labels = std::move(l.labels);
          node.form = std::move(l.form);
          break;
        }
        case NodeKind::kNonSingletonLeaf: {
          LeafLabeling l = combine_cl(g, node.coloring);
          node.labels = std::move(l.labeling.labels);
          node.form = std::move(l.labeling.form);
          node.leaf_generators = std::move(l.generators);
          node.leaf_group_order = std::move(l.group_order);
          break;
        }
        case NodeKind::kInternal: {
          std::vector<ChildLabeling> kids;
          kids.reserve(node.children.size());
          for (std::size_t c : node.children) {
            const AutoTreeNode& child = nodes[c];
            kids.push_back({child.vertices, child.labels, &child.form, tie_keys[c]});
          }
          StructuralLabeling l = combine_st(g, node.coloring, kids);
          std::vector<std::size_t> sorted;
          sorted.reserve(node.children.size());
          for (std::size_t k : l.order) sorted.push_back(node.children[k]);
          node.children = std::move(sorted);
          node.labels = std::move(l.labeling.labels);
          node.form = std::move(l.labeling.form);
          break;
        }
      }
      node.digest = node.form.digest();
    });
  }
}

AutoTree TreeBuilder::build_plain(const Graph& g, const Coloring& refined,
                                  const BuildOptions& options) {
  AutoTree tree;
  tree.graph_ = g;
  tree.coloring_ = refined;
  if (g.num_vertices() == 0) return tree;
  AutoTreeNode root;
  root.vertices.assign(refined.carrier().begin(), refined.carrier().end());
  root.coloring = refined;
  tree.nodes_.push_back(std::move(root));
  divide_all(tree, options);
  std::vector<std::uint64_t> tie_keys;
  tie_keys.reserve(tree.nodes_.size());
  for (const auto& n : tree.nodes_) tie_keys.push_back(n.vertices.front());
  label_all(tree, options.threads, tie_keys);
  return tree;
}

AutoTree build(const Graph& g, const Coloring& pi, const BuildOptions& options) {
  Coloring refined = refine(g, pi);
  if (options.reduce) {
    StructuralReduction red = reduce_structural_equivalence(g, refined);
    if (!red.trivial()) {
      AutoTree reduced = TreeBuilder::build_plain(red.reduced_graph, red.reduced_coloring, options);
      return TreeBuilder::expand(reduced, red, g, options.threads);
    }
  }
  return TreeBuilder::build_plain(g, refined, options);
}

AutoTree build(const Graph& g, const BuildOptions& options) {
  return build(g, Coloring::unit(g.num_vertices()), options);
}

TreeStats tree_stats(const AutoTree& tree) {
  TreeStats s;
  std::size_t leaf_vertices = 0;
  for (const auto& n : tree.nodes()) {
    ++s.nodes;
    s.depth = std::max(s.depth, n.depth);
    if (n.kind == NodeKind::kSingletonLeaf) ++s.singleton_leaves;
    if (n.kind == NodeKind::kNonSingletonLeaf) {
      ++s.non_singleton_leaves;
      leaf_vertices += n.vertices.size();
    }
  }
  if (s.non_singleton_leaves > 0) {
    s.avg_non_singleton_size =
        static_cast<double>(leaf_vertices) / static_cast<double>(s.non_singleton_leaves);
  }
  return s;
}

void write_dot(const AutoTree& tree, std::ostream& out) {
  out << "digraph autotree {\n  node [shape=box];\n";
  for (std::size_t i = 0; i < tree.size(); ++i) {
    const auto& n = tree.node(i);
    const char* kind = n.kind == NodeKind::kSingletonLeaf      ? "singleton"
                       : n.kind == NodeKind::kNonSingletonLeaf ? "leaf"
                                                               : "internal";
    out << "  n" << i << " [label=\"{";
    for (std::size_t k = 0; k < n.vertices.size(); ++k) {
      if (k) out << ',';
      if (k == 16) {
        out << "...(" << n.vertices.size() << ")";
        break;
      }
      out << n.vertices[k];
    }
    out << "}\\n" << kind << "\\n" << std::hex << std::setw(16) << std::setfill('0') << n.digest
        << std::dec << std::setfill(' ') << "\"];\n";
  }
  for (std::size_t i = 0; i < tree.size(); ++i) {
    for (std::size_t c : tree.node(i).children) out << "  n" << i << " -> n" << c << ";\n";
  }
  out << "}\n";
}

}  // namespace symtree
