#include "symtree/reduction.h"

#include <algorithm>
#include <numeric>

#include "symtree/errors.h"
#include "symtree/refinement.h"
#include "tree_builder.h"

namespace symtree {

StructuralReduction reduce_structural_equivalence(const Graph& g, const Coloring& refined) {
  const std::size_t n = g.num_vertices();
  if (refined.size() != n) throw ContractViolation("coloring must cover the graph");
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto less = [&](Vertex a, Vertex b) {
    std::size_t pa = refined.position(a);
    std::size_t pb = refined.position(b);
    if (pa != pb) return pa < pb;
    auto na = g.neighbors(a);
    auto nb = g.neighbors(b);
    if (!std::equal(na.begin(), na.end(), nb.begin(), nb.end())) {
      return std::lexicographical_compare(na.begin(), na.end(), nb.begin(), nb.end());
    }
    return a < b;
  };
  std::sort(order.begin(), order.end(), less);

  StructuralReduction red;
  std::vector<std::vector<Vertex>> groups;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i + 1;
    auto ni = g.neighbors(order[i]);
    while (j < n && refined.position(order[j]) == refined.position(order[i])) {
      auto nj = g.neighbors(order[j]);
      if (!std::equal(ni.begin(), ni.end(), nj.begin(), nj.end())) break;
      ++j;
    }
    groups.emplace_back(order.begin() + i, order.begin() + j);
    i = j;
  }
  std::sort(groups.begin(), groups.end());  // members ascending: by representative
  red.classes = std::move(groups);
  red.reduced_of.assign(n, 0);
  std::vector<Vertex> reps;
  for (std::size_t r = 0; r < red.classes.size(); ++r) {
    reps.push_back(red.classes[r][0]);
    for (Vertex v : red.classes[r]) red.reduced_of[v] = static_cast<Vertex>(r);
  }
  red.reduced_graph = induced_subgraph(g, reps);
  std::vector<std::uint64_t> initial(reps.size());
  for (std::size_t r = 0; r < reps.size(); ++r) {
    initial[r] = static_cast<std::uint64_t>(refined.position(reps[r])) * (n + 1) +
                 red.classes[r].size();
  }
  red.reduced_coloring = refine(red.reduced_graph, Coloring::from_values(initial));
  return red;
}

AutoTree TreeBuilder::expand(const AutoTree& reduced_tree, const StructuralReduction& red,
                             const Graph& g, unsigned threads) {
  AutoTree tree;
  tree.graph_ = g;
  tree.reduced_ = true;
  // Each reduced cell becomes the union of its classes.
  std::vector<std::vector<Vertex>> cells;
  for (std::size_t c = 0; c < red.reduced_coloring.num_cells(); ++c) {
    std::vector<Vertex> cell;
    for (Vertex r : red.reduced_coloring.cell(c)) {
      cell.insert(cell.end(), red.classes[r].begin(), red.classes[r].end());
    }
    cells.push_back(std::move(cell));
  }
  tree.coloring_ = Coloring::from_cells(std::move(cells));
  if (reduced_tree.empty()) return tree;

  auto& nodes = tree.nodes_;
  std::vector<std::uint64_t> tie;
  auto add_twins = [&](std::size_t parent, Vertex r, std::uint64_t rank) {
    const auto& members = red.classes[r];
    for (std::size_t t = 1; t < members.size(); ++t) {
      AutoTreeNode twin;
      twin.kind = NodeKind::kSingletonLeaf;
      twin.vertices = {members[t]};
      twin.parent = parent;
      nodes[parent].children.push_back(nodes.size());
      nodes.push_back(std::move(twin));
      tie.push_back((rank << 32) | t);
    }
  };

  const auto& rroot = reduced_tree.root();
  std::size_t offset = 0;
  if (rroot.kind == NodeKind::kSingletonLeaf && red.classes[rroot.vertices[0]].size() > 1) {
    // All of G is one class of pairwise non-adjacent twins.
    AutoTreeNode root;
    root.kind = NodeKind::kInternal;
    root.axis.kind = DivideKind::kTwinExpansion;
    nodes.push_back(std::move(root));
    tie.push_back(0);
    offset = 1;
  }
  // Mirror nodes keep their relative order, so parents still precede
  // children; twins are appended after all mirrors.
  for (std::size_t i = 0; i < reduced_tree.size(); ++i) {
    const AutoTreeNode& rn = reduced_tree.node(i);
    AutoTreeNode e;
    e.kind = rn.kind;
    e.axis = rn.axis;
    e.parent = rn.parent == static_cast<std::size_t>(-1) ? (offset ? 0 : rn.parent)
                                                         : rn.parent + offset;
    if (rn.kind == NodeKind::kSingletonLeaf) {
      e.vertices = {red.classes[rn.vertices[0]][0]};
    } else if (rn.kind == NodeKind::kNonSingletonLeaf) {
      for (Vertex r : rn.vertices) {
        e.vertices.insert(e.vertices.end(), red.classes[r].begin(), red.classes[r].end());
      }
      std::sort(e.vertices.begin(), e.vertices.end());
    }
    nodes.push_back(std::move(e));
    tie.push_back(0);
  }
  if (offset) {
    nodes[0].children.push_back(1);
    add_twins(0, rroot.vertices[0], 0);
  }
  for (std::size_t i = 0; i < reduced_tree.size(); ++i) {
    const AutoTreeNode& rn = reduced_tree.node(i);
    for (std::size_t rank = 0; rank < rn.children.size(); ++rank) {
      std::size_t c = rn.children[rank];
      nodes[i + offset].children.push_back(c + offset);
      tie[c + offset] = std::uint64_t{rank} << 32;
      const AutoTreeNode& rc = reduced_tree.node(c);
      if (rc.kind == NodeKind::kSingletonLeaf) add_twins(i + offset, rc.vertices[0], rank);
    }
  }
  // Vertex sets bottom-up (children always have larger indices), depths and
  // colorings top-down.
  for (std::size_t i = nodes.size(); i-- > 0;) {
    if (nodes[i].kind != NodeKind::kInternal) continue;
    std::vector<Vertex> vs;
    for (std::size_t c : nodes[i].children) {
      vs.insert(vs.end(), nodes[c].vertices.begin(), nodes[c].vertices.end());
    }
    std::sort(vs.begin(), vs.end());
    nodes[i].vertices = std::move(vs);
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    nodes[i].depth = i == 0 ? 0 : nodes[nodes[i].parent].depth + 1;
    nodes[i].coloring = tree.coloring_.project(nodes[i].vertices);
  }
  label_all(tree, threads, tie);
  return tree;
}

AutoTree expand_structural_equivalence(const AutoTree& reduced_tree,
                                       const StructuralReduction& reduction, const Graph& g,
                                       unsigned threads) {
  return TreeBuilder::expand(reduced_tree, reduction, g, threads);
}

}  // namespace symtree
