#ifndef SYMTREE_AUTOTREE_H_
#define SYMTREE_AUTOTREE_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "symtree/big_int.h"
#include "symtree/canonical_form.h"
#include "symtree/coloring.h"
#include "symtree/graph.h"
#include "symtree/permutation.h"

namespace symtree {

enum class NodeKind { kSingletonLeaf, kNonSingletonLeaf, kInternal };

enum class DivideKind {
  kNone,
  kSingletonCells,   // singleton cells split off, remainder by components
  kCliqueBiclique,   // complete intra-cell / cell-pair edge sets removed
  kTwinExpansion,    // children restored from a structural-equivalence class
};

struct Axis {
  DivideKind kind = DivideKind::kNone;
  std::vector<Vertex> singleton_vertices;
  // Cell indices into the node's coloring.
  std::vector<std::size_t> clique_cells;
  std::vector<std::pair<std::size_t, std::size_t>> biclique_cells;
};

struct AutoTreeNode {
  // Ascending vertex ids of G; the node's graph is G[vertices].
  std::vector<Vertex> vertices;
  // The global coloring projected onto `vertices`.
  Coloring coloring;
  NodeKind kind = NodeKind::kSingletonLeaf;
  // Node indices, in non-descending order of their forms.
  std::vector<std::size_t> children;
  std::size_t parent = static_cast<std::size_t>(-1);
  std::size_t depth = 0;
  Axis axis;
  // labels[i] is the node labeling of vertices[i].
  std::vector<Vertex> labels;
  CanonicalForm form;
  std::uint64_t digest = 0;
  // Non-singleton leaves only: Aut of the leaf as permutations of indices
  // into `vertices`, and its order.
  std::vector<Permutation> leaf_generators;
  BigInt leaf_group_order = 1;
};

struct TreeStats {
  std::size_t nodes = 0;
  std::size_t singleton_leaves = 0;
  std::size_t non_singleton_leaves = 0;
  double avg_non_singleton_size = 0.0;
  std::size_t depth = 0;
};

class AutoTree {
 public:
  AutoTree() = default;

  bool empty() const { return nodes_.empty(); }
  std::size_t size() const { return nodes_.size(); }
  const AutoTreeNode& root() const { return nodes_.front(); }
  const AutoTreeNode& node(std::size_t i) const { return nodes_[i]; }
  std::span<const AutoTreeNode> nodes() const { return nodes_; }

  const Graph& graph() const { return graph_; }
  // The refined global coloring every node's coloring is projected from.
  const Coloring& coloring() const { return coloring_; }
  // True when built through structural-equivalence reduction.
  bool reduced() const { return reduced_; }

  // Canonical labeling of G: vertex v gets label canonical_labeling()(v).
  Permutation canonical_labeling() const;
  const CanonicalForm& canonical_form() const;

 private:
  friend class TreeBuilder;
  Graph graph_;
  Coloring coloring_;
  bool reduced_ = false;
  std::vector<AutoTreeNode> nodes_;
};

struct Part {
  std::vector<Vertex> vertices;
  Coloring coloring;
};

struct Division {
  std::vector<Part> parts;
  Axis axis;
  // Edges of the node's graph that survive the division (global ids).
  std::vector<Edge> residual_edges;
  // Adjacency entries read, for complexity checks.
  std::size_t work = 0;
  bool divided() const { return parts.size() > 1; }
};

// node_coloring's carrier is the node's vertex set; it must be equitable on
// G[carrier]. A single returned part means the node cannot be divided.
Division divide_p(const Graph& g, const Coloring& node_coloring);
Division divide_s(const Graph& g, const Coloring& node_coloring);

struct DivideSEvent {
  // The graph being divided: G itself, or the reduced graph when the tree
  // is built through structural-equivalence reduction.
  const Graph& graph;
  const Coloring& coloring;
  const Division& division;
};

struct BuildOptions {
  bool reduce = true;
  unsigned threads = 1;
  // Called for every divide_s application, in a deterministic order.
  std::function<void(const DivideSEvent&)> on_divide_s;
};

AutoTree build(const Graph& g, const Coloring& pi, const BuildOptions& options = {});
AutoTree build(const Graph& g, const BuildOptions& options = {});

TreeStats tree_stats(const AutoTree& tree);

// Graphviz rendering, one node per tree node, labeled with its vertex set,
// kind and form digest.
void write_dot(const AutoTree& tree, std::ostream& out);

}  // namespace symtree

#endif  // SYMTREE_AUTOTREE_H_
