#include "symtree/ssm.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "symtree/errors.h"
#include "tree_util.h"

namespace symtree {

namespace {

// Image set -> witness (images of the query vertices, in query order).
using Matches = std::map<std::vector<Vertex>, std::vector<Vertex>>;

bool contains_all(const AutoTreeNode& node, std::span<const Vertex> q) {
  for (Vertex v : q) {
    if (!std::binary_search(node.vertices.begin(), node.vertices.end(), v)) return false;
  }
  return true;
}

void add(Matches& out, std::vector<Vertex> witness) {
  std::vector<Vertex> set = witness;
  std::sort(set.begin(), set.end());
  out.emplace(std::move(set), std::move(witness));
}

// Color-constrained induced matches of G[q] inside G[leaf], as sets.
std::set<std::vector<Vertex>> induced_matches(const AutoTree& tree, const AutoTreeNode& leaf,
                                              std::span<const Vertex> q) {
  const Graph& g = tree.graph();
  const Coloring& pi = tree.coloring();
  std::set<std::vector<Vertex>> out;
  std::vector<Vertex> image(q.size());
  std::vector<bool> used(leaf.vertices.size(), false);
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == q.size()) {
      std::vector<Vertex> set = image;
      std::sort(set.begin(), set.end());
      out.insert(std::move(set));
      return;
    }
    for (std::size_t k = 0; k < leaf.vertices.size(); ++k) {
      Vertex c = leaf.vertices[k];
      if (used[k] || pi.cell_index(c) != pi.cell_index(q[i])) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        ok = g.has_edge(q[i], q[j]) == g.has_edge(c, image[j]);
      }
      if (!ok) continue;
      used[k] = true;
      image[i] = c;
      self(self, i + 1);
      used[k] = false;
    }
  };
  extend(extend, 0);
  return out;
}

Matches leaf_matches(const AutoTree& tree, const AutoTreeNode& leaf, std::span<const Vertex> q) {
  Matches closure;
  if (!contains_all(leaf, q)) return closure;
  std::vector<Vertex> start(q.begin(), q.end());
  add(closure, start);
  std::vector<std::vector<Vertex>> queue{start};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const Permutation& p : leaf.leaf_generators) {
      std::vector<Vertex> next;
      next.reserve(q.size());
      for (Vertex v : queue[i]) next.push_back(leaf.vertices[p(static_cast<Vertex>(detail::slot_of(leaf, v)))]);
      std::vector<Vertex> set = next;
      std::sort(set.begin(), set.end());
      if (closure.emplace(std::move(set), next).second) queue.push_back(std::move(next));
    }
  }
  std::set<std::vector<Vertex>> matched = induced_matches(tree, leaf, q);
  Matches out;
  for (auto& [set, witness] : closure) {
    if (!matched.count(set)) {
      throw InternalConsistencyError("leaf group image is not an induced match");
    }
    out.emplace(set, witness);
  }
  return out;
}

Matches map_through(const Matches& in, const AutoTreeNode& from, const AutoTreeNode& to) {
  std::vector<Vertex> a = detail::align(from, to);
  Matches out;
  for (const auto& [set, witness] : in) {
    std::vector<Vertex> w;
    w.reserve(witness.size());
    for (Vertex v : witness) w.push_back(a[detail::slot_of(from, v)]);
    add(out, std::move(w));
  }
  return out;
}

class Solver {
 public:
  explicit Solver(const AutoTree& tree) : tree_(tree) {}

  // Images of q under Aut of the subtree rooted at r; q must lie in r.
  Matches in_subtree(std::size_t r, std::span<const Vertex> q) {
    std::size_t n = deepest(r, q);
    Matches result = at_node(n, q);
    // Carry the matches across equal-form siblings on the way back up.
    for (std::size_t c = n; c != r;) {
      std::size_t a = tree_.node(c).parent;
      const AutoTreeNode& parent = tree_.node(a);
      Matches merged;
      for (const auto& run : detail::equal_form_runs(tree_, parent)) {
        bool mine = false;
        for (std::size_t pos : run) mine |= parent.children[pos] == c;
        if (!mine) continue;
        for (std::size_t pos : run) {
          std::size_t other = parent.children[pos];
          if (other == c) {
            merged.insert(result.begin(), result.end());
          } else {
            Matches moved = map_through(result, tree_.node(c), tree_.node(other));
            merged.insert(moved.begin(), moved.end());
          }
        }
      }
      result = std::move(merged);
      c = a;
    }
    return result;
  }

  std::size_t deepest(std::size_t r, std::span<const Vertex> q) const {
    std::size_t n = r;
    for (bool moved = true; moved;) {
      moved = false;
      for (std::size_t c : tree_.node(n).children) {
        if (contains_all(tree_.node(c), q)) {
          n = c;
          moved = true;
          break;
        }
      }
    }
    return n;
  }

 private:
  Matches at_node(std::size_t id, std::span<const Vertex> q) {
    const AutoTreeNode& node = tree_.node(id);
    Matches out;
    if (q.size() == node.vertices.size() || node.kind == NodeKind::kSingletonLeaf) {
      add(out, std::vector<Vertex>(q.begin(), q.end()));
      return out;
    }
    if (node.kind == NodeKind::kNonSingletonLeaf) return leaf_matches(tree_, node, q);

    // q spans several children: solve each slice, then place the slices on
    // distinct children of their equal-form runs in every possible way.
    struct Slice {
      std::size_t run;
      std::size_t pos;
      std::vector<std::size_t> query_index;
      Matches matches;
    };
    auto runs = detail::equal_form_runs(tree_, node);
    std::vector<std::size_t> run_of(node.children.size());
    for (std::size_t r = 0; r < runs.size(); ++r) {
      for (std::size_t pos : runs[r]) run_of[pos] = r;
    }
    std::vector<Slice> slices;
    for (std::size_t pos = 0; pos < node.children.size(); ++pos) {
      const AutoTreeNode& child = tree_.node(node.children[pos]);
      Slice s{run_of[pos], pos, {}, {}};
      std::vector<Vertex> part;
      for (std::size_t k = 0; k < q.size(); ++k) {
        if (std::binary_search(child.vertices.begin(), child.vertices.end(), q[k])) {
          s.query_index.push_back(k);
          part.push_back(q[k]);
        }
      }
      if (part.empty()) continue;
      s.matches = in_subtree(node.children[pos], part);
      slices.push_back(std::move(s));
    }
    // moved[j][t]: slice j carried onto child position t of its run.
    std::vector<std::map<std::size_t, Matches>> moved(slices.size());
    for (std::size_t j = 0; j < slices.size(); ++j) {
      const AutoTreeNode& from = tree_.node(node.children[slices[j].pos]);
      for (std::size_t t : runs[slices[j].run]) {
        moved[j][t] = t == slices[j].pos
                          ? slices[j].matches
                          : map_through(slices[j].matches, from, tree_.node(node.children[t]));
      }
    }
    std::vector<bool> taken(node.children.size(), false);
    std::vector<Vertex> witness(q.size());
    auto place = [&](auto&& self, std::size_t j) -> void {
      if (j == slices.size()) {
        add(out, witness);
        return;
      }
      for (auto& [t, matches] : moved[j]) {
        if (taken[t]) continue;
        taken[t] = true;
        for (const auto& [set, w] : matches) {
          for (std::size_t k = 0; k < w.size(); ++k) witness[slices[j].query_index[k]] = w[k];
          self(self, j + 1);
        }
        taken[t] = false;
      }
    };
    place(place, 0);
    return out;
  }

  const AutoTree& tree_;
};

std::vector<Vertex> normalize(const AutoTree& tree, std::span<const Vertex> q) {
  std::vector<Vertex> out(q.begin(), q.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty()) throw std::invalid_argument("query is empty");
  if (out.back() >= tree.graph().num_vertices()) {
    throw std::invalid_argument("query vertex out of range");
  }
  return out;
}

}  // namespace

std::size_t deepest_node_containing(const AutoTree& tree, std::span<const Vertex> query) {
  std::vector<Vertex> q = normalize(tree, query);
  return Solver(tree).deepest(0, q);
}

std::vector<SsmMatch> ssm(const AutoTree& tree, std::span<const Vertex> query) {
  detail::require_plain(tree);
  std::vector<Vertex> q = normalize(tree, query);
  Matches found = Solver(tree).in_subtree(0, q);
  std::vector<SsmMatch> out;
  out.reserve(found.size());
  for (auto& [set, witness] : found) out.push_back({set, witness});
  return out;
}

std::vector<std::vector<Vertex>> sm_leaf(const AutoTree& tree, std::size_t leaf,
                                         std::span<const Vertex> q_part) {
  detail::require_plain(tree);
  const AutoTreeNode& node = tree.node(leaf);
  if (node.kind != NodeKind::kNonSingletonLeaf) {
    throw std::invalid_argument("sm_leaf: node is not a non-singleton leaf");
  }
  std::vector<Vertex> q(q_part.begin(), q_part.end());
  std::sort(q.begin(), q.end());
  q.erase(std::unique(q.begin(), q.end()), q.end());
  std::vector<std::vector<Vertex>> out;
  for (auto& [set, witness] : leaf_matches(tree, node, q)) out.push_back(set);
  return out;
}

}  // namespace symtree
