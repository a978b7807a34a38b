#include "symtree/automorphism.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "symtree/errors.h"
#include "tree_util.h"

namespace symtree {

namespace {

void verify(const AutoTree& tree, const Permutation& p) {
  const Graph& g = tree.graph();
  const Coloring& pi = tree.coloring();
  for (Vertex u : p.moved_points()) {
    if (pi.cell_index(u) != pi.cell_index(p(u))) {
      throw InternalConsistencyError("generator does not preserve colors");
    }
    for (Vertex w : g.neighbors(u)) {
      if (!g.has_edge(p(u), p(w))) {
        throw InternalConsistencyError("generator is not an automorphism");
      }
    }
  }
}

BigInt factorial(std::size_t k) {
  BigInt f = 1;
  for (std::size_t i = 2; i <= k; ++i) f *= i;
  return f;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

std::vector<Permutation> generators(const AutoTree& tree) {
  detail::require_plain(tree);
  std::vector<Permutation> out;
  const std::size_t n = tree.graph().num_vertices();
  std::vector<Vertex> images(n);
  auto reset = [&] { std::iota(images.begin(), images.end(), 0); };
  for (const AutoTreeNode& node : tree.nodes()) {
    for (const Permutation& local : node.leaf_generators) {
      reset();
      for (std::size_t i = 0; i < node.vertices.size(); ++i) {
        images[node.vertices[i]] = node.vertices[local(static_cast<Vertex>(i))];
      }
      out.emplace_back(images);
    }
    if (node.kind != NodeKind::kInternal) continue;
    for (const auto& run : detail::equal_form_runs(tree, node)) {
      for (std::size_t k = 0; k + 1 < run.size(); ++k) {
        const AutoTreeNode& a = tree.node(node.children[run[k]]);
        const AutoTreeNode& b = tree.node(node.children[run[k + 1]]);
        std::vector<Vertex> to = detail::align(a, b);
        reset();
        for (std::size_t i = 0; i < a.vertices.size(); ++i) {
          images[a.vertices[i]] = to[i];
          images[to[i]] = a.vertices[i];
        }
        out.emplace_back(images);
      }
    }
  }
  for (const auto& p : out) verify(tree, p);
  return out;
}

std::vector<std::vector<Vertex>> orbits(std::span<const Permutation> gens, std::size_t n) {
  UnionFind uf(n);
  for (const auto& p : gens) {
    if (p.size() != n) throw ContractViolation("orbits: generator size mismatch");
    for (Vertex v : p.moved_points()) uf.unite(v, p(v));
  }
  std::vector<std::vector<Vertex>> out;
  std::vector<std::size_t> index(n, static_cast<std::size_t>(-1));
  for (Vertex v = 0; v < n; ++v) {
    std::size_t r = uf.find(v);
    if (index[r] == static_cast<std::size_t>(-1)) {
      index[r] = out.size();
      out.emplace_back();
    }
    out[index[r]].push_back(v);
  }
  return out;
}

BigInt group_order(const AutoTree& tree) {
  detail::require_plain(tree);
  BigInt order = 1;
  for (const AutoTreeNode& node : tree.nodes()) {
    if (node.kind == NodeKind::kNonSingletonLeaf) order *= node.leaf_group_order;
    if (node.kind != NodeKind::kInternal) continue;
    for (const auto& run : detail::equal_form_runs(tree, node)) order *= factorial(run.size());
  }
  return order;
}

BigInt count_set_images(const AutoTree& tree, std::span<const Vertex> s) {
  detail::require_plain(tree);
  const std::size_t n = tree.graph().num_vertices();
  std::vector<bool> in_s(n, false);
  for (Vertex v : s) {
    if (v >= n) throw std::invalid_argument("count_set_images: vertex out of range");
    in_s[v] = true;
  }
  if (tree.empty()) return 1;

  // Per node: number of images of S ∩ node under Aut(node), and an interned
  // signature that is equal for two equal-form nodes exactly when their
  // slices of S lie in one orbit (compared through node labels).
  std::map<std::vector<std::uint64_t>, std::uint64_t> intern;
  auto id_of = [&](std::vector<std::uint64_t> key) {
    return intern.emplace(std::move(key), intern.size()).first->second;
  };
  std::vector<BigInt> count(tree.size(), 1);
  std::vector<std::uint64_t> sig(tree.size(), 0);
  const std::uint64_t empty_sig = id_of({0});

  // Children always have larger indices than their parent.
  for (std::size_t id = tree.size(); id-- > 0;) {
    const AutoTreeNode& node = tree.node(id);
    std::vector<std::uint32_t> slice;
    for (std::size_t i = 0; i < node.vertices.size(); ++i) {
      if (in_s[node.vertices[i]]) slice.push_back(static_cast<std::uint32_t>(i));
    }
    if (slice.empty()) {
      sig[id] = empty_sig;
      continue;
    }
    switch (node.kind) {
      case NodeKind::kSingletonLeaf:
        sig[id] = id_of({1});
        break;
      case NodeKind::kNonSingletonLeaf: {
        std::set<std::vector<std::uint32_t>> seen{slice};
        std::vector<std::vector<std::uint32_t>> queue{slice};
        for (std::size_t q = 0; q < queue.size(); ++q) {
          for (const Permutation& p : node.leaf_generators) {
            std::vector<std::uint32_t> img;
            img.reserve(queue[q].size());
            for (std::uint32_t x : queue[q]) img.push_back(p(x));
            std::sort(img.begin(), img.end());
            if (seen.insert(img).second) queue.push_back(std::move(img));
          }
        }
        count[id] = queue.size();
        std::vector<std::uint64_t> best;
        for (const auto& img : seen) {
          std::vector<std::uint64_t> labels{2};
          for (std::uint32_t x : img) labels.push_back(node.labels[x]);
          std::sort(labels.begin() + 1, labels.end());
          if (best.empty() || labels < best) best = std::move(labels);
        }
        sig[id] = id_of(std::move(best));
        break;
      }
      case NodeKind::kInternal: {
        std::vector<std::uint64_t> key{3};
        BigInt total = 1;
        for (const auto& run : detail::equal_form_runs(tree, node)) {
          std::vector<std::uint64_t> kinds;
          for (std::size_t pos : run) {
            std::size_t c = node.children[pos];
            kinds.push_back(sig[c]);
            total *= count[c];
          }
          std::sort(kinds.begin(), kinds.end());
          total *= factorial(run.size());
          for (std::size_t i = 0; i < kinds.size();) {
            std::size_t j = i;
            while (j < kinds.size() && kinds[j] == kinds[i]) ++j;
            total /= factorial(j - i);
            i = j;
          }
          key.insert(key.end(), kinds.begin(), kinds.end());
          key.push_back(static_cast<std::uint64_t>(-1));
        }
        count[id] = total;
        sig[id] = id_of(std::move(key));
        break;
      }
    }
  }
  return count[0];
}

AutomorphismIndex::AutomorphismIndex(const AutoTree& tree)
    : generators_(symtree::generators(tree)),
      orbits_(symtree::orbits(generators_, tree.graph().num_vertices())),
      orbit_of_(tree.graph().num_vertices()),
      order_(symtree::group_order(tree)) {
  for (std::size_t i = 0; i < orbits_.size(); ++i) {
    for (Vertex v : orbits_[i]) orbit_of_[v] = i;
  }
}

bool are_automorphic(const AutoTree& tree, Vertex u, Vertex v) {
  return AutomorphismIndex(tree).are_automorphic(u, v);
}

}  // namespace symtree
