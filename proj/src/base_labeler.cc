#include "symtree/base_labeler.h"

#include <algorithm>
#include <numeric>
#include <optional>

#include "base_labeler_internal.h"
#include "partition.h"
#include "symtree/errors.h"

namespace symtree {

std::span<const Vertex> target_cell(const Coloring& c) {
  for (std::size_t i = 0; i < c.num_cells(); ++i) {
    if (c.cell(i).size() > 1) return c.cell(i);
  }
  throw ContractViolation("target_cell: coloring is discrete");
}

namespace detail {

namespace {

using Images = std::vector<std::uint32_t>;

struct UnionFind {
  std::vector<std::uint32_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // The smaller root wins, so find(x) is the least element of x's class.
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) parent[b] = a; else parent[a] = b;
  }
};

bool fixes(const Images& gen, const std::vector<std::uint32_t>& seq, std::size_t len) {
  for (std::size_t i = 0; i < len; ++i) {
    if (gen[seq[i]] != seq[i]) return false;
  }
  return true;
}

UnionFind orbits_fixing(std::size_t n, const std::vector<Images>& gens,
                        const std::vector<std::uint32_t>& seq, std::size_t len) {
  UnionFind uf(n);
  for (const auto& gen : gens) {
    if (!fixes(gen, seq, len)) continue;
    for (std::uint32_t v = 0; v < n; ++v) uf.unite(v, gen[v]);
  }
  return uf;
}

struct Leaf {
  std::vector<std::uint64_t> cert;
  Images labels;  // vertex -> label
  std::vector<std::uint32_t> seq;
};

class Search {
 public:
  Search(const LocalGraph& g, const std::vector<std::vector<std::uint32_t>>& cells)
      : g_(g), n_(static_cast<std::uint32_t>(g.size())), root_(cells) {}

  IrResult run();

 private:
  struct Frame {
    Partition part;
    std::vector<std::uint32_t> target;
    std::size_t next = 0;
    bool eq_first = true;
    int cmp_best = 0;
    std::size_t gens_seen = static_cast<std::size_t>(-1);
    std::optional<UnionFind> orbits;
  };

  // Returns the depth to resume at when a leaf produced an automorphism.
  std::optional<std::size_t> visit(Partition part, bool parent_eq, int parent_cmp);
  std::optional<std::size_t> at_leaf(const Partition& part, bool eq, int cmp);
  void add_generator(const Images& from, const Images& to);
  bool pruned_by_orbit(Frame& f, std::size_t depth, std::uint32_t w);

  const LocalGraph& g_;
  const std::uint32_t n_;
  Partition root_;
  std::vector<Frame> stack_;
  std::vector<std::uint32_t> seq_;
  std::vector<std::vector<std::uint32_t>> first_inv_;
  std::vector<std::vector<std::uint32_t>> best_inv_;
  bool have_first_ = false;
  bool best_valid_ = false;
  Leaf first_;
  Leaf best_;
  std::vector<Images> gens_;
  std::size_t visited_ = 0;
};

std::size_t common_prefix(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::size_t i = 0;
  while (i < a.size() && i < b.size() && a[i] == b[i]) ++i;
  return i;
}

void Search::add_generator(const Images& from, const Images& to) {
  // Both leaves give the same labeled graph: v -> to^-1(from(v)).
  Images to_inv(n_);
  for (std::uint32_t v = 0; v < n_; ++v) to_inv[to[v]] = v;
  Images sigma(n_);
  for (std::uint32_t v = 0; v < n_; ++v) sigma[v] = to_inv[from[v]];
  for (std::uint32_t v = 0; v < n_; ++v) {
    if (root_.cell_of(v) != root_.cell_of(sigma[v])) {
      throw InternalConsistencyError("search produced a color-changing map");
    }
    for (std::uint32_t w : g_.neighbors(v)) {
      if (!g_.has_edge(sigma[v], sigma[w])) {
        throw InternalConsistencyError("search produced a non-automorphism");
      }
    }
  }
  gens_.push_back(std::move(sigma));
}

bool Search::pruned_by_orbit(Frame& f, std::size_t depth, std::uint32_t w) {
  if (gens_.empty()) return false;
  if (f.gens_seen != gens_.size()) {
    f.orbits = orbits_fixing(n_, gens_, seq_, depth);
    f.gens_seen = gens_.size();
  }
  return f.orbits->find(w) != w;
}

std::optional<std::size_t> Search::at_leaf(const Partition& part, bool eq, int cmp) {
  Leaf leaf;
  leaf.labels.resize(n_);
  for (std::uint32_t v = 0; v < n_; ++v) leaf.labels[v] = part.position_of(v);
  for (std::uint32_t u = 0; u < n_; ++u) {
    for (std::uint32_t w : g_.neighbors(u)) {
      if (u < w) {
        std::uint64_t a = leaf.labels[u];
        std::uint64_t b = leaf.labels[w];
        if (a > b) std::swap(a, b);
        leaf.cert.push_back((a << 32) | b);
      }
    }
  }
  std::sort(leaf.cert.begin(), leaf.cert.end());
  leaf.seq = seq_;

  if (!have_first_) {
    have_first_ = true;
    first_ = leaf;
    best_ = std::move(leaf);
    best_valid_ = true;
    return std::nullopt;
  }
  if (eq && leaf.cert == first_.cert) {
    add_generator(first_.labels, leaf.labels);
    return common_prefix(seq_, first_.seq);
  }
  if (cmp != 0) return std::nullopt;
  if (!best_valid_ || leaf.cert < best_.cert) {
    best_ = std::move(leaf);
    best_valid_ = true;
    return std::nullopt;
  }
  if (leaf.cert == best_.cert) {
    add_generator(best_.labels, leaf.labels);
    return common_prefix(seq_, best_.seq);
  }
  return std::nullopt;
}

std::optional<std::size_t> Search::visit(Partition part, bool parent_eq, int parent_cmp) {
  ++visited_;
  const std::size_t depth = seq_.size();
  std::vector<std::uint32_t> inv = part.invariant(g_);
  bool eq = true;
  int cmp = 0;
  if (!have_first_) {
    first_inv_.push_back(inv);
    best_inv_.push_back(std::move(inv));
  } else {
    eq = parent_eq && depth < first_inv_.size() && inv == first_inv_[depth];
    if (parent_cmp != 0) {
      cmp = parent_cmp;
    } else if (depth >= best_inv_.size()) {
      cmp = -1;
    } else {
      cmp = inv < best_inv_[depth] ? -1 : (inv == best_inv_[depth] ? 0 : 1);
    }
    if (!eq && cmp > 0) return std::nullopt;
    if (cmp < 0) {
      // Every leaf below beats the current best, so this path becomes the
      // reference for the best trace.
      best_inv_.resize(depth);
      best_inv_.push_back(std::move(inv));
      best_valid_ = false;
      cmp = 0;
    }
  }
  if (part.discrete()) return at_leaf(part, eq, cmp);
  Frame f;
  std::uint32_t s = part.first_nonsingleton();
  const auto& elems = part.elements();
  f.target.assign(elems.begin() + s, elems.begin() + s + part.cell_size(s));
  std::sort(f.target.begin(), f.target.end());
  f.part = std::move(part);
  f.eq_first = eq;
  f.cmp_best = cmp;
  stack_.push_back(std::move(f));
  return std::nullopt;
}

IrResult Search::run() {
  Partition start = root_;
  start.refine_all(g_);
  visit(std::move(start), true, 0);
  while (!stack_.empty()) {
    const std::size_t depth = stack_.size() - 1;
    Frame& f = stack_.back();
    std::optional<std::uint32_t> child;
    while (f.next < f.target.size()) {
      std::uint32_t w = f.target[f.next++];
      seq_.resize(depth);
      if (f.next > 1 && pruned_by_orbit(f, depth, w)) continue;
      child = w;
      break;
    }
    if (!child) {
      stack_.pop_back();
      continue;
    }
    seq_.resize(depth);
    seq_.push_back(*child);
    Partition p = f.part;
    std::vector<std::uint32_t> changed;
    p.individualize(*child, &changed);
    p.refine(g_, std::move(changed));
    bool eq = f.eq_first;
    int cmp = f.cmp_best;
    auto resume = visit(std::move(p), eq, cmp);
    if (resume) stack_.resize(std::min(stack_.size(), *resume + 1));
  }

  IrResult result;
  result.nodes_visited = visited_;
  std::vector<std::uint32_t> labels = best_.labels;
  result.labeling = Permutation(std::vector<Vertex>(labels.begin(), labels.end()));
  for (const auto& gen : gens_) {
    result.generators.emplace_back(std::vector<Vertex>(gen.begin(), gen.end()));
  }
  for (std::size_t d = 0; d < first_.seq.size(); ++d) {
    UnionFind uf = orbits_fixing(n_, gens_, first_.seq, d);
    std::uint32_t root = uf.find(first_.seq[d]);
    std::size_t size = 0;
    for (std::uint32_t v = 0; v < n_; ++v) size += uf.find(v) == root;
    result.group_order *= size;
  }
  auto& form = result.form;
  form.vertex_labels.resize(n_);
  for (std::uint32_t v = 0; v < n_; ++v) {
    form.vertex_labels[labels[v]] = {labels[v], root_.cell_of(v)};
  }
  for (std::uint64_t e : best_.cert) {
    form.edges.emplace_back(static_cast<std::uint32_t>(e >> 32),
                            static_cast<std::uint32_t>(e & 0xffffffffU));
  }
  return result;
}

}  // namespace

IrResult ir_search(const LocalGraph& g, const std::vector<std::vector<std::uint32_t>>& cells) {
  Search search(g, cells);
  return search.run();
}

}  // namespace detail

IrResult canonical_labeling_ir(const Graph& g, const Coloring& pi) {
  if (pi.size() != g.num_vertices() ||
      (pi.size() > 0 && pi.carrier().back() + 1 != pi.size())) {
    throw ContractViolation("coloring must cover exactly the graph's vertices");
  }
  detail::LocalGraph lg = detail::local_from_graph(g);
  return detail::ir_search(lg, pi.cells());
}

}  // namespace symtree
