#include "partition.h"

#include <algorithm>
#include <numeric>

namespace symtree::detail {

bool LocalGraph::has_edge(std::uint32_t u, std::uint32_t v) const {
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<std::int32_t>& scratch_index(std::size_t n) {
  thread_local std::vector<std::int32_t> index;
  if (index.size() < n) index.resize(n, -1);
  return index;
}

LocalGraph extract_local(const Graph& g, std::span<const Vertex> vertices) {
  auto& index = scratch_index(g.num_vertices());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    index[vertices[i]] = static_cast<std::int32_t>(i);
  }
  LocalGraph lg;
  lg.offsets.assign(vertices.size() + 1, 0);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    auto nb = g.neighbors(vertices[i]);
    lg.scanned += nb.size();
    for (Vertex w : nb) {
      if (index[w] >= 0) lg.adjacency.push_back(static_cast<std::uint32_t>(index[w]));
    }
    lg.offsets[i + 1] = static_cast<std::uint32_t>(lg.adjacency.size());
    std::sort(lg.adjacency.begin() + lg.offsets[i], lg.adjacency.end());
  }
  for (Vertex v : vertices) index[v] = -1;
  return lg;
}

LocalGraph local_from_graph(const Graph& g) {
  LocalGraph lg;
  lg.offsets.assign(g.num_vertices() + 1, 0);
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    auto nb = g.neighbors(v);
    lg.adjacency.insert(lg.adjacency.end(), nb.begin(), nb.end());
    lg.offsets[v + 1] = static_cast<std::uint32_t>(lg.adjacency.size());
  }
  lg.scanned = lg.adjacency.size();
  return lg;
}

Partition::Partition(const std::vector<std::vector<std::uint32_t>>& cells) {
  std::size_t n = 0;
  for (const auto& c : cells) n += c.size();
  pos_.resize(n);
  id_of_.resize(n);
  start_.assign(n, 0);
  size_.assign(n, 0);
  id_at_.assign(n, 0);
  for (const auto& c : cells) {
    auto start = static_cast<std::uint32_t>(elems_.size());
    std::uint32_t id = num_cells_++;
    start_[id] = start;
    size_[id] = static_cast<std::uint32_t>(c.size());
    id_at_[start] = id;
    for (auto v : c) {
      pos_[v] = static_cast<std::uint32_t>(elems_.size());
      id_of_[v] = id;
      elems_.push_back(v);
    }
  }
}

std::vector<std::uint32_t> Partition::cell_starts() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < size(); s += cell_size(s)) out.push_back(s);
  return out;
}

std::uint32_t Partition::first_nonsingleton() const {
  for (std::uint32_t s = 0; s < size(); s += cell_size(s)) {
    if (cell_size(s) > 1) return s;
  }
  return size();
}

void Partition::individualize(std::uint32_t v, std::vector<std::uint32_t>* changed) {
  std::uint32_t id = id_of_[v];
  std::uint32_t start = start_[id];
  std::uint32_t sz = size_[id];
  if (sz == 1) return;
  // Move v to the front of its cell.
  std::uint32_t other = elems_[start];
  std::uint32_t p = pos_[v];
  elems_[p] = other;
  pos_[other] = p;
  elems_[start] = v;
  pos_[v] = start;
  std::uint32_t single = num_cells_++;
  start_[single] = start;
  size_[single] = 1;
  id_at_[start] = single;
  id_of_[v] = single;
  start_[id] = start + 1;
  size_[id] = sz - 1;
  id_at_[start + 1] = id;
  if (changed) changed->push_back(v);
}

void Partition::refine_all(const LocalGraph& g) { run(g, true, {}); }

void Partition::refine(const LocalGraph& g, std::vector<std::uint32_t> changed) {
  run(g, false, std::move(changed));
}

namespace {

struct Signatures {
  std::vector<std::uint32_t> offset{0};
  std::vector<std::uint32_t> data;

  void clear() {
    offset.assign(1, 0);
    data.clear();
  }
  std::uint32_t size() const { return static_cast<std::uint32_t>(offset.size() - 1); }
  std::pair<const std::uint32_t*, const std::uint32_t*> view(std::uint32_t k) const {
    return {data.data() + offset[k], data.data() + offset[k + 1]};
  }
  int compare(std::uint32_t a, std::uint32_t b) const {
    auto [ab, ae] = view(a);
    auto [bb, be] = view(b);
    if (std::lexicographical_compare(ab, ae, bb, be)) return -1;
    return std::equal(ab, ae, bb, be) ? 0 : 1;
  }
};

// One cell's split, decided before any cell of the round moves.
struct Plan {
  std::uint32_t id = 0;
  // Touched vertices in final order and the sizes of their groups.
  std::vector<std::uint32_t> order;
  std::vector<std::uint32_t> groups;
  // Untouched vertices (all sharing one signature) join group `block`
  // ahead of its touched members; `before` touched vertices precede them.
  std::uint32_t untouched = 0;
  std::uint32_t block = 0;
  std::uint32_t before = 0;
};

}  // namespace

void Partition::run(const LocalGraph& g, bool full, std::vector<std::uint32_t> changed) {
  const std::uint32_t n = size();
  std::vector<std::uint8_t> mark(n, 0);
  std::vector<std::uint32_t> touched;
  std::vector<std::uint32_t> idx;
  std::vector<Plan> plans;
  Signatures sig;

  auto add_signature = [&](std::uint32_t u) {
    std::size_t from = sig.data.size();
    for (std::uint32_t w : g.neighbors(u)) sig.data.push_back(start_[id_of_[w]]);
    std::sort(sig.data.begin() + from, sig.data.end());
    sig.offset.push_back(static_cast<std::uint32_t>(sig.data.size()));
  };

  for (;;) {
    touched.clear();
    if (full) {
      for (std::uint32_t v = 0; v < n; ++v) {
        if (size_[id_of_[v]] > 1) touched.push_back(v);
      }
      full = false;
    } else {
      for (std::uint32_t v : changed) {
        for (std::uint32_t u : g.neighbors(v)) {
          if (size_[id_of_[u]] > 1 && !mark[u]) {
            mark[u] = 1;
            touched.push_back(u);
          }
        }
      }
    }
    for (std::uint32_t u : touched) mark[u] = 1;
    if (touched.empty()) break;
    std::sort(touched.begin(), touched.end(), [&](std::uint32_t a, std::uint32_t b) {
      return start_[id_of_[a]] < start_[id_of_[b]];
    });

    sig.clear();
    for (std::uint32_t u : touched) add_signature(u);
    plans.clear();
    for (std::size_t i = 0; i < touched.size();) {
      const std::uint32_t id = id_of_[touched[i]];
      std::size_t j = i;
      while (j < touched.size() && id_of_[touched[j]] == id) ++j;
      const auto t = static_cast<std::uint32_t>(j - i);
      Plan plan;
      plan.id = id;
      plan.untouched = size_[id] - t;
      // Signature slot of the untouched representative, if any.
      std::uint32_t rep = static_cast<std::uint32_t>(-1);
      if (plan.untouched > 0) {
        std::uint32_t p = start_[id];
        while (mark[elems_[p]]) ++p;
        rep = sig.size();
        add_signature(elems_[p]);
      }
      idx.resize(t);
      for (std::uint32_t k = 0; k < t; ++k) idx[k] = static_cast<std::uint32_t>(i + k);
      std::sort(idx.begin(), idx.end(),
                [&](std::uint32_t a, std::uint32_t b) { return sig.compare(a, b) < 0; });
      bool block_placed = plan.untouched == 0;
      for (std::uint32_t k = 0; k < t; ++k) {
        int vs_rep = block_placed ? 1 : sig.compare(idx[k], rep);
        if (!block_placed && vs_rep >= 0) {
          plan.block = static_cast<std::uint32_t>(plan.groups.size());
          plan.groups.push_back(0);
          block_placed = true;
          if (vs_rep > 0) plan.groups.push_back(0);
        } else if (k == 0 || sig.compare(idx[k - 1], idx[k]) != 0) {
          plan.groups.push_back(0);
        }
        if (vs_rep < 0) ++plan.before;
        plan.order.push_back(touched[idx[k]]);
        ++plan.groups.back();
      }
      if (!block_placed) {
        plan.block = static_cast<std::uint32_t>(plan.groups.size());
        plan.groups.push_back(0);
      }
      if (plan.groups.size() > 1) plans.push_back(std::move(plan));
      i = j;
    }
    for (std::uint32_t u : touched) mark[u] = 0;

    changed.clear();
    for (Plan& plan : plans) {
      const std::uint32_t s = start_[plan.id];
      const std::uint32_t k = size_[plan.id];
      const std::uint32_t b = plan.untouched;
      const std::uint32_t t = k - b;
      auto place = [&](std::uint32_t u, std::uint32_t target) {
        std::uint32_t other = elems_[target];
        std::uint32_t pu = pos_[u];
        elems_[pu] = other;
        pos_[other] = pu;
        elems_[target] = u;
        pos_[u] = target;
      };
      // Touched to the tail, then the untouched run [s, s+b) slides to
      // [s+before, s+before+b) with min(before, b) swaps.
      for (std::uint32_t q = 0; q < t; ++q) place(plan.order[q], s + k - 1 - q);
      const std::uint32_t a = plan.before;
      const std::uint32_t shift_from = a <= b ? s + b : s + a;
      for (std::uint32_t q = 0; q < std::min(a, b); ++q) {
        place(elems_[shift_from + q], s + q);
      }
      std::uint32_t p = s;
      for (std::uint32_t q = 0; q < t; ++q) {
        if (p == s + a) p += b;
        place(plan.order[q], p++);
      }

      // Group g keeps the cell's id: the untouched block if there is one,
      // else the first largest group.
      std::uint32_t keep = plan.block;
      if (b == 0) {
        for (std::uint32_t gi = 0; gi < plan.groups.size(); ++gi) {
          if (plan.groups[gi] > plan.groups[keep]) keep = gi;
        }
      }
      std::uint32_t start = s;
      std::uint32_t q = 0;
      for (std::uint32_t gi = 0; gi < plan.groups.size(); ++gi) {
        const std::uint32_t extra = gi == plan.block ? b : 0;
        const std::uint32_t len = plan.groups[gi] + extra;
        std::uint32_t id = plan.id;
        if (gi != keep) {
          id = num_cells_++;
          for (std::uint32_t r = 0; r < plan.groups[gi]; ++r) {
            id_of_[plan.order[q + r]] = id;
            changed.push_back(plan.order[q + r]);
          }
        }
        start_[id] = start;
        size_[id] = len;
        id_at_[start] = id;
        start += len;
        q += plan.groups[gi];
      }
    }
    if (changed.empty()) break;
  }
}

std::vector<std::uint32_t> Partition::invariant(const LocalGraph& g) const {
  std::vector<std::uint32_t> out;
  std::vector<std::uint32_t> nb;
  for (std::uint32_t s = 0; s < size(); s += cell_size(s)) {
    out.push_back(cell_size(s));
    nb.clear();
    for (std::uint32_t u : g.neighbors(elems_[s])) nb.push_back(cell_of(u));
    std::sort(nb.begin(), nb.end());
    std::size_t count_at = out.size();
    out.push_back(0);
    for (std::size_t i = 0; i < nb.size();) {
      std::size_t j = i;
      while (j < nb.size() && nb[j] == nb[i]) ++j;
      out.push_back(nb[i]);
      out.push_back(static_cast<std::uint32_t>(j - i));
      ++out[count_at];
      i = j;
    }
  }
  return out;
}

}  // namespace symtree::detail
