// Command-line front end: canonical certificates, isomorphism tests,
// automorphism groups, orbits, symmetric subgraph matching, tree statistics.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "CLI11.hpp"
#include "symtree/automorphism.h"
#include "symtree/autotree.h"
#include "symtree/errors.h"
#include "symtree/graph_io.h"
#include "symtree/ssm.h"

namespace {

using symtree::Vertex;

constexpr int kParseError = 2;
constexpr int kInternalError = 3;

struct Options {
  std::string format = "auto";
  bool no_reduce = false;
  bool stats = false;
  unsigned threads = 1;
};

struct Input {
  symtree::Graph graph;
  symtree::Coloring coloring;
  std::vector<std::uint64_t> ids;  // original id of each vertex
};

class Timer {
 public:
  explicit Timer(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
  void lap(const std::string& what) {
    if (!enabled_) return;
    auto now = std::chrono::steady_clock::now();
    std::cerr << what << ": " << std::chrono::duration<double, std::milli>(now - start_).count()
              << " ms\n";
    start_ = now;
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

bool is_dimacs(const Options& opt, const std::string& path) {
  if (opt.format == "dimacs") return true;
  if (opt.format == "el") return false;
  for (const char* ext : {".dimacs", ".col", ".dim"}) {
    std::string e(ext);
    if (path.size() >= e.size() && path.compare(path.size() - e.size(), e.size(), e) == 0) {
      return true;
    }
  }
  return false;
}

Input load(const Options& opt, const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw symtree::ParseError(0, "cannot open " + path);
    in = &file;
  }
  Input input;
  if (is_dimacs(opt, path)) {
    auto d = symtree::load_dimacs(*in);
    input.graph = std::move(d.graph);
    input.coloring = std::move(d.coloring);
    input.ids.resize(input.graph.num_vertices());
    for (std::size_t v = 0; v < input.ids.size(); ++v) input.ids[v] = v + 1;
  } else {
    input.graph = symtree::load_edge_list(*in, &input.ids);
    input.coloring = symtree::Coloring::unit(input.graph.num_vertices());
  }
  return input;
}

symtree::AutoTree build_tree(const Options& opt, const Input& input, bool reduce) {
  symtree::BuildOptions b;
  b.reduce = reduce;
  b.threads = opt.threads;
  return symtree::build(input.graph, input.coloring, b);
}

std::string cycles(const symtree::Permutation& p, const std::vector<std::uint64_t>& ids) {
  std::string out;
  std::vector<bool> done(p.size(), false);
  for (Vertex s = 0; s < p.size(); ++s) {
    if (done[s] || p(s) == s) continue;
    out += '(';
    for (Vertex v = s; !done[v]; v = p(v)) {
      if (v != s) out += ',';
      out += std::to_string(ids[v]);
      done[v] = true;
    }
    out += ')';
  }
  return out;
}

int cmd_canon(const Options& opt, const std::string& path) {
  Timer t(opt.stats);
  Input in = load(opt, path);
  t.lap("load");
  auto tree = build_tree(opt, in, !opt.no_reduce);
  t.lap("build");
  std::cout << symtree::serialize_certificate(tree.canonical_form());
  return 0;
}

int cmd_iso(const Options& opt, const std::string& a, const std::string& b) {
  Timer t(opt.stats);
  Input ga = load(opt, a);
  Input gb = load(opt, b);
  t.lap("load");
  bool same = build_tree(opt, ga, !opt.no_reduce).canonical_form() ==
              build_tree(opt, gb, !opt.no_reduce).canonical_form();
  t.lap("build");
  std::cout << (same ? "ISOMORPHIC" : "NON-ISOMORPHIC") << '\n';
  return same ? 0 : 1;
}

int cmd_auto(const Options& opt, const std::string& path) {
  Timer t(opt.stats);
  Input in = load(opt, path);
  t.lap("load");
  symtree::AutomorphismIndex index(build_tree(opt, in, false));
  t.lap("build");
  if (index.generators().empty()) std::cout << "trivial group\n";
  for (const auto& p : index.generators()) std::cout << cycles(p, in.ids) << '\n';
  std::cout << "order " << index.group_order() << '\n';
  return 0;
}

int cmd_orbits(const Options& opt, const std::string& path) {
  Timer t(opt.stats);
  Input in = load(opt, path);
  t.lap("load");
  symtree::AutomorphismIndex index(build_tree(opt, in, false));
  t.lap("build");
  std::vector<std::vector<std::uint64_t>> orbits;
  for (const auto& orbit : index.orbits()) {
    std::vector<std::uint64_t> o;
    for (Vertex v : orbit) o.push_back(in.ids[v]);
    std::sort(o.begin(), o.end());
    orbits.push_back(std::move(o));
  }
  std::sort(orbits.begin(), orbits.end());
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    if (i) std::cout << " | ";
    for (std::size_t k = 0; k < orbits[i].size(); ++k) {
      if (k) std::cout << ' ';
      std::cout << orbits[i][k];
    }
  }
  std::cout << '\n';
  return 0;
}

int cmd_ssm(const Options& opt, const std::string& path, const std::string& query_path,
            bool mappings) {
  Timer t(opt.stats);
  Input in = load(opt, path);
  std::unordered_map<std::uint64_t, Vertex> compact;
  for (std::size_t v = 0; v < in.ids.size(); ++v) compact[in.ids[v]] = static_cast<Vertex>(v);
  std::ifstream qf(query_path);
  if (!qf) throw symtree::ParseError(0, "cannot open " + query_path);
  std::vector<Vertex> query;
  std::string token;
  while (qf >> token) {
    std::uint64_t raw = 0;
    try {
      std::size_t used = 0;
      raw = std::stoull(token, &used);
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw symtree::ParseError(0, "malformed query id '" + token + "'");
    }
    auto it = compact.find(raw);
    if (it == compact.end()) throw symtree::ParseError(0, "query id " + token + " not in graph");
    query.push_back(it->second);
  }
  if (query.empty()) throw symtree::ParseError(0, "query is empty");
  t.lap("load");
  auto tree = build_tree(opt, in, false);
  t.lap("build");
  auto matches = symtree::ssm(tree, query);
  t.lap("match");
  std::sort(query.begin(), query.end());
  query.erase(std::unique(query.begin(), query.end()), query.end());
  for (const auto& m : matches) {
    std::vector<std::uint64_t> set;
    for (Vertex v : m.vertices) set.push_back(in.ids[v]);
    std::sort(set.begin(), set.end());
    for (std::size_t k = 0; k < set.size(); ++k) std::cout << (k ? " " : "") << set[k];
    if (mappings) {
      std::vector<std::pair<std::uint64_t, std::uint64_t>> pairs;
      for (std::size_t k = 0; k < query.size(); ++k) {
        pairs.emplace_back(in.ids[query[k]], in.ids[m.witness[k]]);
      }
      std::sort(pairs.begin(), pairs.end());
      std::cout << " :";
      for (auto [from, to] : pairs) std::cout << ' ' << from << "->" << to;
    }
    std::cout << '\n';
  }
  if (opt.stats) std::cerr << "matches: " << matches.size() << '\n';
  return 0;
}

int cmd_tree_stats(const Options& opt, const std::string& path, const std::string& dot) {
  Timer t(opt.stats);
  Input in = load(opt, path);
  t.lap("load");
  auto tree = build_tree(opt, in, !opt.no_reduce);
  t.lap("build");
  auto s = symtree::tree_stats(tree);
  std::cout << "nodes " << s.nodes << '\n'
            << "singleton_leaves " << s.singleton_leaves << '\n'
            << "non_singleton_leaves " << s.non_singleton_leaves << '\n'
            << "avg_non_singleton_size " << s.avg_non_singleton_size << '\n'
            << "depth " << s.depth << '\n';
  if (!dot.empty()) {
    std::ofstream out(dot);
    if (!out) throw symtree::ParseError(0, "cannot write " + dot);
    symtree::write_dot(tree, out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Canonical labeling, automorphisms and symmetric subgraph matching"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Input format")
      ->check(CLI::IsMember({"auto", "el", "dimacs"}));
  app.add_flag("--no-reduce", opt.no_reduce, "Skip structural-equivalence reduction");
  app.add_flag("--stats", opt.stats, "Print timings to stderr");
  app.add_option("--threads", opt.threads, "Worker threads for tree construction")
      ->check(CLI::Range(1u, 1024u));

  std::string input, second, query, dot;
  bool mappings = false;
  auto* canon = app.add_subcommand("canon", "Print the canonical certificate");
  canon->add_option("input", input)->required();
  auto* iso = app.add_subcommand("iso", "Exit 0 if isomorphic, 1 otherwise");
  iso->add_option("first", input)->required();
  iso->add_option("second", second)->required();
  auto* aut = app.add_subcommand("auto", "Automorphism group generators and order");
  aut->add_option("input", input)->required();
  auto* orb = app.add_subcommand("orbits", "Vertex orbit partition");
  orb->add_option("input", input)->required();
  auto* ssm = app.add_subcommand("ssm", "All images of a vertex set under Aut(G)");
  ssm->add_option("input", input)->required();
  ssm->add_option("query", query, "File of whitespace-separated vertex ids")->required();
  ssm->add_flag("--mappings", mappings, "Also print one witness mapping per match");
  auto* stats = app.add_subcommand("tree-stats", "AutoTree size statistics");
  stats->add_option("input", input)->required();
  stats->add_option("--dot", dot, "Write the tree in Graphviz format");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }
  try {
    if (*canon) return cmd_canon(opt, input);
    if (*iso) return cmd_iso(opt, input, second);
    if (*aut) return cmd_auto(opt, input);
    if (*orb) return cmd_orbits(opt, input);
    if (*ssm) return cmd_ssm(opt, input, query, mappings);
    if (*stats) return cmd_tree_stats(opt, input, dot);
  } catch (const symtree::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const symtree::InternalConsistencyError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternalError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternalError;
  }
  return kInternalError;
}
