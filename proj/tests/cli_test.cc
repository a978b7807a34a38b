#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "test_util.h"

namespace symtree {
namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun cli(const std::string& args) {
  std::string cmd = std::string(SYMTREE_CLI_PATH) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string fixture(const std::string& name) { return testing::fixture_path(name); }

std::string write_temp(const std::string& name, const std::string& body) {
  std::string path = ::testing::TempDir() + "symtree_cli_" + name;
  std::ofstream(path) << body;
  return path;
}

// Same graph as the apex graph fixture with ids shifted by 100 and permuted,
// lines shuffled.
std::string shuffled_apex() {
  std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {4, 6},
                                         {0, 7}, {1, 7}, {2, 7}, {3, 7}, {4, 7}, {5, 7}, {6, 7}};
  const int relabel[] = {105, 101, 107, 100, 103, 106, 102, 104};
  std::mt19937_64 rng(91);
  std::shuffle(edges.begin(), edges.end(), rng);
  std::ostringstream s;
  s << "# shuffled copy\n";
  for (auto [a, b] : edges) {
    if (rng() % 2) std::swap(a, b);
    s << relabel[a] << ' ' << relabel[b] << '\n';
  }
  return s.str();
}

TEST(Cli, CanonIsDeterministicAndLabelFree) {
  CliRun a = cli("canon " + fixture("apex.el"));
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out.substr(0, 5), "8 14\n");
  EXPECT_EQ(cli("canon " + fixture("apex.el")).out, a.out);
  std::string copy = write_temp("shuffled.el", shuffled_apex());
  EXPECT_EQ(cli("canon " + copy).out, a.out);
  EXPECT_EQ(cli("--threads 3 canon " + fixture("apex.el")).out, a.out);
  CliRun plain = cli("--no-reduce canon " + fixture("apex.el"));
  EXPECT_EQ(plain.code, 0);
  EXPECT_EQ(cli("--no-reduce canon " + copy).out, plain.out);
}

TEST(Cli, Iso) {
  std::string copy = write_temp("iso_copy.el", shuffled_apex());
  CliRun same = cli("iso " + fixture("apex.el") + " " + copy);
  EXPECT_EQ(same.code, 0);
  EXPECT_EQ(same.out, "ISOMORPHIC\n");
  std::string c6 = write_temp("c6.el", "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
  std::string k3k3 = write_temp("k3k3.el", "0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n");
  CliRun diff = cli("iso " + c6 + " " + k3k3);
  EXPECT_EQ(diff.code, 1);
  EXPECT_EQ(diff.out, "NON-ISOMORPHIC\n");
  EXPECT_EQ(cli("--no-reduce iso " + c6 + " " + k3k3).code, 1);
  std::string empty = write_temp("empty.el", "# nothing\n");
  EXPECT_EQ(cli("iso " + empty + " " + empty).code, 0);
}

TEST(Cli, AutoAndOrbits) {
  CliRun orbits = cli("orbits " + fixture("apex.el"));
  EXPECT_EQ(orbits.code, 0);
  EXPECT_EQ(orbits.out, "0 1 2 3 | 4 5 6 | 7\n");
  CliRun aut = cli("auto " + fixture("apex.el"));
  EXPECT_EQ(aut.code, 0);
  EXPECT_NE(aut.out.find("order 48\n"), std::string::npos);
  EXPECT_EQ(aut.out.find("trivial"), std::string::npos);
  EXPECT_EQ(aut.out.front(), '(');
  std::string k3 = write_temp("k3.el", "0 1\n1 2\n2 0\n");
  EXPECT_NE(cli("auto " + k3).out.find("order 6\n"), std::string::npos);
  std::string asym = write_temp("asym.el", "0 1\n1 2\n2 3\n3 4\n4 5\n1 6\n2 6\n");
  EXPECT_EQ(cli("auto " + asym).out, "trivial group\norder 1\n");
  EXPECT_EQ(cli("orbits " + asym).out, "0 | 1 | 2 | 3 | 4 | 5 | 6\n");
}

TEST(Cli, Ssm) {
  std::string q = write_temp("q.txt", "3 2 6\n");
  CliRun r = cli("ssm " + fixture("hub.el") + " " + q);
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::set<std::string> sets;
  for (std::string line; std::getline(lines, line);) sets.insert(line);
  EXPECT_EQ(sets.size(), 12u);
  EXPECT_TRUE(sets.count("2 3 6"));
  EXPECT_TRUE(sets.count("8 9 10"));
  EXPECT_TRUE(sets.count("10 12 13"));
  CliRun m = cli("ssm --mappings " + fixture("hub.el") + " " + q);
  EXPECT_EQ(m.code, 0);
  EXPECT_NE(m.out.find("2 3 6 : 2->2 3->3 6->6\n"), std::string::npos);
  std::string missing = write_temp("q_missing.txt", "3 99\n");
  EXPECT_EQ(cli("ssm " + fixture("hub.el") + " " + missing).code, 2);
  std::string blank = write_temp("q_blank.txt", "\n");
  EXPECT_EQ(cli("ssm " + fixture("hub.el") + " " + blank).code, 2);
}

TEST(Cli, TreeStats) {
  CliRun r = cli("--no-reduce tree-stats " + fixture("apex.el"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "nodes 7\nsingleton_leaves 4\nnon_singleton_leaves 1\n"
            "avg_non_singleton_size 4\ndepth 2\n");
  std::string dot = ::testing::TempDir() + "symtree_cli_tree.dot";
  EXPECT_EQ(cli("tree-stats --dot " + dot + " " + fixture("apex.el")).code, 0);
  std::ifstream in(dot);
  std::string first;
  std::getline(in, first);
  EXPECT_NE(first.find("digraph"), std::string::npos);
  std::string empty = write_temp("stats_empty.el", "");
  EXPECT_EQ(cli("tree-stats " + empty).out,
            "nodes 0\nsingleton_leaves 0\nnon_singleton_leaves 0\n"
            "avg_non_singleton_size 0\ndepth 0\n");
}

TEST(Cli, Dimacs) {
  std::string uncolored = write_temp("k3.dimacs", "c triangle\np edge 3 3\ne 1 2\ne 2 3\ne 1 3\n");
  CliRun r = cli("auto " + uncolored);
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("order 6\n"), std::string::npos);
  // Colors cut the group down to the swap of 2 and 3.
  std::string colored = write_temp("k3c.col", "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\nn 1 1\n");
  CliRun c = cli("auto " + colored);
  EXPECT_EQ(c.out, "(2,3)\norder 2\n");
  std::string as_el = write_temp("k3_as_el.txt", "p edge 3 0\n");
  EXPECT_EQ(cli("--format el canon " + as_el).code, 2);
  EXPECT_EQ(cli("--format dimacs canon " + as_el).code, 0);
}

TEST(Cli, Errors) {
  std::string bad = write_temp("bad.el", "0 1\n1 x\n");
  EXPECT_EQ(cli("canon " + bad).code, 2);
  EXPECT_EQ(cli("canon /nonexistent/graph.el").code, 2);
  EXPECT_EQ(cli("frobnicate " + bad).code, 2);
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("--threads 0 canon " + fixture("apex.el")).code, 2);
}

}  // namespace
}  // namespace symtree
