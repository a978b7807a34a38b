#ifndef SYMTREE_GRAPH_IO_H_
#define SYMTREE_GRAPH_IO_H_

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "symtree/coloring.h"
#include "symtree/graph.h"

namespace symtree {

// One "u v" pair of non-negative integers per line; '#' starts a comment
// line. Ids are compacted to 0..n-1 in order of first appearance and the
// original id of vertex i is written to (*original_ids)[i]. Self-loops still
// introduce their vertex. Throws ParseError.
Graph load_edge_list(std::istream& in, std::vector<std::uint64_t>* original_ids = nullptr);

struct DimacsGraph {
  Graph graph;
  Coloring coloring;
};

// "c" comments, one "p edge n m" header, "e u v" edges (1-based), optional
// "n v c" vertex colors. Uncolored vertices get color 0. Throws ParseError.
DimacsGraph load_dimacs(std::istream& in);

// Round-trips through load_edge_list to an identical Graph.
void save_edge_list(const Graph& g, std::ostream& out);

}  // namespace symtree

#endif  // SYMTREE_GRAPH_IO_H_
