#pragma once

#include <array>
#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/smith.hpp"

namespace gemkit {

// The 2-complex with one 0-cell per vertex, one 1-cell per edge and one
// 2-cell per bicolored cycle. Edges of a bipartite graph run from side 0 to
// side 1 of the bipartition; otherwise from the lower vertex index.
struct Spine {
  struct Edge {
    int tail = 0;
    int head = 0;
    int color = 0;
  };

  std::vector<Edge> edges;                 // ordered by (tail, color)
  std::vector<std::array<int, kColors>> edge_at;  // edge id of (vertex, color)
  std::vector<char> in_tree;               // breadth-first spanning tree from vertex 0
  std::vector<int> cotree;                 // non-tree edge ids, ascending
  std::vector<int> cotree_slot;            // edge id -> index in cotree, or -1
  std::vector<BicoloredCycle> cells;       // all_bicolored_cycles order

  // +1 when walking from v along its c-edge follows the edge orientation.
  int step_sign(int v, int c) const { return edges[edge_at[v][c]].tail == v ? 1 : -1; }

  // Rows: cotree edges. Columns: 2-cells. Entry: coefficient of the edge in
  // the cell boundary, which is the cell boundary written in the basis of
  // fundamental cycles.
  IntMatrix boundary_in_cycle_basis() const;
};

// Throws NotConnected.
Spine build_spine(const ColoredGraph& g);

}  // namespace gemkit
