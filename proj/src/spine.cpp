#include "gemkit/spine.hpp"

#include "gemkit/errors.hpp"

namespace gemkit {

Spine build_spine(const ColoredGraph& g) {
  if (!is_connected(g)) throw GemError(ErrorKind::NotConnected, "spine needs a connected graph");
  const int n = g.order();
  const auto sides = bipartition(g);

  Spine s;
  s.edge_at.assign(n, {-1, -1, -1, -1});
  for (int v = 0; v < n; ++v) {
    for (int c = 0; c < kColors; ++c) {
      const int w = g.neighbor(v, c);
      const bool is_tail = sides ? (*sides)[v] == 0 : v < w;
      if (!is_tail) continue;
      const int id = static_cast<int>(s.edges.size());
      s.edges.push_back({v, w, c});
      s.edge_at[v][c] = id;
      s.edge_at[w][c] = id;
    }
  }

  s.in_tree.assign(s.edges.size(), 0);
  std::vector<char> seen(n, 0);
  std::vector<int> queue{0};
  seen[0] = 1;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    const int v = queue[k];
    for (int c = 0; c < kColors; ++c) {
      const int w = g.neighbor(v, c);
      if (seen[w]) continue;
      seen[w] = 1;
      s.in_tree[s.edge_at[v][c]] = 1;
      queue.push_back(w);
    }
  }

  s.cotree_slot.assign(s.edges.size(), -1);
  for (int e = 0; e < static_cast<int>(s.edges.size()); ++e) {
    if (s.in_tree[e]) continue;
    s.cotree_slot[e] = static_cast<int>(s.cotree.size());
    s.cotree.push_back(e);
  }
  s.cells = all_bicolored_cycles(g);
  return s;
}

IntMatrix Spine::boundary_in_cycle_basis() const {
  IntMatrix m(cotree.size(), cells.size());
  for (std::size_t j = 0; j < cells.size(); ++j) {
    const auto& cell = cells[j];
    for (int k = 0; k < cell.length(); ++k) {
      const int v = cell.vertices[k];
      const int c = k % 2 == 0 ? cell.low_color : cell.high_color;
      const int slot = cotree_slot[edge_at[v][c]];
      if (slot >= 0) m(slot, j) += step_sign(v, c);
    }
  }
  return m;
}

}  // namespace gemkit
