#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

namespace gemkit {

inline constexpr int kColors = 4;

using Involution = std::vector<int>;
using ColorPermutation = std::array<int, kColors>;

// A 4-regular multigraph whose edges are properly colored by {0,1,2,3},
// stored as one fixed-point-free involution per color. Immutable once built.
class ColoredGraph {
 public:
  // Throws GemError(InvalidGraph) unless every map is a fixed-point-free
  // involution on the same even-sized vertex set.
  explicit ColoredGraph(std::array<Involution, kColors> inv);

  int order() const noexcept { return static_cast<int>(inv_[0].size()); }
  int edge_count() const noexcept { return 2 * order(); }

  int neighbor(int v, int c) const { return inv_[c][v]; }
  const Involution& involution(int c) const { return inv_[c]; }

  // Color c of the result is color sigma^-1(c) of this graph, i.e. an edge
  // of color c here gets color sigma[c].
  ColoredGraph permute_colors(const ColorPermutation& sigma) const;

  // Vertex v of this graph becomes vertex relabel[v] of the result.
  ColoredGraph relabel(std::span<const int> relabel) const;

  friend bool operator==(const ColoredGraph&, const ColoredGraph&) = default;

 private:
  std::array<Involution, kColors> inv_;
};

ColoredGraph disjoint_union(const ColoredGraph& a, const ColoredGraph& b);

// The unique order-2 gem: two vertices joined by one edge of each color.
ColoredGraph dipole();

// All 24 permutations of the color set in lexicographic order.
const std::array<ColorPermutation, 24>& all_color_permutations();

bool is_connected(const ColoredGraph& g);

// Side (0 or 1) of every vertex when g is bipartite. Vertex 0 lies on side 0
// of its component; every component is 2-colored independently.
std::optional<std::vector<int>> bipartition(const ColoredGraph& g);

inline bool is_bipartite(const ColoredGraph& g) { return bipartition(g).has_value(); }

struct BicoloredCycle {
  int low_color = 0;
  int high_color = 1;
  // Traversal order: vertices[k+1] is reached from vertices[k] along the
  // low color when k is even and the high color when k is odd.
  std::vector<int> vertices;

  int length() const noexcept { return static_cast<int>(vertices.size()); }
};

std::vector<BicoloredCycle> bicolored_cycles(const ColoredGraph& g, int c1, int c2);

// Cycles for all six color pairs, pairs in lexicographic order.
std::vector<BicoloredCycle> all_bicolored_cycles(const ColoredGraph& g);

// A connected component of g with one color deleted, together with its induced
// 3-colored graph on local indices 0..size-1.
struct Residue {
  int missing_color = 0;
  std::array<int, 3> colors{};      // remaining colors, ascending
  std::vector<int> vertices;        // ambient vertex ids, ascending
  std::array<Involution, 3> inv;    // inv[k] is color colors[k] on local ids

  int size() const noexcept { return static_cast<int>(vertices.size()); }
};

std::vector<Residue> residues(const ColoredGraph& g, int missing_color);

}  // namespace gemkit
