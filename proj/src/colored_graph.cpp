#include "gemkit/colored_graph.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gemkit/errors.hpp"

namespace gemkit {

namespace {

void check_involution(const Involution& map, int c, std::size_t n) {
  if (map.size() != n) {
    throw GemError(ErrorKind::InvalidGraph, "color " + std::to_string(c) + " map has wrong size");
  }
  for (std::size_t v = 0; v < n; ++v) {
    const int w = map[v];
    if (w < 0 || static_cast<std::size_t>(w) >= n) {
      std::ostringstream msg;
      msg << "color " << c << " sends vertex " << v << " outside the vertex set";
      throw GemError(ErrorKind::InvalidGraph, msg.str());
    }
    if (static_cast<std::size_t>(w) == v) {
      std::ostringstream msg;
      msg << "color " << c << " has a loop at vertex " << v;
      throw GemError(ErrorKind::InvalidGraph, msg.str());
    }
    if (static_cast<std::size_t>(map[w]) != v) {
      std::ostringstream msg;
      msg << "color " << c << " is not an involution at vertex " << v;
      throw GemError(ErrorKind::InvalidGraph, msg.str());
    }
  }
}

}  // namespace

ColoredGraph::ColoredGraph(std::array<Involution, kColors> inv) : inv_(std::move(inv)) {
  const std::size_t n = inv_[0].size();
  if (n == 0 || n % 2 != 0) {
    throw GemError(ErrorKind::InvalidGraph, "order must be a positive even integer");
  }
  for (int c = 0; c < kColors; ++c) check_involution(inv_[c], c, n);
}

ColoredGraph ColoredGraph::permute_colors(const ColorPermutation& sigma) const {
  std::array<Involution, kColors> out;
  for (int c = 0; c < kColors; ++c) out[sigma[c]] = inv_[c];
  return ColoredGraph(std::move(out));
}

ColoredGraph ColoredGraph::relabel(std::span<const int> relabel) const {
  const int n = order();
  if (static_cast<int>(relabel.size()) != n) {
    throw GemError(ErrorKind::InvalidGraph, "relabeling has wrong size");
  }
  std::array<Involution, kColors> out;
  for (int c = 0; c < kColors; ++c) {
    out[c].assign(n, -1);
    for (int v = 0; v < n; ++v) {
      const int image = relabel[v];
      if (image < 0 || image >= n || out[c][image] != -1) {
        throw GemError(ErrorKind::InvalidGraph, "relabeling is not a bijection");
      }
      out[c][image] = relabel[inv_[c][v]];
    }
  }
  return ColoredGraph(std::move(out));
}

ColoredGraph disjoint_union(const ColoredGraph& a, const ColoredGraph& b) {
  std::array<Involution, kColors> out;
  const int shift = a.order();
  for (int c = 0; c < kColors; ++c) {
    out[c] = a.involution(c);
    for (int w : b.involution(c)) out[c].push_back(w + shift);
  }
  return ColoredGraph(std::move(out));
}

ColoredGraph dipole() {
  return ColoredGraph({Involution{1, 0}, Involution{1, 0}, Involution{1, 0}, Involution{1, 0}});
}

const std::array<ColorPermutation, 24>& all_color_permutations() {
  static const std::array<ColorPermutation, 24> perms = [] {
    std::array<ColorPermutation, 24> out{};
    ColorPermutation p{0, 1, 2, 3};
    std::size_t k = 0;
    do {
      out[k++] = p;
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return perms;
}

bool is_connected(const ColoredGraph& g) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int c = 0; c < kColors; ++c) {
      const int w = g.neighbor(v, c);
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

std::optional<std::vector<int>> bipartition(const ColoredGraph& g) {
  const int n = g.order();
  std::vector<int> side(n, -1);
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (side[root] != -1) continue;
    side[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int c = 0; c < kColors; ++c) {
        const int w = g.neighbor(v, c);
        if (side[w] == -1) {
          side[w] = 1 - side[v];
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

std::vector<BicoloredCycle> bicolored_cycles(const ColoredGraph& g, int c1, int c2) {
  if (c1 == c2 || c1 < 0 || c2 < 0 || c1 >= kColors || c2 >= kColors) {
    throw GemError(ErrorKind::InvalidGraph, "bicolored cycles need two distinct colors");
  }
  const int lo = std::min(c1, c2);
  const int hi = std::max(c1, c2);
  const int n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<BicoloredCycle> out;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    BicoloredCycle cycle{lo, hi, {}};
    int v = start;
    bool low_step = true;
    do {
      seen[v] = 1;
      cycle.vertices.push_back(v);
      v = g.neighbor(v, low_step ? lo : hi);
      low_step = !low_step;
    } while (v != start);
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<BicoloredCycle> all_bicolored_cycles(const ColoredGraph& g) {
  std::vector<BicoloredCycle> out;
  for (int a = 0; a < kColors; ++a) {
    for (int b = a + 1; b < kColors; ++b) {
      auto part = bicolored_cycles(g, a, b);
      std::move(part.begin(), part.end(), std::back_inserter(out));
    }
  }
  return out;
}

std::vector<Residue> residues(const ColoredGraph& g, int missing_color) {
  if (missing_color < 0 || missing_color >= kColors) {
    throw GemError(ErrorKind::InvalidGraph, "color out of range");
  }
  std::array<int, 3> colors{};
  for (int c = 0, k = 0; c < kColors; ++c) {
    if (c != missing_color) colors[k++] = c;
  }

  const int n = g.order();
  std::vector<int> component(n, -1);
  std::vector<Residue> out;
  std::vector<int> stack;
  for (int root = 0; root < n; ++root) {
    if (component[root] != -1) continue;
    const int id = static_cast<int>(out.size());
    Residue r;
    r.missing_color = missing_color;
    r.colors = colors;
    component[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      r.vertices.push_back(v);
      for (int c : colors) {
        const int w = g.neighbor(v, c);
        if (component[w] == -1) {
          component[w] = id;
          stack.push_back(w);
        }
      }
    }
    std::sort(r.vertices.begin(), r.vertices.end());
    out.push_back(std::move(r));
  }

  std::vector<int> local(n, -1);
  for (auto& r : out) {
    for (int k = 0; k < r.size(); ++k) local[r.vertices[k]] = k;
    for (int k = 0; k < 3; ++k) {
      r.inv[k].resize(r.vertices.size());
      for (int j = 0; j < r.size(); ++j) r.inv[k][j] = local[g.neighbor(r.vertices[j], colors[k])];
    }
  }
  return out;
}

}  // namespace gemkit
