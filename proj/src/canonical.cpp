#include "gemkit/canonical.hpp"

#include <algorithm>
#include <array>

#include "gemkit/errors.hpp"

namespace gemkit {

namespace {

using ColorView = std::array<const Involution*, kColors>;

ColorView permuted_view(const ColoredGraph& g, const ColorPermutation& sigma) {
  ColorView view{};
  for (int c = 0; c < kColors; ++c) view[sigma[c]] = &g.involution(c);
  return view;
}

}  // namespace

CodeEntries canonical_entries(const ColoredGraph& g) {
  if (!is_bipartite(g)) throw GemError(ErrorKind::NotBipartite, "canonical codes need a bipartite graph");
  if (!is_connected(g)) throw GemError(ErrorKind::NotConnected, "canonical codes need a connected graph");

  const int n = g.order();
  const int p = n / 2;
  CodeEntries best;
  CodeEntries current(3 * p);
  std::vector<int> label(n);
  std::vector<int> negative(p);

  for (int start = 0; start < n; ++start) {
    for (const auto& sigma : all_color_permutations()) {
      const ColorView inv = permuted_view(g, sigma);
      std::fill(label.begin(), label.end(), 0);
      label[start] = -1;
      label[(*inv[0])[start]] = 1;
      negative[0] = start;
      int assigned = 1;
      // Only block 1 is final after each step, so the prefix test can reject a
      // traversal early; blocks 2 and 3 are compared once it completes.
      bool strictly_smaller = best.empty();
      bool rejected = false;
      for (int i = 0; i < p && !rejected; ++i) {
        const int v = negative[i];
        for (int c = 1; c < kColors; ++c) {
          const int w = (*inv[c])[v];
          if (label[w] == 0) {
            ++assigned;
            label[w] = assigned;
            const int partner = (*inv[0])[w];
            label[partner] = -assigned;
            negative[assigned - 1] = partner;
          }
          current[(c - 1) * p + i] = label[w];
        }
        if (!strictly_smaller) {
          if (current[i] > best[i]) rejected = true;
          else if (current[i] < best[i]) strictly_smaller = true;
        }
      }
      if (rejected) continue;
      if (strictly_smaller || current < best) best = current;
    }
  }
  return best;
}

std::string canonical_code(const ColoredGraph& g) { return render_code(canonical_entries(g)); }

std::vector<int> structure_certificate(const ColoredGraph& g) {
  if (!is_connected(g)) throw GemError(ErrorKind::NotConnected, "certificates need a connected graph");
  const int n = g.order();
  std::vector<int> best;
  std::vector<int> current(static_cast<std::size_t>(n) * kColors);
  std::vector<int> label(n);
  std::vector<int> queue(n);

  for (int start = 0; start < n; ++start) {
    for (const auto& sigma : all_color_permutations()) {
      const ColorView inv = permuted_view(g, sigma);
      std::fill(label.begin(), label.end(), -1);
      label[start] = 0;
      queue[0] = start;
      int assigned = 1;
      bool strictly_smaller = best.empty();
      bool rejected = false;
      for (int k = 0; k < n && !rejected; ++k) {
        const int v = queue[k];
        for (int c = 0; c < kColors && !rejected; ++c) {
          const int w = (*inv[c])[v];
          if (label[w] == -1) {
            label[w] = assigned;
            queue[assigned++] = w;
          }
          const std::size_t slot = static_cast<std::size_t>(k) * kColors + c;
          current[slot] = label[w];
          if (!strictly_smaller) {
            if (current[slot] > best[slot]) rejected = true;
            else if (current[slot] < best[slot]) strictly_smaller = true;
          }
        }
      }
      if (!rejected && strictly_smaller) best = current;
    }
  }
  return best;
}

bool are_isomorphic(const ColoredGraph& a, const ColoredGraph& b) {
  if (!is_connected(a) || !is_connected(b)) {
    throw GemError(ErrorKind::NotConnected, "isomorphism test needs connected graphs");
  }
  if (a.order() != b.order()) return false;
  return structure_certificate(a) == structure_certificate(b);
}

}  // namespace gemkit
