#include "gemkit/topology.hpp"

#include <algorithm>
#include <sstream>

#include "gemkit/errors.hpp"
#include "gemkit/spine.hpp"

namespace gemkit {

namespace {

int count_cycles(const Involution& a, const Involution& b) {
  const int n = static_cast<int>(a.size());
  std::vector<char> seen(n, 0);
  int count = 0;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++count;
    int v = start;
    do {
      seen[v] = 1;
      seen[a[v]] = 1;
      v = b[a[v]];
    } while (v != start);
  }
  return count;
}

bool residue_bipartite(const Residue& r) {
  std::vector<int> side(r.size(), -1);
  std::vector<int> stack{0};
  side[0] = 0;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (const auto& inv : r.inv) {
      const int w = inv[v];
      if (side[w] == -1) {
        side[w] = 1 - side[v];
        stack.push_back(w);
      } else if (side[w] == side[v]) {
        return false;
      }
    }
  }
  return true;
}

void require_connected(const ColoredGraph& g, const char* what) {
  if (!is_connected(g)) throw GemError(ErrorKind::NotConnected, std::string(what) + " needs a connected graph");
}

}  // namespace

SurfaceType SurfaceType::from_euler(bool orientable, int euler) {
  if (euler > 2 || (orientable && euler % 2 != 0) || (!orientable && euler > 1)) {
    throw GemError(ErrorKind::InvalidGraph, "no closed surface with euler characteristic " + std::to_string(euler) +
                                                (orientable ? " (orientable)" : " (non-orientable)"));
  }
  return {orientable, euler, orientable ? (2 - euler) / 2 : 2 - euler};
}

std::string SurfaceType::describe() const {
  if (orientable) {
    if (genus == 0) return "S2";
    if (genus == 1) return "T2";
    return "orientable genus " + std::to_string(genus);
  }
  return "non-orientable genus " + std::to_string(genus);
}

std::string HomologyGroup::describe() const {
  std::ostringstream out;
  bool first = true;
  if (rank > 0) {
    out << "Z";
    if (rank > 1) out << "^" << rank;
    first = false;
  }
  for (const auto& d : torsion) {
    if (!first) out << " + ";
    out << "Z/" << d;
    first = false;
  }
  if (first) out << "0";
  return out.str();
}

SurfaceType link_surface(const Residue& r) {
  // A 2-dimensional gem on m vertices triangulates its surface with m
  // triangles, 3m/2 edges and one vertex per bicolored cycle.
  const int faces = count_cycles(r.inv[0], r.inv[1]) + count_cycles(r.inv[0], r.inv[2]) +
                    count_cycles(r.inv[1], r.inv[2]);
  return SurfaceType::from_euler(residue_bipartite(r), faces - r.size() / 2);
}

BoundaryProfile boundary_profile(const ColoredGraph& g) {
  require_connected(g, "boundary profile");
  BoundaryProfile out;
  for (int c = 0; c < kColors; ++c) {
    for (const auto& r : residues(g, c)) {
      const SurfaceType s = link_surface(r);
      if (s.euler != 2) out.components.push_back(s);
    }
  }
  out.closed = out.components.empty();
  return out;
}

HomologyGroup first_homology(const ColoredGraph& g) {
  const Spine spine = build_spine(g);
  const SmithForm snf = smith_normal_form(spine.boundary_in_cycle_basis());
  HomologyGroup h;
  h.rank = static_cast<int>(spine.cotree.size() - snf.rank);
  for (const auto& d : snf.factors) {
    if (d > 1) h.torsion.push_back(d);
  }
  return h;
}

bool is_six_regular(const ColoredGraph& g) {
  require_connected(g, "six-regularity");
  const auto cycles = all_bicolored_cycles(g);
  return std::all_of(cycles.begin(), cycles.end(), [](const BicoloredCycle& c) { return c.length() == 6; });
}

ComplexityReport gem_complexity_report(const ColoredGraph& g) {
  ComplexityReport out;
  out.order = g.order();
  out.closed = boundary_profile(g).closed;
  if (out.closed) out.gem_complexity = (g.order() - 2) / 2;
  out.graph_complexity_bound = g.order();
  return out;
}

InvariantReport invariant_report(const ColoredGraph& g, std::optional<std::string> name,
                                 std::optional<std::string> code) {
  InvariantReport out;
  out.name = std::move(name);
  out.code = std::move(code);
  out.order = g.order();
  out.bipartite = is_bipartite(g);
  out.boundary = boundary_profile(g);
  out.h1 = first_homology(g);
  out.six_regular = is_six_regular(g);
  return out;
}

}  // namespace gemkit
