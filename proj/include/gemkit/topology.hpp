#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "gemkit/colored_graph.hpp"
#include "gemkit/smith.hpp"

namespace gemkit {

// Closed surface: orientable genus g has euler 2 - 2g; non-orientable with
// g crosscaps has euler 2 - g.
struct SurfaceType {
  bool orientable = true;
  int euler = 2;
  int genus = 0;

  static SurfaceType from_euler(bool orientable, int euler);

  bool is_sphere() const noexcept { return orientable && euler == 2; }
  bool is_torus() const noexcept { return orientable && euler == 0; }
  std::string describe() const;

  friend auto operator<=>(const SurfaceType&, const SurfaceType&) = default;
};

struct BoundaryProfile {
  std::vector<SurfaceType> components;  // one per singular vertex
  bool closed = true;
};

struct HomologyGroup {
  int rank = 0;
  std::vector<BigInt> torsion;  // invariant factors, each >= 2, dividing the next

  std::string describe() const;  // e.g. "Z^2 + Z/2"

  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

// The surface a 3-colored residue represents as a 2-dimensional gem.
SurfaceType link_surface(const Residue& r);

BoundaryProfile boundary_profile(const ColoredGraph& g);

// H1 of the represented manifold via the spine complex. Throws NotConnected.
HomologyGroup first_homology(const ColoredGraph& g);

// Every bicolored cycle has length exactly 6. Throws NotConnected.
bool is_six_regular(const ColoredGraph& g);

struct ComplexityReport {
  int order = 0;
  bool closed = true;
  std::optional<int> gem_complexity;  // (order - 2) / 2 for closed graphs
  int graph_complexity_bound = 0;     // order; an upper bound on c_g
};

ComplexityReport gem_complexity_report(const ColoredGraph& g);

struct InvariantReport {
  std::optional<std::string> name;
  std::optional<std::string> code;
  int order = 0;
  bool bipartite = true;
  BoundaryProfile boundary;
  HomologyGroup h1;
  bool six_regular = false;

  friend bool operator==(const InvariantReport& a, const InvariantReport& b) {
    return a.name == b.name && a.code == b.code && a.order == b.order && a.bipartite == b.bipartite &&
           a.boundary.closed == b.boundary.closed && a.boundary.components == b.boundary.components &&
           a.h1 == b.h1 && a.six_regular == b.six_regular;
  }
};

// Throws NotConnected. The code is reported as given; pass nullopt to omit it.
InvariantReport invariant_report(const ColoredGraph& g, std::optional<std::string> name = std::nullopt,
                                 std::optional<std::string> code = std::nullopt);

}  // namespace gemkit
