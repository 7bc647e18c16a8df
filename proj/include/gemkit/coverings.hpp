#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "gemkit/colored_graph.hpp"

namespace gemkit {

// Z_n voltages on the edges of a base graph. volt[v][c] is the voltage read
// when leaving v along its c-edge, so volt[inv_c(v)][c] == -volt[v][c] mod n.
struct VoltageAssignment {
  ColoredGraph base;
  int degree = 1;
  std::vector<std::array<int, kColors>> volt;

  // Throws InvalidVoltage on a size mismatch, out-of-range value or
  // antisymmetry violation.
  void validate() const;
};

// Voltage 0 everywhere.
VoltageAssignment trivial_voltage(const ColoredGraph& base, int degree);

// Places value[k] on the k-th non-tree edge of the base spine (oriented as
// the spine orients it) and 0 on tree edges.
VoltageAssignment voltage_from_cotree(const ColoredGraph& base, int degree, const std::vector<int>& values);

struct VoltageTriple {
  int vertex = 0;  // tail of the edge in the spine orientation
  int color = 0;
  int value = 0;
};

// Serialization: one triple per non-tree edge of the base spine.
std::vector<VoltageTriple> cotree_triples(const VoltageAssignment& va);

struct CoveringMap {
  ColoredGraph total;
  ColoredGraph base;
  std::vector<int> projection;  // vertex of total -> vertex of base
  int degree = 1;
};

// Total graph on V(base) x Z_n, vertex (v, i) stored at i * |V(base)| + v.
CoveringMap derived_graph(const VoltageAssignment& va);

// Returns the degree. Throws NotAdjacencyPreserving or NonUniformFiber.
int verify_covering(const CoveringMap& cm);

// Every bicolored cycle of the total graph has the length of its image.
bool is_admissible(const CoveringMap& cm);

// Sum of voltages along one traversal of the cycle, in [0, n).
int holonomy(const VoltageAssignment& va, const BicoloredCycle& cycle);

// Z_n voltages with zero holonomy on every bicolored cycle of base and a
// connected derived graph, in lexicographic order of the free parameters of
// the solution group. Throws NotConnected.
std::vector<VoltageAssignment> find_admissible_cyclic_coverings(const ColoredGraph& base, int degree,
                                                                std::size_t limit);

struct ComplexityBounds {
  long long lower = 0;  // degree * tetrahedra
  long long upper = 0;  // order of the witness graph
  CoveringMap witness;
};

// Throws NoSolution when base has no admissible connected Z_n covering.
ComplexityBounds complexity_bounds_report(const ColoredGraph& base, int tetrahedra, int degree);

}  // namespace gemkit
