#include "gemkit/coverings.hpp"

#include <numeric>
#include <sstream>

#include "gemkit/errors.hpp"
#include "gemkit/smith.hpp"
#include "gemkit/spine.hpp"

namespace gemkit {

namespace {

int mod(long long x, int n) {
  const long long r = x % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

int mod(const BigInt& x, int n) {
  BigInt r = x % n;
  if (r < 0) r += n;
  return r.convert_to<int>();
}

void require_degree(int degree) {
  if (degree < 1) throw GemError(ErrorKind::InvalidVoltage, "covering degree must be positive");
}

}  // namespace

void VoltageAssignment::validate() const {
  require_degree(degree);
  if (static_cast<int>(volt.size()) != base.order()) {
    throw GemError(ErrorKind::InvalidVoltage, "voltage table size differs from base order");
  }
  for (int v = 0; v < base.order(); ++v) {
    for (int c = 0; c < kColors; ++c) {
      const int x = volt[v][c];
      if (x < 0 || x >= degree) {
        throw GemError(ErrorKind::InvalidVoltage, "voltage not reduced mod " + std::to_string(degree));
      }
      if (mod(x + volt[base.neighbor(v, c)][c], degree) != 0) {
        std::ostringstream msg;
        msg << "voltage on edge (" << v << ", color " << c << ") is not antisymmetric";
        throw GemError(ErrorKind::InvalidVoltage, msg.str());
      }
    }
  }
}

VoltageAssignment trivial_voltage(const ColoredGraph& base, int degree) {
  require_degree(degree);
  return {base, degree, std::vector<std::array<int, kColors>>(base.order(), {0, 0, 0, 0})};
}

VoltageAssignment voltage_from_cotree(const ColoredGraph& base, int degree, const std::vector<int>& values) {
  const Spine spine = build_spine(base);
  if (values.size() != spine.cotree.size()) {
    throw GemError(ErrorKind::InvalidVoltage, "expected " + std::to_string(spine.cotree.size()) + " cotree values");
  }
  VoltageAssignment va = trivial_voltage(base, degree);
  for (std::size_t k = 0; k < values.size(); ++k) {
    const auto& e = spine.edges[spine.cotree[k]];
    va.volt[e.tail][e.color] = mod(values[k], degree);
    va.volt[e.head][e.color] = mod(-static_cast<long long>(values[k]), degree);
  }
  return va;
}

std::vector<VoltageTriple> cotree_triples(const VoltageAssignment& va) {
  const Spine spine = build_spine(va.base);
  std::vector<VoltageTriple> out;
  out.reserve(spine.cotree.size());
  for (int id : spine.cotree) {
    const auto& e = spine.edges[id];
    out.push_back({e.tail, e.color, va.volt[e.tail][e.color]});
  }
  return out;
}

CoveringMap derived_graph(const VoltageAssignment& va) {
  va.validate();
  const int base_order = va.base.order();
  const int n = va.degree;
  const int total_order = base_order * n;
  std::array<Involution, kColors> inv;
  for (int c = 0; c < kColors; ++c) {
    inv[c].resize(total_order);
    for (int sheet = 0; sheet < n; ++sheet) {
      for (int v = 0; v < base_order; ++v) {
        const int target_sheet = (sheet + va.volt[v][c]) % n;
        inv[c][sheet * base_order + v] = target_sheet * base_order + va.base.neighbor(v, c);
      }
    }
  }
  std::vector<int> projection(total_order);
  for (int x = 0; x < total_order; ++x) projection[x] = x % base_order;
  return {ColoredGraph(std::move(inv)), va.base, std::move(projection), n};
}

int verify_covering(const CoveringMap& cm) {
  const int total_order = cm.total.order();
  const int base_order = cm.base.order();
  if (static_cast<int>(cm.projection.size()) != total_order) {
    throw GemError(ErrorKind::NonUniformFiber, "projection size differs from total order");
  }
  for (int x = 0; x < total_order; ++x) {
    if (cm.projection[x] < 0 || cm.projection[x] >= base_order) {
      throw GemError(ErrorKind::NonUniformFiber, "projection leaves the base vertex set");
    }
  }
  for (int x = 0; x < total_order; ++x) {
    for (int c = 0; c < kColors; ++c) {
      const int y = cm.total.neighbor(x, c);
      if (cm.projection[y] != cm.base.neighbor(cm.projection[x], c)) {
        std::ostringstream msg;
        msg << "vertices " << x << " and " << y << " are " << c << "-adjacent but their images "
            << cm.projection[x] << " and " << cm.projection[y] << " are not";
        throw GemError(ErrorKind::NotAdjacencyPreserving, msg.str());
      }
    }
  }
  std::vector<int> fiber(base_order, 0);
  for (int v : cm.projection) ++fiber[v];
  for (int v = 0; v < base_order; ++v) {
    if (fiber[v] * base_order != total_order) {
      throw GemError(ErrorKind::NonUniformFiber,
                     "fiber over vertex " + std::to_string(v) + " has " + std::to_string(fiber[v]) + " elements");
    }
  }
  return total_order / base_order;
}

bool is_admissible(const CoveringMap& cm) {
  verify_covering(cm);
  for (int a = 0; a < kColors; ++a) {
    for (int b = a + 1; b < kColors; ++b) {
      std::vector<int> base_length(cm.base.order());
      for (const auto& cycle : bicolored_cycles(cm.base, a, b))
        for (int v : cycle.vertices) base_length[v] = cycle.length();
      for (const auto& cycle : bicolored_cycles(cm.total, a, b)) {
        if (cycle.length() != base_length[cm.projection[cycle.vertices.front()]]) return false;
      }
    }
  }
  return true;
}

int holonomy(const VoltageAssignment& va, const BicoloredCycle& cycle) {
  long long sum = 0;
  for (int k = 0; k < cycle.length(); ++k) {
    const int c = k % 2 == 0 ? cycle.low_color : cycle.high_color;
    sum += va.volt[cycle.vertices[k]][c];
  }
  return mod(sum, va.degree);
}

std::vector<VoltageAssignment> find_admissible_cyclic_coverings(const ColoredGraph& base, int degree,
                                                                std::size_t limit) {
  require_degree(degree);
  const Spine spine = build_spine(base);
  const std::size_t unknowns = spine.cotree.size();
  std::vector<VoltageAssignment> out;
  if (limit == 0) return out;

  // Holonomy equations: one row per bicolored cycle, one column per cotree
  // edge. With left * A * right = D, the solutions of A x = 0 mod n are
  // x = right * y where d_i y_i = 0 mod n.
  const SmithDecomposition snf = smith_decomposition(spine.boundary_in_cycle_basis().transposed());
  std::vector<int> step(unknowns, 1), range(unknowns, degree);
  for (std::size_t i = 0; i < snf.form.rank; ++i) {
    const int g = std::gcd(mod(snf.form.factors[i], degree), degree);
    range[i] = g;
    step[i] = degree / g;
  }
  std::vector<std::vector<int>> right(unknowns, std::vector<int>(unknowns));
  for (std::size_t i = 0; i < unknowns; ++i)
    for (std::size_t j = 0; j < unknowns; ++j) right[i][j] = mod(snf.right(i, j), degree);

  std::vector<int> params(unknowns, 0);
  std::vector<int> values(unknowns);
  const auto advance = [&] {
    for (std::size_t pos = unknowns; pos-- > 0;) {
      if (++params[pos] < range[pos]) return true;
      params[pos] = 0;
    }
    return false;
  };
  do {
    int generated = degree;
    for (std::size_t i = 0; i < unknowns; ++i) {
      long long x = 0;
      for (std::size_t j = 0; j < unknowns; ++j) x += static_cast<long long>(right[i][j]) * params[j] * step[j];
      values[i] = mod(x, degree);
      generated = std::gcd(generated, values[i]);
    }
    // With tree voltages fixed to 0, the derived graph is connected exactly
    // when the cotree voltages generate Z_n.
    if (generated == 1) {
      out.push_back(voltage_from_cotree(base, degree, values));
      if (out.size() >= limit) break;
    }
  } while (advance());
  return out;
}

ComplexityBounds complexity_bounds_report(const ColoredGraph& base, int tetrahedra, int degree) {
  const auto found = find_admissible_cyclic_coverings(base, degree, 1);
  if (found.empty()) {
    throw GemError(ErrorKind::NoSolution, "no admissible connected Z_" + std::to_string(degree) + " covering");
  }
  CoveringMap witness = derived_graph(found.front());
  verify_covering(witness);
  if (!is_admissible(witness)) throw GemError(ErrorKind::NoSolution, "solver returned an inadmissible covering");
  const long long upper = witness.total.order();
  return {static_cast<long long>(degree) * tetrahedra, upper, std::move(witness)};
}

}  // namespace gemkit
