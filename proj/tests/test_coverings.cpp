#include <numeric>
#include <random>

#include "doctest.h"
#include "gemkit/code.hpp"
#include "gemkit/coverings.hpp"
#include "gemkit/errors.hpp"
#include "gemkit/topology.hpp"
#include "test_support.hpp"

using namespace gemkit;
using namespace gemkit::testing;

namespace {

VoltageAssignment random_voltage(const ColoredGraph& base, int n, std::mt19937& rng) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  VoltageAssignment va{base, n, std::vector<std::array<int, kColors>>(base.order())};
  for (int v = 0; v < base.order(); ++v)
    for (int c = 0; c < kColors; ++c) {
      const int u = base.neighbor(v, c);
      if (v < u) {
        va.volt[v][c] = pick(rng);
        va.volt[u][c] = (n - va.volt[v][c]) % n;
      }
    }
  return va;
}

int cycles_between(const ColoredGraph& g, int a, int b) { return static_cast<int>(bicolored_cycles(g, a, b).size()); }

const std::vector<const char*> kBases{kGamma1, kGamma2, kGamma3};

}  // namespace

TEST_CASE("trivial coverings") {
  const ColoredGraph g = parse_code(kGamma1);
  const CoveringMap identity = derived_graph(trivial_voltage(g, 1));
  CHECK(identity.total == g);
  CHECK(verify_covering(identity) == 1);
  CHECK(is_admissible(identity));

  const auto one = find_admissible_cyclic_coverings(g, 1, 10);
  REQUIRE(one.size() == 1);
  CHECK(derived_graph(one[0]).total.order() == 12);

  const CoveringMap doubled = derived_graph(trivial_voltage(g, 2));
  CHECK(verify_covering(doubled) == 2);
  CHECK_FALSE(is_connected(doubled.total));
  CHECK(is_admissible(doubled));
}

TEST_CASE("verify_covering errors") {
  const ColoredGraph g = parse_code(kGamma1);
  CoveringMap collapsed = derived_graph(trivial_voltage(g, 1));
  std::fill(collapsed.projection.begin(), collapsed.projection.end(), 0);
  CHECK_THROWS_WITH_AS(verify_covering(collapsed), doctest::Contains("NotAdjacencyPreserving"), GemError);

  // Two dipoles over the first, one over the second.
  const ColoredGraph two = disjoint_union(dipole(), dipole());
  CoveringMap uneven{disjoint_union(two, dipole()), two, {0, 1, 0, 1, 2, 3}, 1};
  try {
    verify_covering(uneven);
    FAIL("expected NonUniformFiber");
  } catch (const GemError& e) {
    CHECK(e.kind() == ErrorKind::NonUniformFiber);
  }
}

TEST_CASE("voltage validation") {
  const ColoredGraph g = parse_code(kGamma1);
  VoltageAssignment va = trivial_voltage(g, 3);
  CHECK_NOTHROW(va.validate());
  va.volt[0][0] = 1;  // partner edge still carries 0
  CHECK_THROWS_AS(va.validate(), GemError);
  va.volt[0][0] = 3;
  CHECK_THROWS_AS(va.validate(), GemError);
  va = trivial_voltage(g, 3);
  va.volt.pop_back();
  CHECK_THROWS_AS(va.validate(), GemError);
  CHECK_THROWS_AS(find_admissible_cyclic_coverings(g, 0, 1), GemError);
}

TEST_CASE("holonomy") {
  // Dipole: every bicolored cycle has length 2.
  const ColoredGraph d = dipole();
  VoltageAssignment va = trivial_voltage(d, 5);
  va.volt[0][0] = 2;
  va.volt[1][0] = 3;
  const BicoloredCycle forward{0, 1, {0, 1}};
  const BicoloredCycle backward{1, 0, {0, 1}};
  CHECK(holonomy(va, forward) == 2);
  CHECK(holonomy(va, backward) == 3);
  CHECK_FALSE(is_admissible(derived_graph(va)));
}

TEST_CASE("derived cycle structure follows holonomy") {
  std::mt19937 rng(2024);
  for (const char* code : kBases) {
    const ColoredGraph base = parse_code(code);
    for (int n : {2, 3, 4, 6}) {
      for (int trial = 0; trial < 10; ++trial) {
        const VoltageAssignment va = random_voltage(base, n, rng);
        const CoveringMap cm = derived_graph(va);
        CHECK(verify_covering(cm) == n);
        bool all_zero = true;
        for (int a = 0; a < kColors; ++a)
          for (int b = a + 1; b < kColors; ++b) {
            int expected_count = 0;
            std::vector<int> expected_length(base.order());
            for (const auto& cycle : bicolored_cycles(base, a, b)) {
              const int h = holonomy(va, cycle);
              all_zero = all_zero && h == 0;
              const int lifts = std::gcd(h, n);
              expected_count += lifts;
              for (int v : cycle.vertices) expected_length[v] = cycle.length() * (n / lifts);
            }
            CHECK(cycles_between(cm.total, a, b) == expected_count);
            for (const auto& lifted : bicolored_cycles(cm.total, a, b))
              CHECK(lifted.length() == expected_length[cm.projection[lifted.vertices.front()]]);
          }
        CHECK(is_admissible(cm) == all_zero);
      }
    }
  }
}

TEST_CASE("connectivity from cotree voltages") {
  std::mt19937 rng(77);
  for (const char* code : kBases) {
    const ColoredGraph base = parse_code(code);
    const std::size_t cotree = cotree_triples(trivial_voltage(base, 2)).size();
    for (int n : {2, 3, 4, 6}) {
      std::uniform_int_distribution<int> pick(0, n - 1);
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<int> values(cotree);
        for (auto& x : values) x = pick(rng) * (trial % 2 == 0 ? 1 : 2) % n;
        int g = n;
        for (int x : values) g = std::gcd(g, x);
        const VoltageAssignment va = voltage_from_cotree(base, n, values);
        CHECK_NOTHROW(va.validate());
        CHECK(is_connected(derived_graph(va).total) == (g == 1));
        const auto triples = cotree_triples(va);
        REQUIRE(triples.size() == cotree);
        for (std::size_t k = 0; k < cotree; ++k) CHECK(triples[k].value == values[k]);
      }
    }
  }
}

TEST_CASE("admissible covering solver") {
  for (const char* code : kBases) {
    const ColoredGraph base = parse_code(code);
    const BoundaryProfile base_boundary = boundary_profile(base);
    for (int n = 2; n <= 5; ++n) {
      const auto found = find_admissible_cyclic_coverings(base, n, 3);
      REQUIRE_FALSE(found.empty());
      for (const auto& va : found) {
        CHECK_NOTHROW(va.validate());
        for (const auto& cycle : all_bicolored_cycles(base)) CHECK(holonomy(va, cycle) == 0);
        const CoveringMap cm = derived_graph(va);
        CHECK(cm.total.order() == 12 * n);
        CHECK(is_connected(cm.total));
        CHECK(verify_covering(cm) == n);
        CHECK(is_admissible(cm));
        for (int a = 0; a < kColors; ++a)
          for (int b = a + 1; b < kColors; ++b) CHECK(cycles_between(cm.total, a, b) == n * cycles_between(base, a, b));
        const BoundaryProfile bp = boundary_profile(cm.total);
        for (const auto& s : bp.components) CHECK(s.is_torus());
        CHECK(bp.components.size() >= base_boundary.components.size());
        CHECK(bp.components.size() <= n * base_boundary.components.size());
      }
    }
  }
}

TEST_CASE("solver output is deterministic and respects the limit") {
  const ColoredGraph base = parse_code(kGamma2);
  const auto a = find_admissible_cyclic_coverings(base, 3, 4);
  const auto b = find_admissible_cyclic_coverings(base, 3, 4);
  REQUIRE(a.size() == b.size());
  CHECK(a.size() <= 4);
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].volt == b[i].volt);
  CHECK_THROWS_AS(find_admissible_cyclic_coverings(disjoint_union(dipole(), dipole()), 2, 1), GemError);
}

TEST_CASE("complexity bounds") {
  const ColoredGraph base = parse_code(kGamma1);
  const ComplexityBounds one = complexity_bounds_report(base, 10, 1);
  CHECK(one.lower == 10);
  CHECK(one.upper == 12);
  const ComplexityBounds three = complexity_bounds_report(base, 10, 3);
  CHECK(three.lower == 30);
  CHECK(three.upper == 36);
  const ComplexityBounds five = complexity_bounds_report(base, 12, 5);
  CHECK(five.lower == 60);
  CHECK(five.upper == 60);
  CHECK(verify_covering(five.witness) == 5);

  // Closed base with H1 = Z/2: no connected Z_3 cover exists.
  CHECK_THROWS_AS(complexity_bounds_report(parse_code("BADCCDABDCBA"), 1, 3), GemError);
}
