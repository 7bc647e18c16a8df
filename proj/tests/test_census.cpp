#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "census_oracle.hpp"
#include "doctest.h"
#include "gemkit/canonical.hpp"
#include "gemkit/census.hpp"
#include "gemkit/errors.hpp"
#include "gemkit/report.hpp"
#include "test_support.hpp"

using namespace gemkit;
using namespace gemkit::testing;

namespace {

std::set<std::string> canonicals(const std::vector<CensusEntry>& entries) {
  std::set<std::string> out;
  for (const auto& e : entries) out.insert(e.canonical);
  return out;
}

SurfaceType torus() { return SurfaceType::from_euler(true, 0); }

}  // namespace

TEST_CASE("order 2") {
  const auto entries = enumerate_gems(2);
  REQUIRE(entries.size() == 1);
  CHECK(entries[0].canonical == "AAA");
  CHECK(entries[0].order == 2);
}

TEST_CASE("pruned generator matches brute force") {
  for (int order : {2, 4, 6, 8}) {
    CAPTURE(order);
    const auto entries = enumerate_gems(order);
    CHECK(canonicals(entries) == brute_force_census(order));
    CHECK(canonicals(entries).size() == entries.size());
    CHECK(std::is_sorted(entries.begin(), entries.end(),
                         [](const CensusEntry& a, const CensusEntry& b) { return a.canonical < b.canonical; }));
  }
}

TEST_CASE("census entries are canonical and pairwise non-isomorphic") {
  for (int order : {4, 6, 8}) {
    const auto entries = enumerate_gems(order);
    std::set<std::vector<int>> certificates;
    for (const auto& e : entries) {
      const ColoredGraph g = parse_code(e.canonical);
      CHECK(g.order() == order);
      CHECK(is_connected(g));
      CHECK(canonical_code(g) == e.canonical);
      certificates.insert(structure_certificate(g));
    }
    CHECK(certificates.size() == entries.size());
  }
}

TEST_CASE("census is deterministic across worker counts") {
  CensusOptions one;
  one.threads = 1;
  CensusOptions four;
  four.threads = 4;
  const auto a = enumerate_gems(8, one);
  const auto b = enumerate_gems(8, four);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].canonical == b[i].canonical);
  CHECK(worker_count(3) <= 3);
  CHECK(worker_count(3) >= 1);
}

TEST_CASE("classify") {
  std::mt19937 rng(5);
  for (const auto& e : enumerate_gems(8)) {
    const CensusEntry c = classify(e);
    REQUIRE(c.invariants.has_value());
    CHECK(c.invariants->code == e.canonical);
    const ColoredGraph scrambled = scramble(parse_code(e.canonical), rng);
    CHECK(first_homology(scrambled) == c.invariants->h1);
    CHECK(boundary_profile(scrambled).components.size() == c.invariants->boundary.components.size());
  }
}

TEST_CASE("closed gems of small order") {
  // Below order 8 every closed entry is simply connected in homology.
  for (int order : {2, 4, 6})
    for (const auto& e : enumerate_gems(order)) {
      const CensusEntry c = classify(e);
      if (c.invariants->boundary.closed) CHECK(c.invariants->h1 == HomologyGroup{});
    }
  int z2 = 0, z = 0;
  for (const auto& e : enumerate_gems(8)) {
    const CensusEntry c = classify(e);
    if (!c.invariants->boundary.closed) continue;
    z2 += c.invariants->h1 == HomologyGroup{0, {2}};
    z += c.invariants->h1 == HomologyGroup{1, {}};
  }
  CHECK(z2 >= 1);
  CHECK(z >= 1);
}

TEST_CASE("minimality_probe") {
  const ProbeResult sphere = minimality_probe({{}, {}}, 8);
  CHECK(sphere.order == 2);
  REQUIRE(sphere.witness.has_value());
  CHECK(sphere.witness->canonical == "AAA");

  const ProbeResult projective = minimality_probe({{}, {0, {2}}}, 8);
  CHECK(projective.order == 8);
  REQUIRE(projective.witness.has_value());
  CHECK(projective.witness->invariants->h1 == HomologyGroup{0, {2}});

  CHECK_FALSE(minimality_probe({{}, {0, {3}}}, 8).order.has_value());

  const InvariantTarget two_cusps{{torus(), torus()}, {2, {}}};
  CHECK(two_cusps.describe().find("Z^2") != std::string::npos);
  const ProbeResult cusped = minimality_probe(two_cusps, 8);
  MESSAGE("smallest order with two torus boundaries and H1 = Z^2 up to 8: "
          << (cusped.order ? std::to_string(*cusped.order) : std::string("none")));
}

TEST_CASE("census option errors") {
  CHECK_THROWS_WITH_AS(enumerate_gems(12), doctest::Contains("CapExceeded"), GemError);
  CHECK_THROWS_WITH_AS(enumerate_gems(14, {true, true, true, 1}), doctest::Contains("CapExceeded"), GemError);
  CHECK_THROWS_AS(enumerate_gems(7), GemError);
  CHECK_THROWS_AS(enumerate_gems(0), GemError);
  CHECK_THROWS_WITH_AS(enumerate_gems(4, {false, true, false, 0}), doctest::Contains("Unsupported"), GemError);
  CHECK_THROWS_WITH_AS(enumerate_gems(4, {true, false, false, 0}), doctest::Contains("Unsupported"), GemError);
  CHECK_THROWS_AS(minimality_probe({{}, {}}, 12), GemError);
}

TEST_CASE("six_regular_gems") {
  CHECK(six_regular_gems(8).empty());
  std::set<std::string> filtered;
  for (const auto& e : enumerate_gems(6))
    if (is_six_regular(parse_code(e.canonical))) filtered.insert(e.canonical);
  CHECK(canonicals(six_regular_gems(6)) == filtered);
  CHECK_THROWS_AS(six_regular_gems(24), GemError);
  const auto found = six_regular_gems(12);
  REQUIRE_FALSE(found.empty());
  for (const auto& e : found) {
    REQUIRE(e.invariants.has_value());
    CHECK(e.invariants->six_regular);
    for (const auto& cycle : all_bicolored_cycles(parse_code(e.canonical))) CHECK(cycle.length() == 6);
  }
  const CensusEntry gamma2 = classify({canonical_code(parse_code(kGamma2)), 12, std::nullopt});
  for (const auto& s : gamma2.invariants->boundary.components) CHECK(s.is_torus());
}

TEST_CASE("verify_table1") {
  const Table1Report report = verify_table1();
  CHECK(report.passed());
  CHECK(report.rows.size() == 34);
  CHECK(report.distinct_canonical == 34);

  std::vector<Table1Row> broken(table1_rows().begin(), table1_rows().begin() + 2);
  broken[1].boundary_components += 1;
  const Table1Report bad = verify_table1(broken);
  CHECK_FALSE(bad.passed());
  CHECK(bad.rows[0].passed());
  CHECK_FALSE(bad.rows[1].passed());
}

TEST_CASE("census file") {
  const auto path = std::filesystem::temp_directory_path() / "gemkit_census_test.tsv";
  std::filesystem::remove(path);
  const auto entries = enumerate_gems(4);
  std::vector<CensusEntry> classified;
  for (const auto& e : entries) classified.push_back(classify(e));
  append_census_file(path.string(), 4, {}, 0, classified);
  append_census_file(path.string(), 4, {}, 0, classified);
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  CHECK(text.rfind(census_header(4, {}, 0), 0) == 0);
  CHECK(text.find("#gemkit-census", 1) == std::string::npos);
  std::size_t lines = std::count(text.begin(), text.end(), '\n');
  CHECK(lines == 3 + 2 * classified.size());
  CHECK(census_line(classified[0]).rfind(classified[0].canonical + "\t{", 0) == 0);
  CHECK_THROWS(append_census_file(path.string(), 6, {}, 0, classified));
  std::filesystem::remove(path);
}
