#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "gemkit/table1.hpp"
#include "gemkit/topology.hpp"

namespace gemkit {

// Exhaustive enumeration runs by default up to this order; the next even
// order needs allow_long_run.
inline constexpr int kExhaustiveOrderCap = 10;
inline constexpr int kLongRunOrderCap = 12;

struct CensusOptions {
  bool bipartite = true;   // only bipartite censuses are supported
  bool connected = true;   // only connected censuses are supported
  bool allow_long_run = false;
  unsigned threads = 0;    // 0: hardware concurrency
};

struct CensusEntry {
  std::string canonical;
  int order = 0;
  std::optional<InvariantReport> invariants;
};

// One entry per color-isomorphism class of connected bipartite gems of the
// given order, sorted by canonical code. Throws CapExceeded.
std::vector<CensusEntry> enumerate_gems(int order, const CensusOptions& options = {});

CensusEntry classify(CensusEntry entry);

// Connected bipartite gems whose bicolored cycles all have length 6, one per
// isomorphism class, classified. Empty unless order is a multiple of 6.
std::vector<CensusEntry> six_regular_gems(int order);

struct Table1RowResult {
  std::string name;
  std::string code;
  std::string canonical;
  std::optional<InvariantReport> report;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

struct Table1Report {
  std::vector<Table1RowResult> rows;
  std::size_t distinct_canonical = 0;

  bool passed() const;
};

Table1Report verify_table1(std::span<const Table1Row> rows = table1_rows());

// An invariant class: boundary surfaces (as a multiset) plus H1.
struct InvariantTarget {
  std::vector<SurfaceType> boundary;
  HomologyGroup h1;

  bool matches(const InvariantReport& report) const;
  std::string describe() const;
};

struct ProbeResult {
  std::optional<int> order;
  std::optional<CensusEntry> witness;
};

// Scans censuses of orders 2, 4, ..., max_order for the first entry in the
// target invariant class. Throws CapExceeded beyond the enumeration cap.
ProbeResult minimality_probe(const InvariantTarget& target, int max_order, const CensusOptions& options = {});

unsigned worker_count(unsigned requested);

}  // namespace gemkit
