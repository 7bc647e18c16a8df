#include "gemkit/census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "gemkit/canonical.hpp"
#include "gemkit/code.hpp"
#include "gemkit/errors.hpp"

namespace gemkit {

namespace {

using Perm = std::vector<int>;
using CycleType = std::vector<int>;  // ascending cycle lengths

CycleType cycle_type(const Perm& perm) {
  const int n = static_cast<int>(perm.size());
  std::vector<char> seen(n, 0);
  CycleType out;
  for (int i = 0; i < n; ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = perm[j]) {
      seen[j] = 1;
      ++len;
    }
    out.push_back(len);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// a^-1 * b
Perm left_divide(const Perm& a, const Perm& b) {
  Perm inv_a(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) inv_a[a[i]] = static_cast<int>(i);
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = inv_a[b[i]];
  return out;
}

void partitions(int remaining, int max_part, CycleType& prefix, std::vector<CycleType>& out) {
  if (remaining == 0) {
    out.push_back(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

// Product of consecutive cycles with the given lengths.
Perm representative(const CycleType& lengths) {
  Perm out;
  int base = 0;
  for (int len : lengths) {
    for (int k = 0; k < len; ++k) out.push_back(base + (k + 1) % len);
    base += len;
  }
  return out;
}

std::vector<Perm> all_perms(int p) {
  std::vector<Perm> out;
  Perm perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

CodeEntries blocks_to_entries(const Perm& b1, const Perm& b2, const Perm& b3) {
  CodeEntries entries;
  entries.reserve(3 * b1.size());
  for (const Perm* b : {&b1, &b2, &b3})
    for (int x : *b) entries.push_back(x + 1);
  return entries;
}

void validate_census_request(int order, const CensusOptions& options) {
  if (!options.bipartite || !options.connected) {
    throw GemError(ErrorKind::Unsupported, "only connected bipartite censuses are supported");
  }
  if (order < 2 || order % 2 != 0) {
    throw GemError(ErrorKind::InvalidGraph, "census order must be a positive even integer");
  }
  const int cap = options.allow_long_run ? kLongRunOrderCap : kExhaustiveOrderCap;
  if (order > cap) {
    throw GemError(ErrorKind::CapExceeded, "order " + std::to_string(order) + " exceeds the enumeration cap " +
                                               std::to_string(cap));
  }
}

std::vector<CensusEntry> to_entries(const std::set<CodeEntries>& found, int order) {
  std::vector<CensusEntry> out;
  out.reserve(found.size());
  for (const auto& entries : found) out.push_back({render_code(entries), order, std::nullopt});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.canonical < b.canonical; });
  return out;
}

}  // namespace

unsigned worker_count(unsigned requested) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("GEMKIT_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap > 0) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  return std::max(1u, n);
}

std::vector<CensusEntry> enumerate_gems(int order, const CensusOptions& options) {
  validate_census_request(order, options);
  const int p = order / 2;

  // Every class has a code whose {0,1} cycle type is minimal among the six
  // color pairs (recolor) and whose first block is the fixed representative
  // of that type (relabel pairs). Blocks 2 and 3 then range over all
  // permutations that keep the first type minimal.
  std::vector<CycleType> types;
  CycleType prefix;
  partitions(p, p, prefix, types);
  const std::vector<Perm> perms = all_perms(p);

  struct Unit {
    Perm first;
    CycleType first_type;
    const Perm* second;
  };
  std::vector<Unit> units;
  for (auto& lengths : types) {
    std::sort(lengths.begin(), lengths.end());
    const Perm first = representative(lengths);
    for (const auto& second : perms) {
      if (cycle_type(second) < lengths || cycle_type(left_divide(second, first)) < lengths) continue;
      units.push_back({first, lengths, &second});
    }
  }

  std::set<CodeEntries> merged;
  std::mutex merge_mutex;
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    std::set<CodeEntries> local;
    for (std::size_t u = next++; u < units.size(); u = next++) {
      const Unit& unit = units[u];
      for (const auto& third : perms) {
        if (cycle_type(third) < unit.first_type || cycle_type(left_divide(third, unit.first)) < unit.first_type ||
            cycle_type(left_divide(third, *unit.second)) < unit.first_type) {
          continue;
        }
        const ColoredGraph g = graph_from_entries(blocks_to_entries(unit.first, *unit.second, third));
        if (!is_connected(g)) continue;
        local.insert(canonical_entries(g));
      }
    }
    std::lock_guard lock(merge_mutex);
    merged.merge(local);
  };

  const unsigned threads = std::min<unsigned>(worker_count(options.threads), std::max<std::size_t>(1, units.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return to_entries(merged, order);
}

CensusEntry classify(CensusEntry entry) {
  const ColoredGraph g = parse_code(entry.canonical);
  entry.order = g.order();
  entry.invariants = invariant_report(g, std::nullopt, entry.canonical);
  return entry;
}

std::vector<CensusEntry> six_regular_gems(int order) {
  if (order < 2 || order % 6 != 0) return {};
  if (order > 18) throw GemError(ErrorKind::CapExceeded, "six-regular search is capped at order 18");
  const int p = order / 2;
  const CycleType triangles(p / 3, 3);
  const Perm first = representative(triangles);
  std::vector<Perm> candidates;
  for (const auto& perm : all_perms(p))
    if (cycle_type(perm) == triangles) candidates.push_back(perm);

  std::set<CodeEntries> found;
  for (const auto& second : candidates) {
    if (cycle_type(left_divide(second, first)) != triangles) continue;
    for (const auto& third : candidates) {
      if (cycle_type(left_divide(third, first)) != triangles || cycle_type(left_divide(third, second)) != triangles) {
        continue;
      }
      const ColoredGraph g = graph_from_entries(blocks_to_entries(first, second, third));
      if (is_connected(g)) found.insert(canonical_entries(g));
    }
  }
  auto out = to_entries(found, order);
  for (auto& e : out) e = classify(std::move(e));
  return out;
}

bool Table1Report::passed() const {
  return distinct_canonical == rows.size() &&
         std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.passed(); });
}

Table1Report verify_table1(std::span<const Table1Row> rows) {
  Table1Report report;
  std::set<std::string> canonical;
  for (const auto& row : rows) {
    Table1RowResult result;
    result.name = row.name;
    result.code = row.code;
    auto fail = [&](std::string msg) { result.failures.push_back(std::move(msg)); };
    try {
      const ColoredGraph g = parse_code(row.code);
      if (g.order() != 14) fail("order " + std::to_string(g.order()) + " != 14");
      if (!is_bipartite(g)) fail("not bipartite");
      if (!is_connected(g)) {
        fail("not connected");
      } else {
        result.report = invariant_report(g, std::string(row.name), std::string(row.code));
        result.canonical = canonical_code(g);
        canonical.insert(result.canonical);
        const auto& boundary = result.report->boundary.components;
        if (static_cast<int>(boundary.size()) != row.boundary_components) {
          fail("boundary has " + std::to_string(boundary.size()) + " components, expected " +
               std::to_string(row.boundary_components));
        }
        if (!std::all_of(boundary.begin(), boundary.end(), [](const SurfaceType& s) { return s.is_torus(); })) {
          fail("a boundary component is not a torus");
        }
        const HomologyGroup& h1 = result.report->h1;
        if (row.link_complement() && (h1.rank != row.boundary_components || !h1.torsion.empty())) {
          fail("H1 = " + h1.describe() + ", expected free of rank " + std::to_string(row.boundary_components));
        }
      }
    } catch (const GemError& e) {
      fail(e.what());
    }
    report.rows.push_back(std::move(result));
  }
  report.distinct_canonical = canonical.size();
  return report;
}

bool InvariantTarget::matches(const InvariantReport& report) const {
  if (report.h1 != h1 || report.boundary.components.size() != boundary.size()) return false;
  auto mine = boundary;
  auto theirs = report.boundary.components;
  std::sort(mine.begin(), mine.end());
  std::sort(theirs.begin(), theirs.end());
  return mine == theirs;
}

std::string InvariantTarget::describe() const {
  std::ostringstream out;
  if (boundary.empty()) {
    out << "closed";
  } else {
    out << boundary.size() << " boundary components (";
    for (std::size_t k = 0; k < boundary.size(); ++k) out << (k ? ", " : "") << boundary[k].describe();
    out << ")";
  }
  out << ", H1 = " << h1.describe();
  return out.str();
}

ProbeResult minimality_probe(const InvariantTarget& target, int max_order, const CensusOptions& options) {
  validate_census_request(max_order < 2 ? 2 : max_order + max_order % 2, options);
  for (int order = 2; order <= max_order; order += 2) {
    for (auto& entry : enumerate_gems(order, options)) {
      entry = classify(std::move(entry));
      if (target.matches(*entry.invariants)) return {order, std::move(entry)};
    }
  }
  return {};
}

}  // namespace gemkit
