#include "cli.hpp"

#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "gemkit/canonical.hpp"
#include "gemkit/census.hpp"
#include "gemkit/code.hpp"
#include "gemkit/code_file.hpp"
#include "gemkit/coverings.hpp"
#include "gemkit/errors.hpp"
#include "gemkit/report.hpp"

namespace gemkit::cli {

namespace {

struct Outcome {
  bool ok = true;
  std::string data;        // written to the output stream, newline appended
  std::string diagnostic;  // written to the error stream when !ok
};

// Runs fn over records on a small pool; results come back in input order.
std::vector<Outcome> map_records(const std::vector<CodeRecord>& records,
                                 const std::function<Outcome(const CodeRecord&)>& fn) {
  std::vector<Outcome> results(records.size());
  const unsigned threads = std::min<unsigned>(worker_count(0), std::max<std::size_t>(1, records.size()));
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t k = next++; k < records.size(); k = next++) results[k] = fn(records[k]);
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

std::optional<std::vector<CodeRecord>> load_records(const std::string& path, std::istream& in, std::ostream& err) {
  if (path == "-") return read_code_records(in);
  std::ifstream file(path);
  if (!file) {
    err << "error: cannot open " << path << '\n';
    return std::nullopt;
  }
  return read_code_records(file);
}

std::string where(const CodeRecord& r) {
  return "line " + std::to_string(r.line) + (r.name ? " (" + *r.name + ")" : std::string());
}

int emit(const std::vector<Outcome>& results, std::ostream& out, std::ostream& err, int failure_code) {
  int code = kExitOk;
  for (const auto& r : results) {
    if (!r.data.empty()) out << r.data << '\n';
    if (!r.ok) {
      err << r.diagnostic << '\n';
      code = failure_code;
    }
  }
  return code;
}

int cmd_validate(const std::vector<CodeRecord>& records, std::ostream& out, std::ostream& err) {
  const auto results = map_records(records, [](const CodeRecord& r) {
    const std::string label = std::to_string(r.line) + '\t' + (r.name ? *r.name : r.code);
    try {
      const ColoredGraph g = parse_code(r.code);
      return Outcome{true, label + "\tOK\torder=" + std::to_string(g.order()) +
                               (is_connected(g) ? "" : "\tdisconnected"),
                     {}};
    } catch (const GemError& e) {
      return Outcome{false, label + "\tERROR\t" + e.what(), where(r) + ": " + e.what()};
    }
  });
  return emit(results, out, err, kExitFailure);
}

int cmd_invariants(const std::vector<CodeRecord>& records, std::ostream& out, std::ostream& err) {
  const auto results = map_records(records, [](const CodeRecord& r) {
    try {
      const ColoredGraph g = parse_code(r.code);
      return Outcome{true, to_json(invariant_report(g, r.name, r.code)).dump(), {}};
    } catch (const GemError& e) {
      return Outcome{false, {}, where(r) + ": " + e.what()};
    }
  });
  return emit(results, out, err, kExitUsage);
}

int cmd_canon(const std::vector<CodeRecord>& records, std::ostream& out, std::ostream& err) {
  const auto results = map_records(records, [](const CodeRecord& r) {
    try {
      const std::string canon = canonical_code(parse_code(r.code));
      return Outcome{true, r.name ? *r.name + '\t' + canon : canon, {}};
    } catch (const GemError& e) {
      return Outcome{false, {}, where(r) + ": " + e.what()};
    }
  });
  return emit(results, out, err, kExitUsage);
}

int cmd_cover(const std::string& code, int degree, std::size_t limit, std::ostream& out) {
  const ColoredGraph base = parse_code(code);
  const auto solutions = find_admissible_cyclic_coverings(base, degree, limit);
  out << cover_report(code, degree, solutions).dump() << '\n';
  return kExitOk;
}

int cmd_census(int order, std::size_t max_results, const std::string& out_path, bool long_run, bool six_regular,
               std::ostream& out) {
  CensusOptions options;
  options.allow_long_run = long_run;
  std::vector<CensusEntry> entries = six_regular ? six_regular_gems(order) : enumerate_gems(order, options);
  if (max_results && entries.size() > max_results) entries.resize(max_results);
  for (auto& e : entries) {
    if (!e.invariants) e = classify(std::move(e));
  }
  if (!out_path.empty()) {
    append_census_file(out_path, order, options, max_results, entries);
  } else {
    for (const auto& e : entries) out << to_json(*e.invariants).dump() << '\n';
  }
  return kExitOk;
}

int cmd_table1(std::ostream& out) {
  const Table1Report report = verify_table1();
  for (const auto& row : report.rows) {
    out << (row.passed() ? "PASS" : "FAIL") << '\t' << row.name << '\t' << row.code;
    if (row.report) {
      out << "\tboundary=" << row.report->boundary.components.size() << "xT2\tH1=" << row.report->h1.describe();
    }
    for (const auto& f : row.failures) out << '\t' << f;
    out << '\n';
  }
  out << "distinct canonical codes: " << report.distinct_canonical << '/' << report.rows.size() << '\n';
  return report.passed() ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"gemkit: 4-colored graphs representing compact 3-manifolds", "gemkit"};
  app.require_subcommand(1, 1);

  std::string file;
  auto* validate = app.add_subcommand("validate", "Parse each code and report OK or the error");
  validate->add_option("file", file, "Code file, or - for standard input")->required();
  auto* invariants = app.add_subcommand("invariants", "Emit one JSON invariant report per code");
  invariants->add_option("file", file, "Code file, or - for standard input")->required();
  auto* canon = app.add_subcommand("canon", "Print the canonical code of each graph");
  canon->add_option("file", file, "Code file, or - for standard input")->required();

  std::string cover_code;
  int degree = 1;
  std::size_t limit = 1;
  auto* cover = app.add_subcommand("cover", "Find admissible cyclic coverings of a graph");
  cover->add_option("--code", cover_code, "Base graph code")->required();
  cover->add_option("--degree", degree, "Covering degree n")->required()->check(CLI::PositiveNumber);
  cover->add_option("--limit", limit, "Maximum number of solutions")->check(CLI::NonNegativeNumber);

  int order = 0;
  std::size_t max_results = 0;
  std::string out_path;
  bool long_run = false;
  bool six_regular = false;
  auto* census = app.add_subcommand("census", "Enumerate connected bipartite gems of one order");
  census->add_option("--order", order, "Number of vertices (even)")->required()->check(CLI::PositiveNumber);
  census->add_option("--max-results", max_results, "Keep at most K entries (0: all)");
  census->add_option("--out", out_path, "Append to a census file instead of printing JSON lines");
  census->add_flag("--long", long_run, "Allow the long-running order-12 enumeration");
  census->add_flag("--six-regular", six_regular, "Only gems whose bicolored cycles all have length 6");

  auto* table1 = app.add_subcommand("table1", "Verify the bundled order-14 census codes");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*validate || *invariants || *canon) {
      const auto records = load_records(file, in, err);
      if (!records) return kExitUsage;
      if (*validate) return cmd_validate(*records, out, err);
      if (*invariants) return cmd_invariants(*records, out, err);
      return cmd_canon(*records, out, err);
    }
    if (*cover) return cmd_cover(cover_code, degree, limit, out);
    if (*census) return cmd_census(order, max_results, out_path, long_run, six_regular, out);
    if (*table1) return cmd_table1(out);
  } catch (const GemError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gemkit::cli
