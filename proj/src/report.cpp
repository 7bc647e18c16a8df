#include "gemkit/report.hpp"

#include <filesystem>
#include <fstream>
#include <limits>
#include <stdexcept>

#include "gemkit/canonical.hpp"

namespace gemkit {

namespace {

Json big_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max()) {
    return x.convert_to<long long>();
  }
  return x.str();
}

}  // namespace

Json to_json(const SurfaceType& s) {
  Json j;
  j["orientable"] = s.orientable;
  j["euler"] = s.euler;
  j["genus"] = s.genus;
  return j;
}

Json to_json(const HomologyGroup& h) {
  Json j;
  j["rank"] = h.rank;
  j["torsion"] = Json::array();
  for (const auto& d : h.torsion) j["torsion"].push_back(big_to_json(d));
  return j;
}

Json to_json(const InvariantReport& r) {
  Json j;
  j["name"] = r.name ? Json(*r.name) : Json(nullptr);
  j["code"] = r.code ? Json(*r.code) : Json(nullptr);
  j["order"] = r.order;
  j["bipartite"] = r.bipartite;
  j["closed"] = r.boundary.closed;
  j["boundary"] = Json::array();
  for (const auto& s : r.boundary.components) j["boundary"].push_back(to_json(s));
  j["h1"] = to_json(r.h1);
  j["six_regular"] = r.six_regular;
  return j;
}

Json covering_solution_json(const VoltageAssignment& va) {
  const CoveringMap cm = derived_graph(va);
  const InvariantReport total = invariant_report(cm.total);
  Json j;
  j["voltages"] = Json::array();
  for (const auto& t : cotree_triples(va)) j["voltages"].push_back(Json::array({t.vertex, t.color, t.value}));
  j["derived_code"] = is_bipartite(cm.total) ? Json(canonical_code(cm.total)) : Json(nullptr);
  j["admissible"] = is_admissible(cm);
  j["boundary"] = Json::array();
  for (const auto& s : total.boundary.components) j["boundary"].push_back(to_json(s));
  j["h1"] = to_json(total.h1);
  return j;
}

Json cover_report(const std::string& base_code, int degree, const std::vector<VoltageAssignment>& solutions) {
  Json j;
  j["base_code"] = base_code;
  j["n"] = degree;
  j["solutions"] = Json::array();
  for (const auto& va : solutions) j["solutions"].push_back(covering_solution_json(va));
  return j;
}

std::string census_options_string(const CensusOptions& options, std::size_t max_results) {
  std::string out = "bipartite=" + std::to_string(options.bipartite ? 1 : 0) +
                    ",connected=" + std::to_string(options.connected ? 1 : 0);
  if (max_results) out += ",max_results=" + std::to_string(max_results);
  return out;
}

std::string census_header(int order, const CensusOptions& options, std::size_t max_results) {
  return "#gemkit-census v1\n#order=" + std::to_string(order) + "\n#opts=" +
         census_options_string(options, max_results) + "\n";
}

std::string census_line(const CensusEntry& entry) {
  std::string line = entry.canonical;
  line += '\t';
  line += entry.invariants ? to_json(*entry.invariants).dump() : std::string("null");
  return line;
}

void append_census_file(const std::string& path, int order, const CensusOptions& options, std::size_t max_results,
                        const std::vector<CensusEntry>& entries) {
  namespace fs = std::filesystem;
  std::error_code ec;
  const bool fresh = !fs::exists(path, ec) || fs::file_size(path, ec) == 0;
  if (!fresh) {
    std::ifstream in(path);
    std::string magic, order_line;
    std::getline(in, magic);
    std::getline(in, order_line);
    if (magic != "#gemkit-census v1" || order_line != "#order=" + std::to_string(order)) {
      throw std::runtime_error("existing census file " + path + " has a different header");
    }
  }
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::runtime_error("cannot open " + path + " for appending");
  if (fresh) out << census_header(order, options, max_results);
  for (const auto& e : entries) out << census_line(e) << '\n';
}

}  // namespace gemkit
