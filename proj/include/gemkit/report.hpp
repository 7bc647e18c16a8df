#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "gemkit/census.hpp"
#include "gemkit/coverings.hpp"
#include "gemkit/topology.hpp"

namespace gemkit {

using Json = nlohmann::ordered_json;

Json to_json(const SurfaceType& s);
Json to_json(const HomologyGroup& h);

// {name, code, order, bipartite, closed, boundary, h1, six_regular}
Json to_json(const InvariantReport& r);

// One solution record of the cover command.
Json covering_solution_json(const VoltageAssignment& va);

// {base_code, n, solutions}
Json cover_report(const std::string& base_code, int degree, const std::vector<VoltageAssignment>& solutions);

std::string census_options_string(const CensusOptions& options, std::size_t max_results);

// Header lines of a census file (each ending in '\n').
std::string census_header(int order, const CensusOptions& options, std::size_t max_results);

// "canonical<TAB>json" for a classified entry.
std::string census_line(const CensusEntry& entry);

// Appends entries to a census file, writing the header first when the file is
// new or empty. Throws std::runtime_error when the file cannot be opened or
// its existing header records a different order.
void append_census_file(const std::string& path, int order, const CensusOptions& options, std::size_t max_results,
                        const std::vector<CensusEntry>& entries);

}  // namespace gemkit
