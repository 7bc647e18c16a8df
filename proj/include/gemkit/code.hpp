#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gemkit/colored_graph.hpp"

namespace gemkit {

// Letter codes cover graphs with at most this many vertex pairs; larger
// graphs use the comma-separated numeric form with the same block layout.
inline constexpr int kMaxLetterPairs = 26;

// Signed vertex labels in {-p..-1, +1..+p}, one per vertex.
using Labeling = std::vector<int>;

// A code as 3p positive labels: entry (c-1)*p + (i-1) is the label of the
// vertex c-adjacent to -i.
using CodeEntries = std::vector<int>;

// Vertex k < p is -(k+1), vertex p+k is +(k+1). This is the layout
// parse_code produces.
Labeling identity_labeling(int order);

// Builds the bipartite graph with color 0 pairing -i/+i and colors 1..3 read
// from the three blocks. Throws NotInvolution if a block is not a permutation.
ColoredGraph graph_from_entries(std::span<const int> entries);

std::string render_code(std::span<const int> entries);

ColoredGraph parse_code(std::string_view text);

CodeEntries code_entries(const ColoredGraph& g, std::span<const int> labeling);

std::string emit_code(const ColoredGraph& g, std::span<const int> labeling);

}  // namespace gemkit
