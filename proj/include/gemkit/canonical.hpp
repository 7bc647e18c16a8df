#pragma once

#include <string>
#include <vector>

#include "gemkit/code.hpp"
#include "gemkit/colored_graph.hpp"

namespace gemkit {

// Lexicographically smallest code over every labeling reachable by the
// pair-wise traversal from each start vertex, under all 24 color
// permutations. Requires g connected and bipartite.
CodeEntries canonical_entries(const ColoredGraph& g);

std::string canonical_code(const ColoredGraph& g);

// Isomorphism certificate for any connected graph, bipartite or not: the
// smallest breadth-first adjacency table over all start vertices and color
// permutations.
std::vector<int> structure_certificate(const ColoredGraph& g);

// Color isomorphism (vertex bijection plus color permutation).
bool are_isomorphic(const ColoredGraph& a, const ColoredGraph& b);

}  // namespace gemkit
