#pragma once

// Naive census: every triple of permutations of {1..p} as the three code
// blocks, connected graphs bucketed by canonical code.

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "gemkit/canonical.hpp"
#include "gemkit/code.hpp"

namespace gemkit::testing {

inline std::set<std::string> brute_force_census(int order) {
  const int p = order / 2;
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(p);
  std::iota(perm.begin(), perm.end(), 1);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  std::set<std::string> classes;
  std::vector<int> entries(3 * p);
  for (const auto& a : perms)
    for (const auto& b : perms)
      for (const auto& c : perms) {
        std::copy(a.begin(), a.end(), entries.begin());
        std::copy(b.begin(), b.end(), entries.begin() + p);
        std::copy(c.begin(), c.end(), entries.begin() + 2 * p);
        const ColoredGraph g = graph_from_entries(entries);
        if (is_connected(g)) classes.insert(canonical_code(g));
      }
  return classes;
}

}  // namespace gemkit::testing
