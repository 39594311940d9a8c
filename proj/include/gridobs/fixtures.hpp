#pragma once

#include <string>

#include "gridobs/core.hpp"

namespace gridobs {

struct Fixture {
  Graph graph;
  Representation rep;
};

// Hand-built representations for the standard graph families. Every
// generator re-verifies its output and throws construction_error if the
// layout ever stops matching the target graph.
Fixture fixture_path(int n);               // n >= 1, 0 obstacles
Fixture fixture_complete(int n);           // n >= 1, 0 obstacles
Fixture fixture_empty(int n);              // n >= 1, n-1 obstacles
Fixture fixture_matching(int k);           // k >= 1, k-1 obstacles
Fixture fixture_cycle(int n);              // n >= 7, ceil(n/2)-2 obstacles
Fixture fixture_complete_bipartite(int n, int m);  // 2 <= n <= m, n+m-3 obstacles
// K_n minus a perfect matching on the first 2k vertices. A chained
// placement reaching k-1 obstacles is tried first (k <= 3); if it fails
// verification the generator falls back to one obstacle per pair.
Fixture fixture_complete_minus_matching(int n, int k);
Fixture fixture_empty_bipartite_complement(int n, int m);  // two cliques
Fixture fixture_binary_tree(int h);        // complete tree of height h >= 1

// CLI dispatch by class name; params are the positional integers.
Fixture fixture(const std::string& cls, const std::vector<int>& params);

}  // namespace gridobs
