#pragma once

#include <optional>

#include "gridobs/core.hpp"

namespace gridobs {

// Obstacle set split into maximal components under unit-distance
// adjacency (4-adjacency in 2D, 6-adjacency in 3D).
struct ComponentDecomposition {
  std::vector<std::vector<GridPoint>> components;  // each sorted
  int count = 0;
};

ComponentDecomposition component_obstacles(const Representation& rep);

// Minimum k <= obstacle_cap such that some injective placement of the
// vertices into a window_w x window_h window plus k obstacles realizes g
// exactly; absent if no placement fits the caps. The window restriction
// makes this an upper bound on the true minimum over Z^2. Exhaustive over
// placements (mod window symmetry and graph automorphisms) with a
// branch-and-bound over blocking points.
std::optional<int> obsnum_exact(const Graph& g, int window_w, int window_h,
                                int obstacle_cap);

// Soundness invariant: whenever the canonical witness paths of two
// vertex-disjoint edges share a point and run in the same diagonal
// direction, splicing at the shared point makes the cross pairs visible,
// so they must be edges. True on every verified representation.
// Throws invalid_input if rep does not verify against g.
bool crossing_c4_check(const Representation& rep, const Graph& g);

// True iff g contains a 4-cycle as a (not necessarily induced) subgraph.
bool has_c4(const Graph& g);

}  // namespace gridobs
