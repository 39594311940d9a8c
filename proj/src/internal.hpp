#pragma once

#include <vector>

#include "gridobs/planar.hpp"

// Helpers shared by the 2D and 3D construction pipelines.
namespace gridobs::detail {

Coord cheb_int(const GridPoint& a, const GridPoint& b, int dim);
Rat cheb_rat(const RPoint& a, const RPoint& b, int dim);

std::vector<RPoint> scaled_positions(const std::vector<GridPoint>& base, Coord s);

// Minimum squared distance between crossing points of incident segments
// with the Chebyshev box of half-side E around a vertex of degree >= 2.
// 2D takes consecutive crossings in angular order; 3D (no angular order)
// takes all pairs. 0 when a neighbor sits inside the box; 4E^2 when no
// vertex qualifies.
Rat min_delta_squared(const std::vector<RPoint>& pos,
                      const std::vector<std::pair<int, int>>& edges, const Rat& E,
                      int dim);

// The disjointness predicates: boxes pairwise apart, tubes of disjoint
// edges apart, tubes of edges sharing a vertex apart after clipping at the
// box, and every box clear of non-incident tubes.
bool separation_checks(const std::vector<RPoint>& pos,
                       const std::vector<std::pair<int, int>>& edges, int dim,
                       const Rat& E, const Rat& delta);

}  // namespace gridobs::detail
