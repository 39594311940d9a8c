#pragma once

#include <cstdint>
#include <optional>

#include "gridobs/core.hpp"

namespace gridobs {

// Point sets for the hardness reductions: a horizontal spine p0 plus two
// steep arms p1/p2 above and below it.
struct PointSetInstance {
  std::vector<GridPoint> p0, p1, p2;
  enum class Variant { Gpse, Oeps } variant = Variant::Gpse;
  int n = 0, k1 = 0, k2 = 0;
};

// pre: n even, n >= 4, k1 + k2 = n/2 + 1, k1, k2 >= 0.
// p0 = {(-j, 0) : j = 0..2n-2}; gpse arms (j, +-n*j), oeps arms (2j, +-2n*j).
PointSetInstance gpse_points(int n, int k1, int k2);
PointSetInstance oeps_points(int n, int k1, int k2);

// A rectilinear drawing whose edges are Manhattan (monotone shortest)
// lattice paths with pairwise disjoint interiors.
struct GeodesicDrawing {
  std::vector<GridPoint> vertices;
  std::vector<std::pair<int, int>> edges;
  std::vector<LatticePath> paths;  // paths[i] connects edges[i]

  Graph graph() const { return Graph(int(vertices.size()), edges); }
};

// Stretch the drawing (y doubled everywhere, x doubled in the x >= 0
// half), keep only the stretched paths free and block the rest; the
// result is re-verified against the drawing's graph.
Representation geodesic_to_rep(const GeodesicDrawing& d);

enum class OepsStatus { Yes, No, Unknown };

struct OepsResult {
  OepsStatus status = OepsStatus::Unknown;
  std::optional<Representation> witness;  // set iff status == Yes
};

struct OepsCaps {
  std::uint64_t max_nodes = 1'000'000;  // candidate path-system leaves
};

// Does some bijection of V onto s admit an obstacle representation of g?
// Exhaustive over bijections and per-edge monotone path systems; Unknown
// when the node budget truncated an otherwise negative search.
// pre: |s| = g.n <= 6, bounding-box area of s <= 400.
OepsResult oeps_decide(const Graph& g, const std::vector<GridPoint>& s,
                       OepsCaps caps = {});

}  // namespace gridobs
