#pragma once

#include <utility>

#include "gridobs/rational_geom.hpp"
#include "gridobs/visibility.hpp"

namespace gridobs {

// Straight-line drawing with integer positions (the embedder outputs
// coordinates in [0, n-2]^2; separation_geometry rescales them).
struct PlanarDrawing {
  std::vector<GridPoint> positions;         // index == vertex label
  std::vector<std::pair<int, int>> edges;   // the input graph's edges only
  Rat scale = 1;                            // refinement applied so far

  // Exact checks: no two edge segments touch except at shared endpoints,
  // no vertex inside a segment. Throws construction_error.
  void assert_planar(int dim = 2) const;
};

enum class EmbedMode { Adaptive, PaperFaithful };

// Separation parameters plus the final-lattice layout they produce. Boxes
// are Chebyshev balls of half-side `box_half` around each vertex; tubes
// have radius `delta` around each edge segment (both in final lattice
// units, where one lattice step is `grid_step` of the scaled drawing).
struct ConstructionGeometry {
  EmbedMode mode = EmbedMode::Adaptive;
  int dim = 2;
  Rat c_squared = 0;      // min squared vertex/non-incident-segment distance
  bool has_c = false;     // false when the graph has no non-incident pairs
  Rat epsilon;            // box half-side, final lattice units (== box_half)
  Rat delta;              // tube radius, final lattice units
  Rat grid_step;          // lattice spacing relative to the scaled drawing
  Rat scale;              // total refinement of the initial integer grid
  Coord box_half = 0;
  std::vector<GridPoint> positions;  // final lattice units
  std::vector<std::pair<int, int>> edges;

  bool in_box(const GridPoint& p, int v) const;
  // Re-evaluates the three tube/box disjointness predicates exactly.
  bool separation_holds() const;
};

// Schnyder-style straight-line embedding on the (n-2) x (n-2) grid.
// Internally triangulates (added chords are discarded from the result).
PlanarDrawing straight_line_embed(const Graph& g);

std::pair<PlanarDrawing, ConstructionGeometry> separation_geometry(
    const PlanarDrawing& d, EmbedMode mode);

// Monotone staircase along the segment, visiting corner points of the
// lattice cells the segment crosses; every point deviates by at most
// sqrt(2) * grid_step. Endpoints must lie on the grid_step lattice.
// Returned coordinates are in grid_step units.
LatticePath digitize_edge(const RPoint& a, const RPoint& b, const Rat& grid_step,
                          const Rat& tube_radius);

// Replace each path's tail inside its endpoints' boxes by the canonical
// boundary-run-then-axis pattern; box corners are bypassed.
std::vector<LatticePath> reroute_in_boxes(std::vector<LatticePath> paths,
                                          const ConstructionGeometry& geo);

struct Embed2DResult {
  Representation rep;
  ConstructionGeometry geometry;
  std::vector<LatticePath> edge_paths;  // aligned with geometry.edges
};

Embed2DResult embed2d(const Graph& g, EmbedMode mode, int threads = 0);

struct GbgReport {
  bool ok = true;
  int u = -1, v = -1;
  LatticePath path;
  std::string reason;
};

// Checks that every edge's canonical witness decomposes as
// green (start box) - blue (outside all boxes, in exactly one tube) -
// green (end box).
GbgReport gbg_audit(const Representation& rep, const ConstructionGeometry& geo,
                    const Graph& g);

}  // namespace gridobs
