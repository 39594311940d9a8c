#pragma once

#include "gridobs/planar.hpp"

namespace gridobs {

// Straight-line drawing in Z^3 with vertices grouped on one lattice line
// per color class.
struct Drawing3D {
  std::vector<GridPoint> positions;  // index == vertex label
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> color_classes;

  // Exact checks: classes partition the vertices into independent sets,
  // segments only touch at shared endpoints, no vertex inside a segment.
  void assert_valid(const Graph& g) const;
};

// Greedy proper coloring in label order; returns the color classes.
std::vector<std::vector<int>> color_classes(const Graph& g);

// Class i goes on the line {(i, t, i*t)}; the t parameters come from a
// retry search that stops at the first crossing-free assignment.
Drawing3D straight_line_embed_3d(const Graph& g,
                                 const std::vector<std::vector<int>>& classes);

std::pair<Drawing3D, ConstructionGeometry> separation_geometry_3d(
    const Drawing3D& d, EmbedMode mode);

// 3D monotone staircase between lattice points, each point within sqrt(3)
// of the segment. Ties prefer the x, then y, then z step.
LatticePath digitize_edge_3d(const GridPoint& a, const GridPoint& b);

// Replace path tails inside the endpoint cubes: enter through a face
// interior, take the axis-priority Manhattan path to the face center, then
// the axis line to the vertex.
std::vector<LatticePath> reroute_in_cubes(std::vector<LatticePath> paths,
                                          const ConstructionGeometry& geo);

struct Embed3DResult {
  Representation rep;
  ConstructionGeometry geometry;
  std::vector<LatticePath> edge_paths;
};

Embed3DResult embed3d_full(const Graph& g, EmbedMode mode, int threads = 0);
Representation embed3d(const Graph& g, EmbedMode mode, int threads = 0);

}  // namespace gridobs
