#pragma once

#include <random>
#include <vector>

#include "gridobs/core.hpp"

namespace gridobs::testutil {

inline Representation free_rep(std::vector<GridPoint> vertices,
                               std::vector<GridPoint> cells, int dim = 2) {
  Representation r;
  r.dim = dim;
  r.default_occ = Occupancy::Free;
  r.vertices = std::move(vertices);
  r.cells = std::move(cells);
  r.normalize();
  r.validate();
  return r;
}

inline Representation blocked_rep(std::vector<GridPoint> vertices,
                                  std::vector<GridPoint> free_cells, Box bounds,
                                  int dim = 2) {
  Representation r;
  r.dim = dim;
  r.default_occ = Occupancy::Blocked;
  r.vertices = std::move(vertices);
  r.cells = std::move(free_cells);
  r.bounds = bounds;
  r.normalize();
  r.validate();
  return r;
}

}  // namespace gridobs::testutil
