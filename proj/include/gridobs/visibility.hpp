#pragma once

#include <cstdint>
#include <optional>

#include "gridobs/core.hpp"

namespace gridobs {

struct VerificationReport {
  bool matches = false;
  std::vector<std::pair<int, int>> missing_edges;  // in target, not visible
  std::vector<std::pair<int, int>> extra_edges;    // visible, not in target
};

// Manhattan visibility between placed vertices u and v: true iff some
// coordinate-monotone lattice path of length l1(f(u),f(v)) has every
// interior point passable (neither an obstacle nor a third vertex).
// Decided by a reachability sweep over the endpoints' bounding box, or
// over the free-cell set when the box is too large to rasterize.
bool is_visible(const Representation& rep, int u, int v);

// Independent oracle: explicit enumeration of every monotone path.
// Rejects queries with l1 distance > 18.
bool brute_force_visible(const Representation& rep, int u, int v);

// Number of monotone lattice paths between two points (enumerated, not
// computed by formula; same 18-step cap as the oracle).
std::uint64_t brute_force_path_count(const GridPoint& a, const GridPoint& b);

// Graph on rep's labels with an edge wherever is_visible holds.
// threads = 0 picks the hardware concurrency.
Graph visibility_graph(const Representation& rep, int threads = 0);

VerificationReport verify(const Representation& rep, const Graph& g, int threads = 0);

/// Canonical witness: the lexicographically least passable monotone path
// under axis priority x, y, z (each axis stepping toward v), restricted
// to points from which v stays reachable. Empty when not visible.
std::optional<LatticePath> witness_path(const Representation& rep, int u, int v);

}  // namespace gridobs
