#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gridobs {

using Coord = std::int64_t;

// Raised on malformed inputs (bad JSON, invariant violations, parameter
// ranges). The CLI maps it to exit code 2 for format errors and 1 for
// domain failures.
struct invalid_input : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct construction_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Lattice point in Z^2 or Z^3. For 2D, z is always 0; the containing
// structure's dimension decides how many coordinates are meaningful.
struct GridPoint {
  Coord x = 0, y = 0, z = 0;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
  friend auto operator<=>(const GridPoint& a, const GridPoint& b) {
    if (auto c = a.x <=> b.x; c != 0) return c;
    if (auto c = a.y <=> b.y; c != 0) return c;
    return a.z <=> b.z;
  }
  Coord operator[](int axis) const { return axis == 0 ? x : axis == 1 ? y : z; }
  Coord& operator[](int axis) { return axis == 0 ? x : axis == 1 ? y : z; }
};

inline GridPoint pt(Coord x, Coord y) { return GridPoint{x, y, 0}; }
inline GridPoint pt(Coord x, Coord y, Coord z) { return GridPoint{x, y, z}; }

inline Coord l1(const GridPoint& a, const GridPoint& b) {
  auto d = [](Coord u, Coord v) { return u > v ? u - v : v - u; };
  return d(a.x, b.x) + d(a.y, b.y) + d(a.z, b.z);
}

struct PointHash {
  std::size_t operator()(const GridPoint& p) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t v : {std::uint64_t(p.x), std::uint64_t(p.y), std::uint64_t(p.z)}) {
      h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return std::size_t(h);
  }
};

// Axis-aligned integer box, inclusive on both ends.
struct Box {
  GridPoint lo, hi;
  bool contains(const GridPoint& p, int dim) const {
    for (int a = 0; a < dim; ++a)
      if (p[a] < lo[a] || p[a] > hi[a]) return false;
    return true;
  }
  // Number of lattice points inside; throws on overflow.
  Coord volume(int dim) const;
  friend bool operator==(const Box&, const Box&) = default;
};

// Simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  bool has_edge(int u, int v) const;
  std::vector<int> neighbors(int v) const;
  int degree(int v) const;

  friend bool operator==(const Graph&, const Graph&) = default;

  static Graph path(int n);
  static Graph cycle(int n);
  static Graph complete(int n);
  static Graph complete_bipartite(int n, int m);
  static Graph empty(int n);

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;  // sorted, u < v
};

enum class Occupancy { Free, Blocked };

// A lattice obstacle representation: vertex placement plus the exception
// set relative to the default occupancy. When default is Free the cells
// are obstacles on an otherwise empty lattice; when default is Blocked
// the cells are the free points carved out of a fully blocked bounds box.
struct Representation {
  int dim = 2;
  Occupancy default_occ = Occupancy::Free;
  std::vector<GridPoint> vertices;          // index == vertex label
  std::vector<GridPoint> cells;             // sorted, unique
  std::optional<Box> bounds;

  int n() const { return int(vertices.size()); }
  bool has_cell(const GridPoint& p) const;
  // True if p carries an obstacle (vertex positions are never obstacles).
  bool is_obstacle(const GridPoint& p) const;
  // Obstacle count per the default-occupancy convention.
  Coord obstacle_count() const;
  void normalize();   // sorts/uniques cells
  void validate() const;  // throws invalid_input on violation
};

// Path of unit lattice steps, monotone in every coordinate.
struct LatticePath {
  std::vector<GridPoint> points;

  std::size_t length() const { return points.empty() ? 0 : points.size() - 1; }
  bool is_monotone_unit() const;
  void validate(int dim) const;
};

// JSON (de)serialization per the canonical schemas. Encoding is
// deterministic: fixed field order, cells sorted.
std::string encode_representation(const Representation& rep);
Representation decode_representation(const std::string& bytes);
std::string encode_graph(const Graph& g);
Graph decode_graph(const std::string& bytes);

}  // namespace gridobs
