#include "gridobs/reduction.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "gridobs/visibility.hpp"

namespace gridobs {

namespace {

PointSetInstance make_points(int n, int k1, int k2, PointSetInstance::Variant variant) {
  if (n < 4 || n % 2 != 0) throw invalid_input("point set: n must be even, >= 4");
  if (k1 < 0 || k2 < 0 || k1 + k2 != n / 2 + 1)
    throw invalid_input("point set: need k1 + k2 = n/2 + 1");
  PointSetInstance inst;
  inst.variant = variant;
  inst.n = n;
  inst.k1 = k1;
  inst.k2 = k2;
  for (int j = 0; j <= 2 * n - 2; ++j) inst.p0.push_back(pt(-j, 0));
  int m = variant == PointSetInstance::Variant::Gpse ? 1 : 2;
  for (int j = 1; j <= k1; ++j) inst.p1.push_back(pt(Coord(m) * j, Coord(m) * n * j));
  for (int j = 1; j <= k2; ++j) inst.p2.push_back(pt(Coord(m) * j, -Coord(m) * n * j));
  return inst;
}

}  // namespace

PointSetInstance gpse_points(int n, int k1, int k2) {
  return make_points(n, k1, k2, PointSetInstance::Variant::Gpse);
}

PointSetInstance oeps_points(int n, int k1, int k2) {
  return make_points(n, k1, k2, PointSetInstance::Variant::Oeps);
}

Representation geodesic_to_rep(const GeodesicDrawing& d) {
  const int n = int(d.vertices.size());
  if (d.paths.size() != d.edges.size())
    throw invalid_input("geodesic drawing: one path per edge required");
  std::set<GridPoint> vset(d.vertices.begin(), d.vertices.end());
  if (int(vset.size()) != n) throw invalid_input("geodesic drawing: duplicate vertices");

  std::set<GridPoint> interiors;
  for (std::size_t i = 0; i < d.paths.size(); ++i) {
    const LatticePath& p = d.paths[i];
    p.validate(2);
    auto [u, v] = d.edges[std::size_t(i)];
    GridPoint a = d.vertices[std::size_t(u)], b = d.vertices[std::size_t(v)];
    if (!((p.points.front() == a && p.points.back() == b) ||
          (p.points.front() == b && p.points.back() == a)))
      throw invalid_input("geodesic drawing: path endpoints do not match the edge");
    for (std::size_t k = 1; k + 1 < p.points.size(); ++k) {
      const GridPoint& q = p.points[k];
      if (vset.count(q)) throw invalid_input("geodesic drawing: path runs through a vertex");
      if (!interiors.insert(q).second)
        throw invalid_input("geodesic drawing: paths cross");
    }
  }

  // Stretch: blank rows everywhere, blank columns in the right half.
  auto stretch = [](const GridPoint& p) {
    return pt(p.x >= 0 ? 2 * p.x : p.x, 2 * p.y);
  };
  std::set<GridPoint> free;
  for (auto& v : d.vertices) free.insert(stretch(v));
  for (auto& p : d.paths)
    for (std::size_t k = 0; k < p.points.size(); ++k) {
      GridPoint a = stretch(p.points[k]);
      free.insert(a);
      if (k + 1 < p.points.size()) {
        GridPoint b = stretch(p.points[k + 1]);
        free.insert(pt((a.x + b.x) / 2, (a.y + b.y) / 2));  // midpoint if gap 2
      }
    }

  Representation rep;
  rep.default_occ = Occupancy::Blocked;
  for (auto& v : d.vertices) rep.vertices.push_back(stretch(v));
  Box b{*free.begin(), *free.begin()};
  for (auto& p : free) {
    b.lo.x = std::min(b.lo.x, p.x);
    b.lo.y = std::min(b.lo.y, p.y);
    b.hi.x = std::max(b.hi.x, p.x);
    b.hi.y = std::max(b.hi.y, p.y);
  }
  rep.bounds = b;
  std::set<GridPoint> sv(rep.vertices.begin(), rep.vertices.end());
  for (auto& p : free)
    if (!sv.count(p)) rep.cells.push_back(p);
  rep.validate();
  if (!verify(rep, d.graph()).matches)
    throw construction_error("geodesic drawing does not survive the stretch");
  return rep;
}

namespace {

struct OepsSearch {
  const Graph* g;
  std::vector<GridPoint> pos;
  std::set<GridPoint> vset;
  std::vector<std::pair<int, int>> order;  // edges, smallest box first
  std::uint64_t nodes = 0, budget = 0;
  bool truncated = false;
  std::optional<Representation> witness;

  bool leaf(const std::set<GridPoint>& free) {
    if (++nodes > budget) {
      truncated = true;
      return false;
    }
    Representation rep;
    rep.default_occ = Occupancy::Blocked;
    rep.vertices = pos;
    Box b{pos.front(), pos.front()};
    for (auto& p : pos) {
      b.lo.x = std::min(b.lo.x, p.x);
      b.lo.y = std::min(b.lo.y, p.y);
      b.hi.x = std::max(b.hi.x, p.x);
      b.hi.y = std::max(b.hi.y, p.y);
    }
    rep.bounds = b;
    for (auto& p : free)
      if (!vset.count(p)) rep.cells.push_back(p);
    rep.normalize();
    if (!verify(rep, *g).matches) return false;
    witness = std::move(rep);
    return true;
  }

  // enumerate monotone paths a->b in lexicographic step order (x first)
  bool paths_dfs(std::size_t e, GridPoint cur, const GridPoint& b,
                 std::set<GridPoint>& free) {
    if (truncated) return false;
    if (cur == b) return edges_dfs(e + 1, free);
    for (int axis : {0, 1}) {
      if (cur[axis] == b[axis]) continue;
      GridPoint next = cur;
      next[axis] += b[axis] > cur[axis] ? 1 : -1;
      if (next != b && vset.count(next)) continue;  // interior through a vertex
      bool inserted = free.insert(next).second;
      if (paths_dfs(e, next, b, free)) return true;
      if (inserted) free.erase(next);
    }
    return false;
  }

  bool edges_dfs(std::size_t e, std::set<GridPoint>& free) {
    if (e == order.size()) return leaf(free);
    auto [u, v] = order[e];
    return paths_dfs(e, pos[std::size_t(u)], pos[std::size_t(v)], free);
  }
};

}  // namespace

OepsResult oeps_decide(const Graph& g, const std::vector<GridPoint>& s, OepsCaps caps) {
  const int n = g.n();
  if (int(s.size()) != n) throw invalid_input("oeps_decide: |s| must equal g.n");
  if (n > 6) throw invalid_input("oeps_decide: n <= 6");
  if (std::set<GridPoint>(s.begin(), s.end()).size() != s.size())
    throw invalid_input("oeps_decide: points must be distinct");
  if (n > 0) {
    Coord xmin = s[0].x, xmax = s[0].x, ymin = s[0].y, ymax = s[0].y;
    for (auto& p : s) {
      if (p.z != 0) throw invalid_input("oeps_decide: 2D points only");
      xmin = std::min(xmin, p.x);
      xmax = std::max(xmax, p.x);
      ymin = std::min(ymin, p.y);
      ymax = std::max(ymax, p.y);
    }
    if ((xmax - xmin + 1) * (ymax - ymin + 1) > 400)
      throw invalid_input("oeps_decide: bounding box too large");
  }

  OepsSearch search;
  search.g = &g;
  search.budget = caps.max_nodes;

  std::vector<int> perm(s.size());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    search.pos.clear();
    for (int i = 0; i < n; ++i) search.pos.push_back(s[std::size_t(perm[std::size_t(i)])]);
    search.vset = std::set<GridPoint>(search.pos.begin(), search.pos.end());

    // adjacent placed non-edge vertices are visible no matter what
    bool feasible = true;
    for (int u = 0; u < n && feasible; ++u)
      for (int v = u + 1; v < n; ++v)
        if (!g.has_edge(u, v) &&
            l1(search.pos[std::size_t(u)], search.pos[std::size_t(v)]) == 1) {
          feasible = false;
          break;
        }
    if (!feasible) continue;

    search.order = g.edges();
    std::sort(search.order.begin(), search.order.end(), [&](auto& a, auto& b) {
      auto area = [&](const std::pair<int, int>& e) {
        GridPoint p = search.pos[std::size_t(e.first)], q = search.pos[std::size_t(e.second)];
        return (std::abs(p.x - q.x) + 1) * (std::abs(p.y - q.y) + 1);
      };
      return area(a) < area(b);
    });

    std::set<GridPoint> free(search.pos.begin(), search.pos.end());
    if (search.edges_dfs(0, free))
      return OepsResult{OepsStatus::Yes, std::move(search.witness)};
  } while (!search.truncated && std::next_permutation(perm.begin(), perm.end()));

  return OepsResult{search.truncated ? OepsStatus::Unknown : OepsStatus::No,
                    std::nullopt};
}

}  // namespace gridobs
