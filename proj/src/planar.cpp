// Planar pipeline: scale the straight-line drawing until vertex boxes and
// edge tubes are pairwise disjoint, digitize each edge to a monotone
// staircase, replace the in-box tails by the canonical side-run pattern,
// and carve the union out of a blocked plane.
#include <algorithm>
#include <map>
#include <set>

#include "gridobs/planar.hpp"
#include "gridobs/visibility.hpp"
#include "internal.hpp"

namespace gridobs {

namespace detail {

Coord cheb_int(const GridPoint& a, const GridPoint& b, int dim) {
  Coord m = 0;
  for (int axis = 0; axis < dim; ++axis) {
    Coord d = a[axis] - b[axis];
    if (d < 0) d = -d;
    m = std::max(m, d);
  }
  return m;
}

Rat cheb_rat(const RPoint& a, const RPoint& b, int dim) {
  Rat m = 0;
  for (int axis = 0; axis < dim; ++axis) {
    Rat d = a[axis] - b[axis];
    if (d < 0) d = -d;
    m = std::max(m, d);
  }
  return m;
}

Rat min_delta_squared(const std::vector<RPoint>& pos,
                      const std::vector<std::pair<int, int>>& edges, const Rat& E,
                      int dim) {
  int n = int(pos.size());
  std::vector<std::vector<int>> nb(n);
  for (auto& [u, v] : edges) {
    nb[u].push_back(v);
    nb[v].push_back(u);
  }
  bool any = false;
  Rat best = 0;
  for (int v = 0; v < n; ++v) {
    if (nb[v].size() < 2) continue;
    std::vector<RPoint> dirs;
    for (int w : nb[v]) {
      RPoint out;
      if (!clip_outside_chebyshev(pos[v], pos[w], E, dim, out)) return 0;
      dirs.push_back(out - pos[v]);
    }
    int deg = int(dirs.size());
    if (dim == 2) {
      std::sort(dirs.begin(), dirs.end(), angular_less);
      for (int i = 0; i < deg; ++i) {
        Rat d2 = dist2_point_point(dirs[i], dirs[(i + 1) % deg]);
        if (!any || d2 < best) best = d2;
        any = true;
      }
    } else {
      // No angular order in 3D: take all pairs (a lower bound on any
      // "consecutive" notion).
      for (int i = 0; i < deg; ++i)
        for (int j = i + 1; j < deg; ++j) {
          Rat d2 = dist2_point_point(dirs[i], dirs[j]);
          if (!any || d2 < best) best = d2;
          any = true;
        }
    }
  }
  if (!any) return 4 * E * E;
  return best;
}

// The three disjointness predicates (boxes apart, tubes apart, tubes of a
// shared vertex apart after clipping) plus box-vs-foreign-tube clearance.
bool separation_checks(const std::vector<RPoint>& pos,
                       const std::vector<std::pair<int, int>>& edges, int dim,
                       const Rat& E, const Rat& delta) {
  int n = int(pos.size());
  Rat gap = 2 * E + 2 * delta;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (cheb_rat(pos[i], pos[j], dim) <= gap) return false;
  Rat tube2 = 4 * delta * delta;
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      int shared = -1;
      if (a == c || a == d) shared = a;
      if (b == c || b == d) shared = b;
      if (shared < 0) {
        if (dist2_segment_segment(pos[a], pos[b], pos[c], pos[d]) <= tube2)
          return false;
      } else {
        int e1 = (a == shared) ? b : a;
        int e2 = (c == shared) ? d : c;
        Rat h = E - delta;
        if (h <= 0) return false;
        RPoint s1, s2;
        if (!clip_outside_chebyshev(pos[shared], pos[e1], h, dim, s1)) return false;
        if (!clip_outside_chebyshev(pos[shared], pos[e2], h, dim, s2)) return false;
        if (dist2_segment_segment(s1, pos[e1], s2, pos[e2]) <= tube2) return false;
      }
    }
  RPoint ext{E, E, dim == 3 ? E : Rat(0)};
  Rat d2min = delta * delta;
  for (int v = 0; v < n; ++v)
    for (auto& [a, b] : edges) {
      if (a == v || b == v) continue;
      if (dist2_box_segment(pos[v] - ext, pos[v] + ext, pos[a], pos[b], dim) <= d2min)
        return false;
    }
  return true;
}

std::vector<RPoint> scaled_positions(const std::vector<GridPoint>& base, Coord s) {
  std::vector<RPoint> out;
  out.reserve(base.size());
  for (auto& p : base) out.push_back(Rat(s) * rpoint(p));
  return out;
}

}  // namespace detail

using detail::cheb_int;
using detail::min_delta_squared;
using detail::scaled_positions;
using detail::separation_checks;

namespace {

// Exact squared point-segment distance over integer coordinates, kept as a
// fraction so tube-membership tests avoid rational arithmetic.
struct Frac {
  __int128 num;
  __int128 den;
};

Frac seg_dist2_frac(const GridPoint& p, const GridPoint& a, const GridPoint& b) {
  __int128 ux = b.x - a.x, uy = b.y - a.y, uz = b.z - a.z;
  __int128 wx = p.x - a.x, wy = p.y - a.y, wz = p.z - a.z;
  __int128 uu = ux * ux + uy * uy + uz * uz;
  __int128 ww = wx * wx + wy * wy + wz * wz;
  if (uu == 0) return {ww, 1};
  __int128 t = wx * ux + wy * uy + wz * uz;
  if (t <= 0) return {ww, 1};
  if (t >= uu) {
    __int128 vx = p.x - b.x, vy = p.y - b.y, vz = p.z - b.z;
    return {vx * vx + vy * vy + vz * vz, 1};
  }
  return {ww * uu - t * t, uu};
}

bool frac_le(const Frac& f, const Rat& bound) {
  return BigInt(f.num) * denominator(bound) <= numerator(bound) * BigInt(f.den);
}

}  // namespace

bool ConstructionGeometry::in_box(const GridPoint& p, int v) const {
  return cheb_int(p, positions[v], dim) <= box_half;
}

bool ConstructionGeometry::separation_holds() const {
  std::vector<RPoint> pos;
  pos.reserve(positions.size());
  for (auto& p : positions) pos.push_back(rpoint(p));
  return separation_checks(pos, edges, dim, Rat(box_half), delta);
}

std::pair<PlanarDrawing, ConstructionGeometry> separation_geometry(
    const PlanarDrawing& d, EmbedMode mode) {
  int n = int(d.positions.size());
  if (n < 2) throw invalid_input("separation needs at least two vertices");

  ConstructionGeometry geo;
  geo.mode = mode;
  geo.dim = 2;
  geo.edges = d.edges;

  // c^2: least squared distance from a vertex to a non-incident segment.
  bool has_c = false;
  Rat c2 = 0;
  for (int v = 0; v < n; ++v)
    for (auto& [a, b] : d.edges) {
      if (a == v || b == v) continue;
      Rat d2 = dist2_point_segment(rpoint(d.positions[v]), rpoint(d.positions[a]),
                                   rpoint(d.positions[b]));
      if (!has_c || d2 < c2) c2 = d2;
      has_c = true;
    }
  if (!has_c) {
    // No vertex/segment pair (few or no edges): fall back to vertex gaps.
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Rat d2 = dist2_point_point(rpoint(d.positions[i]), rpoint(d.positions[j]));
        if (c2 == 0 || d2 < c2) c2 = d2;
      }
  }
  geo.c_squared = c2;
  geo.has_c = has_c;

  if (mode == EmbedMode::Adaptive) {
    for (Coord S = 64; S <= (Coord(1) << 30); S <<= 1) {
      std::vector<RPoint> pos = scaled_positions(d.positions, S);
      for (Coord E = 4; E * 8 <= S; E <<= 1) {
        Rat md2 = min_delta_squared(pos, d.edges, Rat(E), 2);
        if (md2 == 0) continue;
        Rat delta = sqrt_lower(md2) / 4;
        if (delta < 2 || delta >= Rat(E)) continue;
        if (!separation_checks(pos, d.edges, 2, Rat(E), delta)) continue;
        geo.epsilon = E;
        geo.delta = delta;
        geo.grid_step = 1;
        geo.scale = S;
        geo.box_half = E;
        geo.positions.reserve(n);
        for (auto& p : d.positions) geo.positions.push_back(pt(p.x * S, p.y * S));
        PlanarDrawing out;
        out.positions = geo.positions;
        out.edges = d.edges;
        out.scale = S;
        return {out, geo};
      }
    }
    throw construction_error("no admissible separation scale found");
  }

  // Paper-faithful: fixed box half-side 1 on the scaled drawing, then a
  // uniform lattice refinement fine against the tube radius.
  if (c2 * 2 * n * n <= 1)
    throw construction_error("vertex-edge clearance below the guaranteed bound");
  Coord S = 1;
  while (c2 * S * S <= 16) {
    S <<= 1;
    if (S > (Coord(1) << 40)) throw construction_error("scale overflow");
  }
  std::vector<RPoint> pos = scaled_positions(d.positions, S);
  Rat md2 = min_delta_squared(pos, d.edges, 1, 2);
  if (md2 == 0) throw construction_error("neighbor inside a unit box after scaling");
  Rat delta_d = Rat(99, 100) * sqrt_lower(md2) / 10;
  if (delta_d <= 0) throw construction_error("degenerate tube radius");
  if (!separation_checks(pos, d.edges, 2, 1, delta_d))
    throw construction_error("separation failed at the guaranteed scale");

  BigInt m_big = numerator(Rat(100) / delta_d) / denominator(Rat(100) / delta_d);
  if (Rat(m_big) < Rat(100) / delta_d) m_big += 1;  // ceil
  if (m_big % 2 != 0) m_big += 1;
  if (m_big > (BigInt(1) << 40)) throw construction_error("lattice refinement overflow");
  Coord M = Coord(m_big);

  geo.epsilon = M;
  geo.delta = delta_d * M;
  geo.grid_step = Rat(1, M);
  geo.scale = Rat(S) * M;
  geo.box_half = M;
  geo.positions.reserve(n);
  for (auto& p : d.positions) {
    if (p.x > (Coord(1) << 44) / (S * M) + 1 || p.y > (Coord(1) << 44) / (S * M) + 1)
      throw construction_error("final lattice coordinates overflow");
    geo.positions.push_back(pt(p.x * S * M, p.y * S * M));
  }
  PlanarDrawing out;
  out.positions = geo.positions;
  out.edges = d.edges;
  out.scale = Rat(S) * M;
  return {out, geo};
}

LatticePath digitize_edge(const RPoint& a, const RPoint& b, const Rat& grid_step,
                          const Rat& tube_radius) {
  if (grid_step <= 0) throw invalid_input("grid step must be positive");
  if (2 * grid_step * grid_step > tube_radius * tube_radius)
    throw invalid_input("grid step too coarse for the tube radius");
  if (a.z != 0 || b.z != 0) throw invalid_input("digitize_edge is 2D");
  auto lattice = [&](const Rat& c) -> Coord {
    Rat q = c / grid_step;
    if (denominator(q) != 1) throw invalid_input("endpoint not on the lattice");
    BigInt v = numerator(q);
    if (v > (BigInt(1) << 60) || v < -(BigInt(1) << 60))
      throw invalid_input("lattice coordinate overflow");
    return Coord(v);
  };
  Coord x = lattice(a.x), y = lattice(a.y);
  Coord x1 = lattice(b.x), y1 = lattice(b.y);
  Coord ax = x1 > x ? x1 - x : x - x1, sx = x1 >= x ? 1 : -1;
  Coord ay = y1 > y ? y1 - y : y - y1, sy = y1 >= y ? 1 : -1;

  LatticePath path;
  path.points.push_back(pt(x, y));
  Coord ix = 0, iy = 0;
  while (ix < ax || iy < ay) {
    // Next lattice line the segment reaches: cross x = ix+1 at parameter
    // (ix+1)/ax, y = iy+1 at (iy+1)/ay; ties pass through a lattice point
    // on the segment and take the x step first.
    bool step_x;
    if (iy == ay)
      step_x = true;
    else if (ix == ax)
      step_x = false;
    else
      step_x = (ix + 1) * ay <= (iy + 1) * ax;
    if (step_x) {
      x += sx;
      ++ix;
    } else {
      y += sy;
      ++iy;
    }
    path.points.push_back(pt(x, y));
  }
  return path;
}

namespace {

// Rewrites the tail of `pts` (which ends at vp) so it enters vp's box
// through a side, runs along that side to the axis line through vp, and
// goes straight in. Box corners are stepped around.
void rebuild_tail(std::vector<GridPoint>& pts, const GridPoint& vp, Coord E) {
  int n = int(pts.size());
  int entry = -1;
  for (int i = 0; i < n; ++i)
    if (cheb_int(pts[i], vp, 2) <= E) {
      entry = i;
      break;
    }
  if (entry <= 0) throw construction_error("path has no proper box entry");
  for (int i = entry; i < n; ++i)
    if (cheb_int(pts[i], vp, 2) > E)
      throw construction_error("path leaves the end box again");

  std::vector<GridPoint> out(pts.begin(), pts.begin() + entry);
  GridPoint c = pts[entry];
  Coord dx = c.x - vp.x, dy = c.y - vp.y;
  if (std::abs(dx) == E && std::abs(dy) == E) {
    // Corner entry: slide one cell along the incoming direction's
    // complementary axis so the path enters through a side.
    GridPoint q = pts[entry - 1];
    GridPoint step = (q.x != c.x) ? pt(0, dy > 0 ? -1 : 1) : pt(dx > 0 ? -1 : 1, 0);
    out.push_back(pt(q.x + step.x, q.y + step.y));
    c = pt(c.x + step.x, c.y + step.y);
    dx = c.x - vp.x;
    dy = c.y - vp.y;
  }
  out.push_back(c);
  if (std::abs(dx) == E) {
    for (Coord yy = c.y; yy != vp.y;) {
      yy += (vp.y > yy) ? 1 : -1;
      out.push_back(pt(c.x, yy));
    }
    for (Coord xx = c.x; xx != vp.x;) {
      xx += (vp.x > xx) ? 1 : -1;
      out.push_back(pt(xx, vp.y));
    }
  } else if (std::abs(dy) == E) {
    for (Coord xx = c.x; xx != vp.x;) {
      xx += (vp.x > xx) ? 1 : -1;
      out.push_back(pt(xx, c.y));
    }
    for (Coord yy = c.y; yy != vp.y;) {
      yy += (vp.y > yy) ? 1 : -1;
      out.push_back(pt(vp.x, yy));
    }
  } else {
    throw construction_error("box entry is not on the boundary");
  }
  pts = std::move(out);
}

}  // namespace

std::vector<LatticePath> reroute_in_boxes(std::vector<LatticePath> paths,
                                          const ConstructionGeometry& geo) {
  if (paths.size() != geo.edges.size())
    throw invalid_input("one path per edge expected");
  Coord E = geo.box_half;
  int n = int(geo.positions.size());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    auto [u, v] = geo.edges[i];
    auto& pts = paths[i].points;
    if (pts.empty() || pts.front() != geo.positions[u] || pts.back() != geo.positions[v])
      throw invalid_input("path endpoints disagree with the layout");
    rebuild_tail(pts, geo.positions[v], E);
    std::reverse(pts.begin(), pts.end());
    rebuild_tail(pts, geo.positions[u], E);
    std::reverse(pts.begin(), pts.end());

    paths[i].validate(2);
    for (auto& p : pts) {
      for (int w = 0; w < n; ++w) {
        Coord ax = std::abs(p.x - geo.positions[w].x);
        Coord ay = std::abs(p.y - geo.positions[w].y);
        if (ax == E && ay == E)
          throw construction_error("path touches a box corner");
        if (std::max(ax, ay) <= E && w != u && w != v)
          throw construction_error("path crosses a foreign box");
      }
    }
  }
  return paths;
}

Embed2DResult embed2d(const Graph& g, EmbedMode mode, int threads) {
  PlanarDrawing base = straight_line_embed(g);
  auto [scaled, geo] = separation_geometry(base, mode);
  (void)scaled;

  std::vector<LatticePath> paths;
  paths.reserve(geo.edges.size());
  for (auto& [u, v] : geo.edges)
    paths.push_back(digitize_edge(rpoint(geo.positions[u]), rpoint(geo.positions[v]),
                                  1, geo.delta));
  paths = reroute_in_boxes(std::move(paths), geo);

  std::vector<GridPoint> free;
  for (auto& path : paths)
    free.insert(free.end(), path.points.begin(), path.points.end());
  Coord E = geo.box_half;
  for (auto& vp : geo.positions) {
    for (Coord t = -E; t <= E; ++t) {
      if (t != -E && t != E) {  // sides, corners excluded
        free.push_back(pt(vp.x - E, vp.y + t));
        free.push_back(pt(vp.x + E, vp.y + t));
        free.push_back(pt(vp.x + t, vp.y - E));
        free.push_back(pt(vp.x + t, vp.y + E));
      }
      free.push_back(pt(vp.x + t, vp.y));  // axis lines through the vertex
      free.push_back(pt(vp.x, vp.y + t));
    }
  }
  std::sort(free.begin(), free.end());
  free.erase(std::unique(free.begin(), free.end()), free.end());

  Box bounds{free.front(), free.front()};
  for (auto& p : free) {
    bounds.lo.x = std::min(bounds.lo.x, p.x);
    bounds.lo.y = std::min(bounds.lo.y, p.y);
    bounds.hi.x = std::max(bounds.hi.x, p.x);
    bounds.hi.y = std::max(bounds.hi.y, p.y);
  }
  bounds.lo.x -= 2;
  bounds.lo.y -= 2;
  bounds.hi.x += 2;
  bounds.hi.y += 2;

  Embed2DResult result;
  result.geometry = geo;
  result.edge_paths = paths;
  result.rep.dim = 2;
  result.rep.default_occ = Occupancy::Blocked;
  result.rep.vertices = geo.positions;
  result.rep.bounds = bounds;
  std::set<GridPoint> vertex_set(geo.positions.begin(), geo.positions.end());
  for (auto& p : free)
    if (!vertex_set.count(p)) result.rep.cells.push_back(p);
  result.rep.normalize();
  result.rep.validate();

  VerificationReport report = verify(result.rep, g, threads);
  if (!report.matches)
    throw construction_error("embedding audit failed: visibility graph mismatch");
  return result;
}

GbgReport gbg_audit(const Representation& rep, const ConstructionGeometry& geo,
                    const Graph& g) {
  int n = g.n();
  Rat tube2 = geo.delta * geo.delta;
  for (auto& [u, v] : g.edges()) {
    GbgReport r;
    r.ok = false;
    r.u = u;
    r.v = v;
    auto w = witness_path(rep, u, v);
    if (!w) {
      r.reason = "edge has no witness path";
      return r;
    }
    r.path = *w;
    const auto& pts = w->points;
    std::size_t i = 0;
    if (!geo.in_box(pts[0], u)) {
      r.reason = "witness starts outside its box";
      return r;
    }
    while (i < pts.size() && geo.in_box(pts[i], u)) ++i;
    while (i < pts.size() && !geo.in_box(pts[i], v)) {
      const GridPoint& p = pts[i];
      for (int x = 0; x < n; ++x)
        if (geo.in_box(p, x)) {
          r.reason = "witness re-enters a box between endpoints";
          return r;
        }
      if (!frac_le(seg_dist2_frac(p, geo.positions[u], geo.positions[v]), tube2)) {
        r.reason = "witness leaves its tube";
        return r;
      }
      for (auto& [a, b] : g.edges()) {
        if (a == u && b == v) continue;
        if (frac_le(seg_dist2_frac(p, geo.positions[a], geo.positions[b]), tube2)) {
          r.reason = "witness enters another edge's tube";
          return r;
        }
      }
      ++i;
    }
    for (; i < pts.size(); ++i)
      if (!geo.in_box(pts[i], v)) {
        r.reason = "witness leaves the end box";
        return r;
      }
  }
  return GbgReport{};
}

}  // namespace gridobs
