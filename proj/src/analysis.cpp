#include "gridobs/analysis.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>

#include "gridobs/visibility.hpp"

namespace gridobs {

ComponentDecomposition component_obstacles(const Representation& rep) {
  rep.validate();
  std::set<GridPoint> obstacles;
  if (rep.default_occ == Occupancy::Free) {
    obstacles.insert(rep.cells.begin(), rep.cells.end());
  } else {
    const Box& b = *rep.bounds;
    if (b.volume(rep.dim) > (Coord(1) << 26))
      throw invalid_input("component_obstacles: bounds too large to enumerate");
    GridPoint p = b.lo;
    for (p.x = b.lo.x; p.x <= b.hi.x; ++p.x)
      for (p.y = b.lo.y; p.y <= b.hi.y; ++p.y)
        for (p.z = b.lo.z; p.z <= (rep.dim == 3 ? b.hi.z : b.lo.z); ++p.z)
          if (rep.is_obstacle(p)) obstacles.insert(p);
  }

  ComponentDecomposition out;
  while (!obstacles.empty()) {
    std::vector<GridPoint> comp, stack{*obstacles.begin()};
    obstacles.erase(obstacles.begin());
    while (!stack.empty()) {
      GridPoint p = stack.back();
      stack.pop_back();
      comp.push_back(p);
      for (int axis = 0; axis < rep.dim; ++axis)
        for (Coord d : {Coord(-1), Coord(1)}) {
          GridPoint q = p;
          q[axis] += d;
          if (auto it = obstacles.find(q); it != obstacles.end()) {
            obstacles.erase(it);
            stack.push_back(q);
          }
        }
    }
    std::sort(comp.begin(), comp.end());
    out.components.push_back(std::move(comp));
  }
  std::sort(out.components.begin(), out.components.end());
  out.count = int(out.components.size());
  return out;
}

namespace {

// Window-confined search state: cells indexed y*w+x, sets as bitmasks.
struct Window {
  int w, h;
  const Graph* g;
  std::vector<int> place;  // vertex -> cell
  std::uint64_t vmask = 0;

  GridPoint cell_pt(int c) const { return pt(c % w, c / w); }

  // One monotone passable path u->v as a DP over the bounding box;
  // optionally reports the interior cells of the reconstructed path.
  bool visible(std::uint64_t obst, int u, int v, std::vector<int>* interior) const {
    GridPoint a = cell_pt(place[std::size_t(u)]), b = cell_pt(place[std::size_t(v)]);
    int sx = a.x <= b.x ? 1 : -1, sy = a.y <= b.y ? 1 : -1;
    int nx = int(std::abs(b.x - a.x)) + 1, ny = int(std::abs(b.y - a.y)) + 1;
    auto cell = [&](int i, int j) {
      return int(a.y + Coord(j) * sy) * w + int(a.x + Coord(i) * sx);
    };
    auto passable = [&](int i, int j) {
      int c = cell(i, j);
      if ((i == 0 && j == 0) || (i == nx - 1 && j == ny - 1)) return true;
      return !(obst >> c & 1) && !(vmask >> c & 1);
    };
    std::array<std::array<bool, 8>, 8> reach{};
    for (int i = 0; i < nx; ++i)
      for (int j = 0; j < ny; ++j)
        reach[std::size_t(i)][std::size_t(j)] =
            passable(i, j) &&
            ((i == 0 && j == 0) || (i > 0 && reach[std::size_t(i - 1)][std::size_t(j)]) ||
             (j > 0 && reach[std::size_t(i)][std::size_t(j - 1)]));
    if (!reach[std::size_t(nx - 1)][std::size_t(ny - 1)]) return false;
    if (interior) {
      interior->clear();
      int i = nx - 1, j = ny - 1;
      while (i != 0 || j != 0) {
        if (i != nx - 1 || j != ny - 1) interior->push_back(cell(i, j));
        if (i > 0 && reach[std::size_t(i - 1)][std::size_t(j)])
          --i;
        else
          --j;
      }
    }
    return true;
  }

  bool edges_visible(std::uint64_t obst) const {
    for (auto& [u, v] : g->edges())
      if (!visible(obst, u, v, nullptr)) return false;
    return true;
  }

  // Block every visible non-edge with at most `depth` more obstacles.
  bool solve(std::uint64_t obst, int depth) {
    std::vector<int> interior;
    for (int u = 0; u < g->n(); ++u)
      for (int v = u + 1; v < g->n(); ++v) {
        if (g->has_edge(u, v) || !visible(obst, u, v, &interior)) continue;
        if (depth == 0) return false;
        // any blocking set must hit this path's interior
        for (int c : interior) {
          std::uint64_t next = obst | std::uint64_t(1) << c;
          if (edges_visible(next) && solve(next, depth - 1)) return true;
        }
        return false;
      }
    return true;
  }
};

std::vector<std::vector<int>> automorphisms(const Graph& g) {
  std::vector<int> perm(std::size_t(g.n()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (auto& [u, v] : g.edges())
      if (!g.has_edge(perm[std::size_t(u)], perm[std::size_t(v)])) {
        ok = false;
        break;
      }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<std::vector<int>> window_symmetries(int w, int h) {
  std::vector<std::vector<int>> out;
  auto add = [&](auto&& f) {
    std::vector<int> m(std::size_t(w * h));
    for (int x = 0; x < w; ++x)
      for (int y = 0; y < h; ++y) {
        auto [tx, ty] = f(x, y);
        m[std::size_t(y * w + x)] = ty * w + tx;
      }
    out.push_back(std::move(m));
  };
  for (int fx = 0; fx < 2; ++fx)
    for (int fy = 0; fy < 2; ++fy) {
      add([&](int x, int y) {
        return std::pair{fx ? w - 1 - x : x, fy ? h - 1 - y : y};
      });
      if (w == h)
        add([&](int x, int y) {
          int tx = y, ty = x;
          return std::pair{fx ? w - 1 - tx : tx, fy ? h - 1 - ty : ty};
        });
    }
  return out;
}

}  // namespace

std::optional<int> obsnum_exact(const Graph& g, int window_w, int window_h,
                                int obstacle_cap) {
  if (g.n() < 1 || g.n() > 5) throw invalid_input("obsnum_exact: n must be 1..5");
  if (window_w < 1 || window_h < 1 || window_w > 7 || window_h > 7)
    throw invalid_input("obsnum_exact: window at most 7x7");
  if (obstacle_cap < 0 || obstacle_cap > 6)
    throw invalid_input("obsnum_exact: obstacle cap at most 6");

  const int n = g.n(), cells = window_w * window_h;
  auto auts = automorphisms(g);
  auto syms = window_symmetries(window_w, window_h);
  Window win{window_w, window_h, &g, std::vector<int>(std::size_t(n)), 0};

  int best = obstacle_cap + 1;

  auto canonical = [&]() {
    for (auto& sym : syms)
      for (auto& aut : auts) {
        for (int i = 0; i < n; ++i) {
          int qi = sym[std::size_t(win.place[std::size_t(aut[std::size_t(i)])])];
          if (qi < win.place[std::size_t(i)]) return false;
          if (qi > win.place[std::size_t(i)]) break;
        }
      }
    return true;
  };

  // vertex 0 may be pinned to one cell per symmetry orbit
  std::vector<int> first_cells;
  for (int c = 0; c < cells; ++c)
    if (std::all_of(syms.begin(), syms.end(),
                    [&](const std::vector<int>& s) { return s[std::size_t(c)] >= c; }))
      first_cells.push_back(c);

  auto try_placement = [&]() {
    if (!canonical()) return;
    if (!win.edges_visible(0)) return;  // obstacles cannot create edges
    while (best > 0 && win.solve(0, best - 1)) --best;
  };

  std::vector<int> all_cells(static_cast<std::size_t>(cells));
  std::iota(all_cells.begin(), all_cells.end(), 0);

  std::uint64_t used = 0;
  auto rec = [&](auto&& self, int v) -> void {
    if (best == 0) return;
    if (v == n) {
      try_placement();
      return;
    }
    for (int c : v == 0 ? first_cells : all_cells) {
      if (used >> c & 1) continue;
      used |= std::uint64_t(1) << c;
      win.vmask = used;
      win.place[std::size_t(v)] = c;
      self(self, v + 1);
      used &= ~(std::uint64_t(1) << c);
    }
    win.vmask = used;
  };
  rec(rec, 0);

  if (best > obstacle_cap) return std::nullopt;
  return best;
}

bool crossing_c4_check(const Representation& rep, const Graph& g) {
  if (rep.dim != 2) throw invalid_input("crossing_c4_check: 2D only");
  if (!verify(rep, g).matches)
    throw invalid_input("crossing_c4_check: representation does not verify");

  struct W {
    int u, v;          // oriented so position[u] <= position[v] lexicographically
    int dy_sign;       // of v relative to u (dx >= 0 by orientation)
    std::set<GridPoint> points;
    std::vector<GridPoint> path;  // u -> v
  };
  std::vector<W> ws;
  for (auto [u, v] : g.edges()) {
    if (rep.vertices[std::size_t(v)] < rep.vertices[std::size_t(u)]) std::swap(u, v);
    auto wp = witness_path(rep, u, v);
    if (!wp) throw construction_error("crossing_c4_check: missing witness");
    Coord dy = rep.vertices[std::size_t(v)].y - rep.vertices[std::size_t(u)].y;
    ws.push_back(W{u, v, (dy > 0) - (dy < 0),
                   std::set<GridPoint>(wp->points.begin(), wp->points.end()),
                   wp->points});
  }

  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = i + 1; j < ws.size(); ++j) {
      const W& a = ws[i];
      const W& b = ws[j];
      if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) continue;
      bool both_inc = a.dy_sign >= 0 && b.dy_sign >= 0;
      bool both_dec = a.dy_sign <= 0 && b.dy_sign <= 0;
      if (!both_inc && !both_dec) continue;
      bool share = std::any_of(a.path.begin(), a.path.end(),
                               [&](const GridPoint& p) { return b.points.count(p) != 0; });
      if (!share) continue;
      // splice at the shared point: the cross pairs are visible
      if (!g.has_edge(a.u, b.v) || !g.has_edge(b.u, a.v)) return false;
    }
  return true;
}

bool has_c4(const Graph& g) {
  for (int a = 0; a < g.n(); ++a)
    for (int b = a + 1; b < g.n(); ++b)
      for (int c = b + 1; c < g.n(); ++c)
        for (int d = c + 1; d < g.n(); ++d) {
          auto cyc = [&](int p, int q, int r, int s) {
            return g.has_edge(p, q) && g.has_edge(q, r) && g.has_edge(r, s) &&
                   g.has_edge(s, p);
          };
          if (cyc(a, b, c, d) || cyc(a, b, d, c) || cyc(a, c, b, d)) return true;
        }
  return false;
}

}  // namespace gridobs
