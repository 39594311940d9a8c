#include "gridobs/strip.hpp"

#include <algorithm>
#include <cassert>
#include <limits>
#include <set>

namespace gridobs {

namespace {

using Mask = std::uint64_t;

void check_strip_input(const Representation& rep, int b) {
  if (rep.dim != 2) throw invalid_input("strip compression needs a 2D representation");
  if (b < 1 || b > 63) throw invalid_input("strip height out of range");
  rep.validate();
  if (rep.n() == 0) throw invalid_input("strip has no vertices");
  auto in_rows = [&](const GridPoint& p) { return p.y >= 0 && p.y < b && p.z == 0; };
  for (auto& v : rep.vertices)
    if (!in_rows(v)) throw invalid_input("vertex outside the strip rows");
  for (auto& c : rep.cells)
    if (!in_rows(c)) throw invalid_input("cell outside the strip rows");
}

std::vector<Coord> vertex_columns(const Representation& rep) {
  std::vector<Coord> xs;
  xs.reserve(rep.vertices.size());
  for (auto& v : rep.vertices) xs.push_back(v.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

}  // namespace

StripSection make_section(const Representation& rep, int b, Coord left, Coord right) {
  if (right <= left) throw invalid_input("bad section bounds");
  std::set<GridPoint> vset(rep.vertices.begin(), rep.vertices.end());
  StripSection s;
  s.left_column = left;
  s.right_column = right;
  s.height = b;
  s.blocked.assign(std::size_t(right - left + 1), 0);
  s.obstacle.assign(std::size_t(right - left + 1), 0);
  for (Coord x = left; x <= right; ++x)
    for (int y = 0; y < b; ++y) {
      GridPoint p = pt(x, y);
      bool obs = rep.is_obstacle(p);
      if (obs) s.obstacle[std::size_t(x - left)] |= Mask(1) << y;
      if (obs || vset.count(p)) s.blocked[std::size_t(x - left)] |= Mask(1) << y;
    }
  return s;
}

std::optional<std::pair<LatticePath, LatticePath>> envelopes(const StripSection& s,
                                                             int i, int j) {
  const int b = s.height;
  if (i < 0 || i >= b || j < 0 || j >= b) throw invalid_input("envelope row out of range");
  const std::size_t C = s.blocked.size();
  const Mask rows = (b == 63) ? ~Mask(0) >> 1 : (Mask(1) << b) - 1;
  const int dir = (j > i) - (j < i);

  // Passability per column: interior points must avoid obstacles and
  // vertices; the two endpoints only need to avoid obstacles.
  std::vector<Mask> allow(C);
  for (std::size_t c = 0; c < C; ++c) allow[c] = ~s.blocked[c] & rows;
  if (!(s.obstacle[0] >> i & 1)) allow[0] |= Mask(1) << i;
  if (!(s.obstacle[C - 1] >> j & 1)) allow[C - 1] |= Mask(1) << j;

  auto spread = [&](Mask m, Mask a, int d) {
    if (d == 0) return m;
    for (int step = 0; step < b; ++step) m |= (d > 0 ? m << 1 : m >> 1) & a;
    return m;
  };

  std::vector<Mask> reach(C);
  reach[0] = spread(Mask(1) << i & allow[0], allow[0], dir);
  for (std::size_t c = 1; c < C; ++c)
    reach[c] = spread(reach[c - 1] & allow[c], allow[c], dir);
  if (!(reach[C - 1] >> j & 1)) return std::nullopt;

  // Co-reachability toward (right, j); vertical spread runs opposite.
  std::vector<Mask> R(C);
  Mask back = spread(Mask(1) << j & allow[C - 1], allow[C - 1], -dir);
  R[C - 1] = reach[C - 1] & back;
  for (std::size_t c = C - 1; c-- > 0;) {
    back = spread(back & allow[c], allow[c], -dir);
    R[c] = reach[c] & back;
  }

  auto greedy = [&](bool prefer_y) {
    LatticePath path;
    std::size_t c = 0;
    int y = i;
    path.points.push_back(pt(s.left_column, y));
    while (c + 1 < C || y != j) {
      bool can_y = dir != 0 && y != j && (R[c] >> (y + dir) & 1);
      bool can_x = c + 1 < C && (R[c + 1] >> y & 1);
      assert(can_y || can_x);
      if (can_y && (prefer_y || !can_x))
        y += dir;
      else
        ++c;
      path.points.push_back(pt(s.left_column + Coord(c), y));
    }
    return path;
  };
  // Upper = pointwise-max path: rise as early as possible when climbing,
  // descend as late as possible when falling. Lower is the mirror image.
  return std::make_pair(greedy(dir > 0), greedy(dir < 0));
}

Representation compress_envelopes(const Representation& strip_rep, int b) {
  check_strip_input(strip_rep, b);
  std::vector<Coord> xs = vertex_columns(strip_rep);

  std::set<GridPoint> free;
  for (Coord xc : xs)
    for (int y = 0; y < b; ++y)
      if (!strip_rep.is_obstacle(pt(xc, y))) free.insert(pt(xc, y));

  for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
    StripSection s = make_section(strip_rep, b, xs[k], xs[k + 1]);
    for (int i = 0; i < b; ++i)
      for (int j = 0; j < b; ++j)
        if (auto env = envelopes(s, i, j)) {
          for (auto& p : env->first.points) free.insert(p);
          for (auto& p : env->second.points) free.insert(p);
        }
  }

  Representation out;
  out.dim = 2;
  out.default_occ = Occupancy::Blocked;
  out.vertices = strip_rep.vertices;
  out.bounds = Box{pt(xs.front(), 0), pt(xs.back(), b - 1)};
  std::set<GridPoint> vset(out.vertices.begin(), out.vertices.end());
  for (auto& p : free)
    if (!vset.count(p)) out.cells.push_back(p);
  out.validate();
  return out;
}

Representation compress_bends(const Representation& embd_prime, int b) {
  check_strip_input(embd_prime, b);
  std::vector<Coord> xs = vertex_columns(embd_prime);
  std::set<Coord> vcols(xs.begin(), xs.end());

  auto col_mask = [&](Coord x) {
    Mask m = 0;
    for (int y = 0; y < b; ++y)
      if (!embd_prime.is_obstacle(pt(x, y))) m |= Mask(1) << y;
    return m;
  };

  // Every maximal run of identical interior columns carries only
  // horizontal traffic, so one middle column stands in for the whole run
  // (the bounding bend/vertex columns stay); renumber what survives.
  std::vector<std::pair<Coord, Mask>> kept;  // old column, free rows
  Mask run_mask = 0;
  bool in_run = false;
  for (Coord x = xs.front(); x <= xs.back(); ++x) {
    Mask m = col_mask(x);
    if (vcols.count(x)) {
      in_run = false;
      kept.emplace_back(x, m);
      continue;
    }
    if (in_run && m == run_mask) continue;
    run_mask = m;
    in_run = true;
    kept.emplace_back(x, m);
  }

  Representation out;
  out.dim = 2;
  out.default_occ = Occupancy::Blocked;
  Coord base = xs.front();
  std::vector<std::pair<Coord, Coord>> remap;  // old -> new, vertex columns only
  for (std::size_t k = 0; k < kept.size(); ++k) {
    auto [old_x, m] = kept[k];
    Coord new_x = base + Coord(k);
    if (vcols.count(old_x)) remap.emplace_back(old_x, new_x);
    for (int y = 0; y < b; ++y)
      if (m >> y & 1) out.cells.push_back(pt(new_x, y));
  }
  out.bounds = Box{pt(base, 0), pt(base + Coord(kept.size()) - 1, b - 1)};
  for (auto& v : embd_prime.vertices) {
    auto it = std::lower_bound(remap.begin(), remap.end(),
                               std::make_pair(v.x, std::numeric_limits<Coord>::min()));
    assert(it != remap.end() && it->first == v.x);
    out.vertices.push_back(pt(it->second, v.y));
  }
  std::set<GridPoint> vset(out.vertices.begin(), out.vertices.end());
  std::erase_if(out.cells, [&](const GridPoint& p) { return vset.count(p) != 0; });
  out.normalize();
  out.validate();
  return out;
}

Representation compress_strip(const Representation& strip_rep, int b) {
  return compress_bends(compress_envelopes(strip_rep, b), b);
}

Representation transpose(const Representation& rep) {
  if (rep.dim != 2) throw invalid_input("transpose needs a 2D representation");
  Representation out = rep;
  auto flip = [](GridPoint& p) { std::swap(p.x, p.y); };
  for (auto& v : out.vertices) flip(v);
  for (auto& c : out.cells) flip(c);
  if (out.bounds) {
    flip(out.bounds->lo);
    flip(out.bounds->hi);
  }
  out.normalize();
  return out;
}

}  // namespace gridobs
