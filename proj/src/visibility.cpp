#include "gridobs/visibility.hpp"

#include <algorithm>
#include <cstdlib>
#include <iterator>
#include <thread>

#include "gridobs/kernels.hpp"

namespace gridobs {

namespace {

constexpr Coord kDenseCellCap = Coord(1) << 28;
constexpr Coord kOracleCap = 18;

// Box-volume threshold for switching from the dense sweep to the sparse
// free-cell scan. Overridable so tests can force the sparse engine onto
// small instances.
Coord dense_cap() {
  if (const char* e = std::getenv("GRIDOBS_DENSE_CAP")) {
    Coord v = std::strtoll(e, nullptr, 10);
    if (v > 0) return v;
  }
  return kDenseCellCap;
}

struct Query {
  const Representation* rep;
  int u, v;
  GridPoint pu, pv;
  int dim;
  GridPoint lo, hi;
  int sgn[3];   // step direction per axis (0 for equal coordinates)
  Coord ext[3]; // bounding-box extent per axis

  Query(const Representation& r, int uu, int vv) : rep(&r), u(uu), v(vv) {
    if (uu < 0 || vv < 0 || uu >= r.n() || vv >= r.n())
      throw invalid_input("unknown vertex label");
    if (uu == vv) throw invalid_input("u == v");
    pu = r.vertices[uu];
    pv = r.vertices[vv];
    dim = r.dim;
    for (int a = 0; a < 3; ++a) {
      Coord d = pv[a] - pu[a];
      sgn[a] = d > 0 ? 1 : d < 0 ? -1 : 0;
      ext[a] = (d > 0 ? d : -d) + 1;
      lo[a] = std::min(pu[a], pv[a]);
      hi[a] = std::max(pu[a], pv[a]);
    }
  }

  Coord volume() const { return ext[0] * ext[1] * ext[2]; }
  bool in_box(const GridPoint& p) const {
    for (int a = 0; a < dim; ++a)
      if (p[a] < lo[a] || p[a] > hi[a]) return false;
    return true;
  }
  // Scan coordinates: start cell at the origin, propagation along +axis.
  // reversed = true puts pv at the origin instead (co-reachability scan).
  GridPoint to_scan(const GridPoint& p, bool reversed) const {
    GridPoint t;
    for (int a = 0; a < 3; ++a) {
      Coord c = (p[a] - pu[a]) * (sgn[a] == 0 ? 1 : sgn[a]);
      t[a] = reversed ? ext[a] - 1 - c : c;
    }
    return t;
  }
  bool is_third_vertex(const GridPoint& p) const {
    const auto& vs = rep->vertices;
    for (int i = 0; i < int(vs.size()); ++i)
      if (i != u && i != v && vs[i] == p) return true;
    return false;
  }
  bool passable(const GridPoint& p) const {
    if (p == pu || p == pv) return true;
    return !rep->is_obstacle(p) && !is_third_vertex(p);
  }
};

// ---------------------------------------------------------------------------
// Dense engine: bit-packed reachability sweep over the whole bounding box.

struct DenseReach {
  Coord W, H, D;
  std::size_t words;
  std::vector<std::uint64_t> bits;  // (y + H*z) rows of `words` words

  bool get(Coord x, Coord y, Coord z) const {
    const std::uint64_t* row = bits.data() + std::size_t(y + H * z) * words;
    return (row[x >> 6] >> (x & 63)) & 1;
  }
};

DenseReach dense_reach(const Query& q, bool reversed) {
  DenseReach r;
  r.W = q.ext[0];
  r.H = q.ext[1];
  r.D = q.dim == 3 ? q.ext[2] : 1;
  r.words = std::size_t((r.W + 63) / 64);
  std::size_t rows = std::size_t(r.H * r.D);

  // Passable masks.
  std::vector<std::uint64_t> pass(rows * r.words, 0);
  auto set_bit = [&](const GridPoint& t, bool on) {
    std::uint64_t* row = pass.data() + std::size_t(t.y + r.H * t.z) * r.words;
    std::uint64_t m = std::uint64_t(1) << (t.x & 63);
    if (on) row[t.x >> 6] |= m;
    else row[t.x >> 6] &= ~m;
  };
  const auto& rep = *q.rep;
  if (rep.default_occ == Occupancy::Free) {
    for (std::size_t row = 0; row < rows; ++row) {
      std::uint64_t* p = pass.data() + row * r.words;
      for (std::size_t w = 0; w < r.words; ++w) p[w] = ~std::uint64_t(0);
      Coord tail = r.W & 63;
      if (tail) p[r.words - 1] = (std::uint64_t(1) << tail) - 1;
    }
    for (const auto& c : rep.cells)
      if (q.in_box(c)) set_bit(q.to_scan(c, reversed), false);
  } else {
    auto it = std::lower_bound(rep.cells.begin(), rep.cells.end(),
                               GridPoint{q.lo.x, INT64_MIN, INT64_MIN});
    for (; it != rep.cells.end() && it->x <= q.hi.x; ++it)
      if (q.in_box(*it)) set_bit(q.to_scan(*it, reversed), true);
    set_bit(q.to_scan(q.pu, reversed), true);
    set_bit(q.to_scan(q.pv, reversed), true);
  }
  // Third vertices always block.
  for (int i = 0; i < int(rep.vertices.size()); ++i)
    if (i != q.u && i != q.v && q.in_box(rep.vertices[i]))
      set_bit(q.to_scan(rep.vertices[i], reversed), false);

  // Sweep.
  const RowKernel& k = active_row_kernel();
  r.bits.assign(rows * r.words, 0);
  std::vector<std::uint64_t> seed(r.words);
  for (Coord z = 0; z < r.D; ++z) {
    for (Coord y = 0; y < r.H; ++y) {
      std::size_t row = std::size_t(y + r.H * z);
      for (std::size_t w = 0; w < r.words; ++w) {
        std::uint64_t s = 0;
        if (y > 0) s |= r.bits[(row - 1) * r.words + w];
        if (z > 0) s |= r.bits[(row - std::size_t(r.H)) * r.words + w];
        seed[w] = s;
      }
      if (y == 0 && z == 0) seed[0] |= 1;  // start cell
      k.smear(pass.data() + row * r.words, seed.data(), r.bits.data() + row * r.words,
              r.words);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Sparse engine: reachability restricted to the free-cell set of a
// default=blocked representation.

std::vector<GridPoint> sparse_candidates(const Query& q, bool reversed) {
  const auto& rep = *q.rep;
  std::vector<GridPoint> pts;
  auto it = std::lower_bound(rep.cells.begin(), rep.cells.end(),
                             GridPoint{q.lo.x, INT64_MIN, INT64_MIN});
  for (; it != rep.cells.end() && it->x <= q.hi.x; ++it)
    if (q.in_box(*it)) pts.push_back(q.to_scan(*it, reversed));
  pts.push_back(q.to_scan(q.pu, reversed));
  pts.push_back(q.to_scan(q.pv, reversed));
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  // Remove blocking vertices (they are free cells for other queries).
  for (int i = 0; i < int(rep.vertices.size()); ++i) {
    if (i == q.u || i == q.v) continue;
    const auto& p = rep.vertices[i];
    if (!q.in_box(p)) continue;
    auto t = q.to_scan(p, reversed);
    auto pos = std::lower_bound(pts.begin(), pts.end(), t);
    if (pos != pts.end() && *pos == t) pts.erase(pos);
  }
  return pts;
}

// Reachable subset (in scan coordinates) of the candidate set.
std::vector<GridPoint> sparse_reach(const Query& q, bool reversed) {
  std::vector<GridPoint> pts = sparse_candidates(q, reversed);
  std::vector<char> flag(pts.size(), 0);
  auto index_of = [&](const GridPoint& t) -> std::ptrdiff_t {
    auto pos = std::lower_bound(pts.begin(), pts.end(), t);
    if (pos == pts.end() || *pos != t) return -1;
    return pos - pts.begin();
  };
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const GridPoint& t = pts[i];
    if (t.x == 0 && t.y == 0 && t.z == 0) {
      flag[i] = 1;
      continue;
    }
    for (int a = 0; a < q.dim && !flag[i]; ++a) {
      if (t[a] == 0) continue;
      GridPoint pred = t;
      pred[a] -= 1;
      auto j = index_of(pred);
      if (j >= 0 && flag[j]) flag[i] = 1;
    }
  }
  std::vector<GridPoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (flag[i]) out.push_back(pts[i]);
  return out;
}

bool use_dense(const Query& q) {
  if (q.volume() <= dense_cap()) return true;
  if (q.rep->default_occ == Occupancy::Blocked) return false;
  throw construction_error(
      "visibility query box too large to rasterize for a default=free representation");
}

bool visible_impl(const Query& q) {
  if (l1(q.pu, q.pv) == 1) return true;
  if (use_dense(q)) {
    DenseReach r = dense_reach(q, false);
    auto t = q.to_scan(q.pv, false);
    return r.get(t.x, t.y, t.z);
  }
  auto reach = sparse_reach(q, false);
  auto t = q.to_scan(q.pv, false);
  return std::binary_search(reach.begin(), reach.end(), t);
}

}  // namespace

bool is_visible(const Representation& rep, int u, int v) {
  return visible_impl(Query(rep, u, v));
}

bool brute_force_visible(const Representation& rep, int u, int v) {
  Query q(rep, u, v);
  if (l1(q.pu, q.pv) > kOracleCap)
    throw invalid_input("brute-force oracle distance cap exceeded");
  // Depth-first enumeration of every monotone step sequence.
  std::vector<GridPoint> stack{q.pu};
  auto dfs = [&](auto&& self, const GridPoint& cur) -> bool {
    if (cur == q.pv) return true;
    for (int a = 0; a < q.dim; ++a) {
      if (cur[a] == q.pv[a]) continue;
      GridPoint nxt = cur;
      nxt[a] += q.sgn[a];
      if (nxt == q.pv || q.passable(nxt)) {
        if (self(self, nxt)) return true;
      }
    }
    return false;
  };
  return dfs(dfs, q.pu);
}

std::uint64_t brute_force_path_count(const GridPoint& a, const GridPoint& b) {
  if (l1(a, b) > kOracleCap) throw invalid_input("brute-force oracle distance cap exceeded");
  int sgn[3];
  for (int i = 0; i < 3; ++i) {
    Coord d = b[i] - a[i];
    sgn[i] = d > 0 ? 1 : d < 0 ? -1 : 0;
  }
  auto dfs = [&](auto&& self, const GridPoint& cur) -> std::uint64_t {
    if (cur == b) return 1;
    std::uint64_t total = 0;
    for (int i = 0; i < 3; ++i) {
      if (cur[i] == b[i]) continue;
      GridPoint nxt = cur;
      nxt[i] += sgn[i];
      total += self(self, nxt);
    }
    return total;
  };
  return dfs(dfs, a);
}

Graph visibility_graph(const Representation& rep, int threads) {
  rep.validate();
  int n = rep.n();
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  std::vector<char> vis(pairs.size(), 0);
  if (threads <= 0) threads = int(std::thread::hardware_concurrency());
  if (threads < 1) threads = 1;
  threads = std::min<int>(threads, int(pairs.size()) == 0 ? 1 : int(pairs.size()));
  auto work = [&](int t) {
    for (std::size_t i = t; i < pairs.size(); i += std::size_t(threads))
      vis[i] = is_visible(rep, pairs[i].first, pairs[i].second);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < pairs.size(); ++i)
    if (vis[i]) edges.push_back(pairs[i]);
  return Graph(n, std::move(edges));
}

VerificationReport verify(const Representation& rep, const Graph& g, int threads) {
  if (rep.n() != g.n()) throw invalid_input("vertex-count mismatch");
  Graph seen = visibility_graph(rep, threads);
  VerificationReport r;
  std::set_difference(g.edges().begin(), g.edges().end(), seen.edges().begin(),
                      seen.edges().end(), std::back_inserter(r.missing_edges));
  std::set_difference(seen.edges().begin(), seen.edges().end(), g.edges().begin(),
                      g.edges().end(), std::back_inserter(r.extra_edges));
  r.matches = r.missing_edges.empty() && r.extra_edges.empty();
  return r;
}

std::optional<LatticePath> witness_path(const Representation& rep, int u, int v) {
  Query q(rep, u, v);
  bool dense = use_dense(q);

  std::optional<DenseReach> co_dense;
  std::vector<GridPoint> co_sparse;
  auto co_reachable = [&](const GridPoint& p) {
    GridPoint t = q.to_scan(p, true);
    if (co_dense) return co_dense->get(t.x, t.y, t.z);
    return std::binary_search(co_sparse.begin(), co_sparse.end(), t);
  };
  if (dense) co_dense = dense_reach(q, true);
  else co_sparse = sparse_reach(q, true);
  if (!co_reachable(q.pu)) return std::nullopt;

  LatticePath path;
  GridPoint cur = q.pu;
  path.points.push_back(cur);
  while (cur != q.pv) {
    bool stepped = false;
    for (int a = 0; a < q.dim && !stepped; ++a) {
      if (cur[a] == q.pv[a]) continue;
      GridPoint nxt = cur;
      nxt[a] += q.sgn[a];
      if (co_reachable(nxt)) {
        path.points.push_back(nxt);
        cur = nxt;
        stepped = true;
      }
    }
    if (!stepped) throw construction_error("witness extraction wedged");  // unreachable
  }
  return path;
}

}  // namespace gridobs
