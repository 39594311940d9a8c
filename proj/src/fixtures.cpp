#include "gridobs/fixtures.hpp"

#include <algorithm>
#include <set>

#include "gridobs/visibility.hpp"

namespace gridobs {

namespace {

Fixture checked(Graph g, Representation rep) {
  rep.normalize();
  rep.validate();
  if (!verify(rep, g).matches)
    throw construction_error("fixture layout does not realize its graph");
  return Fixture{std::move(g), std::move(rep)};
}

Representation free_rep(std::vector<GridPoint> vertices, std::vector<GridPoint> cells) {
  Representation rep;
  rep.vertices = std::move(vertices);
  rep.cells = std::move(cells);
  return rep;
}

}  // namespace

Fixture fixture_path(int n) {
  if (n < 1) throw invalid_input("path: n >= 1");
  std::vector<GridPoint> v;
  for (int i = 0; i < n; ++i) v.push_back(pt(i, 0));
  return checked(Graph::path(n), free_rep(std::move(v), {}));
}

Fixture fixture_complete(int n) {
  if (n < 1) throw invalid_input("complete: n >= 1");
  std::vector<GridPoint> v;
  for (int i = 0; i < n; ++i) v.push_back(pt(i, i));
  return checked(Graph::complete(n), free_rep(std::move(v), {}));
}

Fixture fixture_empty(int n) {
  if (n < 1) throw invalid_input("empty: n >= 1");
  std::vector<GridPoint> v, o;
  for (int i = 0; i < n; ++i) v.push_back(pt(2 * i, 0));
  for (int i = 0; i + 1 < n; ++i) o.push_back(pt(2 * i + 1, 0));
  return checked(Graph::empty(n), free_rep(std::move(v), std::move(o)));
}

Fixture fixture_matching(int k) {
  if (k < 1) throw invalid_input("matching: k >= 1");
  std::vector<GridPoint> v, o;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    v.push_back(pt(3 * i, 0));
    v.push_back(pt(3 * i + 1, 0));
    edges.emplace_back(2 * i, 2 * i + 1);
    if (i + 1 < k) o.push_back(pt(3 * i + 2, 0));
  }
  return checked(Graph(2 * k, std::move(edges)), free_rep(std::move(v), std::move(o)));
}

Fixture fixture_cycle(int n) {
  if (n < 7) throw invalid_input("cycle: n >= 7");
  int t = (n + 1) / 2;  // bottom row size
  std::vector<GridPoint> v(static_cast<std::size_t>(n));
  for (int i = 0; i < t; ++i) v[std::size_t(i)] = pt(i, 0);
  for (int j = 0; j < n - t; ++j) v[std::size_t(n - 1 - j)] = pt(j, 2);
  std::vector<GridPoint> o;
  for (int i = 1; i <= t - 2; ++i) o.push_back(pt(i, 1));
  return checked(Graph::cycle(n), free_rep(std::move(v), std::move(o)));
}

Fixture fixture_complete_bipartite(int n, int m) {
  if (n < 2 || m < n) throw invalid_input("complete_bipartite: 2 <= n <= m");
  // Larger side on row 0, smaller side split between rows +-2; rows +-1
  // stay free so every cross pair can travel through them.
  // Labels: small part 0..n-1, big part n..n+m-1.
  std::vector<GridPoint> v(static_cast<std::size_t>(n + m));
  std::vector<GridPoint> o;
  int top = (n + 1) / 2, bot = n - top;
  for (int i = 0; i < top; ++i) v[std::size_t(i)] = pt(2 * i + 1, 2);
  for (int i = 0; i < bot; ++i) v[std::size_t(top + i)] = pt(2 * i + 1, -2);
  for (int i = 0; i < m; ++i) v[std::size_t(n + i)] = pt(2 * i, 0);
  for (int i = 0; i + 1 < m; ++i) o.push_back(pt(2 * i + 1, 0));
  for (int i = 0; i + 1 < top; ++i) o.push_back(pt(2 * i + 2, 2));
  for (int i = 0; i + 1 < bot; ++i) o.push_back(pt(2 * i + 2, -2));
  return checked(Graph::complete_bipartite(n, m), free_rep(std::move(v), std::move(o)));
}

Fixture fixture_complete_minus_matching(int n, int k) {
  if (k < 1 || n < 2 * k) throw invalid_input("complete_minus_matching: 1 <= 2k <= n");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w)
      if (!(w == u + 1 && u % 2 == 0 && u < 2 * k)) edges.emplace_back(u, w);
  Graph g(n, std::move(edges));

  if (k <= 3) {
    // Chained placement: matched pairs alternate horizontal/vertical
    // segments and each obstacle sits on two consecutive segments,
    // reaching k-1 obstacles. k=1 blocks its pair with a third vertex.
    std::vector<GridPoint> v(static_cast<std::size_t>(n));
    std::vector<GridPoint> o;
    bool ok = true;
    if (k == 1 && n >= 3) {
      v[0] = pt(0, 0);
      v[1] = pt(2, 0);
      v[2] = pt(1, 0);
      for (int i = 3; i < n; ++i) v[std::size_t(i)] = pt(i, i - 2);
    } else if (k == 2) {
      v[0] = pt(6, 10);
      v[1] = pt(14, 10);
      v[2] = pt(10, 6);
      v[3] = pt(10, 14);
      o = {pt(10, 10)};
      for (int i = 4; i < n; ++i) v[std::size_t(i)] = pt(16 + i, 16 + i);
    } else if (k == 3) {
      v[0] = pt(6, 10);
      v[1] = pt(14, 10);
      v[2] = pt(10, 6);
      v[3] = pt(10, 14);
      v[4] = pt(7, 8);
      v[5] = pt(13, 8);
      o = {pt(10, 8), pt(10, 10)};
      for (int i = 6; i < n; ++i) v[std::size_t(i)] = pt(16 + i, 16 + i);
    } else {
      ok = false;
    }
    if (ok) {
      Representation rep = free_rep(std::move(v), std::move(o));
      rep.normalize();
      rep.validate();
      if (verify(rep, g).matches) return Fixture{std::move(g), std::move(rep)};
    }
  }

  // Fallback: one obstacle per pair, matched pairs sharing a row with the
  // blocker between them, everything else on the main diagonal.
  std::vector<GridPoint> v(static_cast<std::size_t>(n));
    std::vector<GridPoint> o;
  Coord c = 0;
  for (int j = 0; j < k; ++j) {
    v[std::size_t(2 * j)] = pt(c, c);
    v[std::size_t(2 * j + 1)] = pt(c + 2, c);
    o.push_back(pt(c + 1, c));
    c += 3;
  }
  for (int i = 2 * k; i < n; ++i, ++c) v[std::size_t(i)] = pt(c, c);
  return checked(std::move(g), free_rep(std::move(v), std::move(o)));
}

Fixture fixture_empty_bipartite_complement(int n, int m) {
  if (n < 1 || m < 1) throw invalid_input("empty_bipartite_complement: n, m >= 1");
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int w = u + 1; w < n; ++w) edges.emplace_back(u, w);
  for (int u = n; u < n + m; ++u)
    for (int w = u + 1; w < n + m; ++w) edges.emplace_back(u, w);
  std::vector<GridPoint> v, o;
  for (int i = 0; i < n; ++i) v.push_back(pt(i, i));
  for (int i = 0; i < m; ++i) v.push_back(pt(n + 1 + i, i));
  for (int y = 0; y < std::max(n, m); ++y) o.push_back(pt(n, y));
  return checked(Graph(n + m, std::move(edges)), free_rep(std::move(v), std::move(o)));
}

Fixture fixture_binary_tree(int h) {
  if (h < 1) throw invalid_input("binary_tree: h >= 1");
  if (h > 16) throw invalid_input("binary_tree: h too large");
  int n = (1 << (h + 1)) - 1;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; 2 * i + 2 < n; ++i) {
    edges.emplace_back(i, 2 * i + 1);
    edges.emplace_back(i, 2 * i + 2);
  }

  // Heap node i at depth d, j-th in its level: x is the center of its
  // leaf span, y grows toward the root; edges run through the free row
  // just below each parent.
  auto place = [&](int i) {
    int d = 0;
    while ((2 << d) - 1 <= i) ++d;
    int j = i - ((1 << d) - 1);
    Coord w = Coord(1) << (h - d);  // leaves under this node
    return pt(Coord(j) * 2 * w + w - 1, 2 * Coord(h - d));
  };
  std::vector<GridPoint> v;
  for (int i = 0; i < n; ++i) v.push_back(place(i));

  std::set<GridPoint> free(v.begin(), v.end());
  for (auto& [p, ch] : edges) {
    GridPoint pp = v[std::size_t(p)], cp = v[std::size_t(ch)];
    Coord lo = std::min(pp.x, cp.x), hi = std::max(pp.x, cp.x);
    for (Coord x = lo; x <= hi; ++x) free.insert(pt(x, pp.y - 1));
  }

  Representation rep;
  rep.default_occ = Occupancy::Blocked;
  rep.bounds = Box{pt(0, 0), pt(2 * (Coord(1) << h) - 2, 2 * Coord(h))};
  rep.vertices = v;
  std::set<GridPoint> vset(v.begin(), v.end());
  for (auto& p : free)
    if (!vset.count(p)) rep.cells.push_back(p);
  return checked(Graph(n, std::move(edges)), std::move(rep));
}

Fixture fixture(const std::string& cls, const std::vector<int>& params) {
  auto one = [&] {
    if (params.size() != 1) throw invalid_input("fixture " + cls + " takes one parameter");
    return params[0];
  };
  auto two = [&]() -> std::pair<int, int> {
    if (params.size() != 2) throw invalid_input("fixture " + cls + " takes two parameters");
    return {params[0], params[1]};
  };
  if (cls == "path") return fixture_path(one());
  if (cls == "complete") return fixture_complete(one());
  if (cls == "empty") return fixture_empty(one());
  if (cls == "matching") return fixture_matching(one());
  if (cls == "cycle") return fixture_cycle(one());
  if (cls == "complete_bipartite") {
    auto [n, m] = two();
    return fixture_complete_bipartite(n, m);
  }
  if (cls == "complete_minus_matching") {
    auto [n, k] = two();
    return fixture_complete_minus_matching(n, k);
  }
  if (cls == "empty_bipartite_complement") {
    auto [n, m] = two();
    return fixture_empty_bipartite_complement(n, m);
  }
  if (cls == "binary_tree") return fixture_binary_tree(one());
  throw invalid_input("unknown fixture class: " + cls);
}

}  // namespace gridobs
