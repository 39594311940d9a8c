// Straight-line grid embedding on (n-2) x (n-2): triangulate with Boost,
// take a canonical ordering of the triangulation, build the realizer
// (three parent trees), and give every vertex its two region vertex
// counts as coordinates. Added chords exist only for the drawing and are
// dropped from the returned edge set.
#include <algorithm>
#include <array>
#include <map>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/make_biconnected_planar.hpp>
#include <boost/graph/make_connected.hpp>
#include <boost/graph/make_maximal_planar.hpp>
#include <boost/graph/planar_face_traversal.hpp>

#include "gridobs/planar.hpp"

namespace gridobs {

namespace {

using BGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::no_property,
                          boost::property<boost::edge_index_t, int>>;
using BEdge = boost::graph_traits<BGraph>::edge_descriptor;
using Embedding = std::vector<std::vector<BEdge>>;

void reindex_edges(BGraph& bg) {
  auto idx = get(boost::edge_index, bg);
  int i = 0;
  for (auto [ei, eend] = edges(bg); ei != eend; ++ei) put(idx, *ei, i++);
}

Embedding compute_embedding(BGraph& bg, const char* what) {
  reindex_edges(bg);
  Embedding emb(num_vertices(bg));
  bool planar = boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding = &emb[0]);
  if (!planar) throw invalid_input(std::string("graph is not planar (") + what + ")");
  return emb;
}

struct FaceCollector : public boost::planar_face_traversal_visitor {
  std::vector<std::vector<int>>* faces;
  std::vector<int> cur;
  void begin_face() { cur.clear(); }
  template <typename Vertex>
  void next_vertex(Vertex v) {
    cur.push_back(int(v));
  }
  void end_face() { faces->push_back(cur); }
};

struct Triangulation {
  int n;
  std::vector<std::set<int>> adj;
  std::vector<std::vector<int>> rot;    // neighbors in embedding order
  std::vector<std::vector<int>> faces;  // vertex cycles
  int outer_face = 0;
};

Triangulation triangulate(const Graph& g) {
  BGraph bg(g.n());
  for (auto& [u, v] : g.edges()) add_edge(u, v, bg);
  compute_embedding(bg, "input");
  boost::make_connected(bg);
  {
    Embedding emb = compute_embedding(bg, "connected");
    boost::make_biconnected_planar(bg, &emb[0]);
  }
  {
    Embedding emb = compute_embedding(bg, "biconnected");
    boost::make_maximal_planar(bg, &emb[0]);
  }
  Embedding emb = compute_embedding(bg, "triangulated");

  Triangulation t;
  t.n = int(num_vertices(bg));
  t.adj.resize(t.n);
  t.rot.resize(t.n);
  for (auto [ei, eend] = edges(bg); ei != eend; ++ei) {
    int u = int(source(*ei, bg)), v = int(target(*ei, bg));
    t.adj[u].insert(v);
    t.adj[v].insert(u);
  }
  for (int v = 0; v < t.n; ++v)
    for (const BEdge& e : emb[v])
      t.rot[v].push_back(int(source(e, bg)) == v ? int(target(e, bg))
                                                 : int(source(e, bg)));
  FaceCollector fc;
  fc.faces = &t.faces;
  reindex_edges(bg);
  planar_face_traversal(bg, &emb[0], fc);
  for (auto& f : t.faces)
    if (f.size() != 3)
      throw construction_error("triangulation produced a non-triangular face");
  return t;
}

// Canonical ordering by peeling chord-free boundary vertices.
std::vector<int> canonical_order(const Triangulation& t, int a1, int a2, int a3) {
  int n = t.n;
  std::vector<int> order(n + 1, -1);
  std::vector<std::set<int>> adj = t.adj;
  std::vector<char> alive(n, 1);
  std::vector<int> cycle{a1, a2, a3};

  auto on_cycle = [&](int v) {
    return std::find(cycle.begin(), cycle.end(), v) != cycle.end();
  };

  for (int k = n; k >= 3; --k) {
    if (k == 3) {
      if (cycle.size() != 3) throw construction_error("canonical ordering wedged");
      for (int v : cycle)
        if (v != a1 && v != a2) order[3] = v;
      break;
    }
    int pick = -1, pick_pos = -1;
    for (int pos = 0; pos < int(cycle.size()); ++pos) {
      int u = cycle[pos];
      if (u == a1 || u == a2) continue;
      int on = 0;
      for (int w : adj[u])
        if (on_cycle(w)) ++on;
      if (on == 2) {  // neighbors on the cycle are exactly its two flanks
        pick = u;
        pick_pos = pos;
        break;
      }
    }
    if (pick < 0) throw construction_error("no chord-free boundary vertex");
    order[k] = pick;
    int m = int(cycle.size());
    int cl = cycle[(pick_pos + m - 1) % m], cr = cycle[(pick_pos + 1) % m];
    // Interior neighbors of pick become boundary, ordered from cl to cr
    // along pick's rotation; try both rotation directions and keep the
    // one that yields a valid chain.
    std::vector<int> ring;
    for (int w : t.rot[pick])
      if (alive[w] && w != pick) ring.push_back(w);
    auto chain_from = [&](bool forward) -> std::vector<int> {
      int sz = int(ring.size());
      int start = -1;
      for (int i = 0; i < sz; ++i)
        if (ring[i] == cl) start = i;
      if (start < 0) return {};
      std::vector<int> mid;
      for (int s = 1; s < sz; ++s) {
        int w = ring[forward ? (start + s) % sz : (start + sz - s) % sz];
        if (w == cr) return mid;
        mid.push_back(w);
      }
      return {-1};  // never reached cr
    };
    auto valid = [&](const std::vector<int>& mid) {
      if (!mid.empty() && mid[0] == -1) return false;
      if (int(mid.size()) + 2 != int(adj[pick].size())) return false;
      int prev = cl;
      for (int w : mid) {
        if (!adj[prev].count(w)) return false;
        if (on_cycle(w)) return false;
        prev = w;
      }
      return adj[prev].count(cr) != 0;
    };
    std::vector<int> mid = chain_from(true);
    if (!valid(mid)) mid = chain_from(false);
    if (!valid(mid)) throw construction_error("boundary update failed");

    alive[pick] = 0;
    for (int w : adj[pick]) adj[w].erase(pick);
    adj[pick].clear();
    // mid takes pick's slot, so the cyclic order cl..mid..cr is preserved.
    cycle.erase(cycle.begin() + pick_pos);
    cycle.insert(cycle.begin() + pick_pos, mid.begin(), mid.end());
  }
  order[1] = a1;
  order[2] = a2;
  return order;
}

struct Realizer {
  std::vector<std::array<int, 3>> parent;  // parent[v][color], -1 at roots
  std::array<int, 3> root;
};

Realizer build_realizer(const Triangulation& t, const std::vector<int>& order,
                        int a1, int a2, int a3) {
  int n = t.n;
  Realizer r;
  r.parent.assign(n, {-1, -1, -1});
  r.root = {a1, a2, a3};
  std::vector<int> when(n);
  for (int k = 1; k <= n; ++k) when[order[k]] = k;

  std::vector<int> B{a1, a2};
  for (int k = 3; k <= n; ++k) {
    int v = order[k];
    int lo = -1, hi = -1;
    for (int i = 0; i < int(B.size()); ++i) {
      if (t.adj[v].count(B[i])) {
        if (lo < 0) lo = i;
        hi = i;
      } else if (lo >= 0 && hi >= 0 && hi == i - 1) {
        // run ended; keep scanning to catch non-contiguity below
      }
    }
    if (lo < 0 || hi <= lo) throw construction_error("insertion neighbors not found");
    for (int i = lo; i <= hi; ++i)
      if (!t.adj[v].count(B[i]))
        throw construction_error("insertion neighbors not contiguous");
    r.parent[v][0] = B[lo];
    r.parent[v][1] = B[hi];
    for (int i = lo + 1; i < hi; ++i) r.parent[B[i]][2] = v;
    std::vector<int> nb(B.begin(), B.begin() + lo + 1);
    nb.push_back(v);
    nb.insert(nb.end(), B.begin() + hi, B.end());
    B = std::move(nb);
  }
  r.parent[a1][1] = a2;
  r.parent[a1][2] = a3;
  r.parent[a2][0] = a1;
  r.parent[a2][2] = a3;
  return r;
}

using EdgeKey = std::pair<int, int>;
EdgeKey ekey(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

std::vector<int> tree_path(const Realizer& r, int v, int color) {
  std::vector<int> p{v};
  int cur = v;
  int guard = int(r.parent.size()) + 1;
  while (cur != r.root[color]) {
    cur = r.parent[cur][color];
    if (cur < 0 || guard-- == 0) throw construction_error("realizer path broken");
    p.push_back(cur);
  }
  return p;
}

}  // namespace

void PlanarDrawing::assert_planar(int dim) const {
  int n = int(positions.size());
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (segments_conflict(rpoint(positions[a]), rpoint(positions[b]),
                            rpoint(positions[c]), rpoint(positions[d])))
        throw construction_error("drawing has crossing segments");
    }
  for (int v = 0; v < n; ++v)
    for (auto& [a, b] : edges) {
      if (v == a || v == b) continue;
      if (point_on_segment(rpoint(positions[v]), rpoint(positions[a]),
                           rpoint(positions[b])))
        throw construction_error("vertex lies on a segment");
    }
  (void)dim;
}

PlanarDrawing straight_line_embed(const Graph& g) {
  int n = g.n();
  if (n < 3) throw invalid_input("embedding needs n >= 3");
  Triangulation t = triangulate(g);
  int a1 = t.faces[t.outer_face][0];
  int a2 = t.faces[t.outer_face][1];
  int a3 = t.faces[t.outer_face][2];
  std::vector<int> order = canonical_order(t, a1, a2, a3);
  Realizer r = build_realizer(t, order, a1, a2, order[n]);
  if (order[n] != a3 && n > 3)
    throw construction_error("peeling did not end at the chosen apex");

  // Interior-face incidence per edge, for region flood fills.
  std::map<EdgeKey, std::vector<int>> edge_faces;
  for (int f = 0; f < int(t.faces.size()); ++f) {
    if (f == t.outer_face) continue;
    auto& fc = t.faces[f];
    for (int i = 0; i < 3; ++i)
      edge_faces[ekey(fc[i], fc[(i + 1) % 3])].push_back(f);
  }

  std::vector<GridPoint> pos(n);
  for (int v = 0; v < n; ++v) {
    std::array<int, 3> coord{};
    for (int color = 0; color < 3; ++color) {
      int cm = (color + 2) % 3, cp = (color + 1) % 3;
      std::vector<int> pm = tree_path(r, v, cm);
      std::vector<int> pp = tree_path(r, v, cp);
      std::set<EdgeKey> barrier;
      for (std::size_t i = 0; i + 1 < pm.size(); ++i)
        barrier.insert(ekey(pm[i], pm[i + 1]));
      for (std::size_t i = 0; i + 1 < pp.size(); ++i)
        barrier.insert(ekey(pp[i], pp[i + 1]));
      std::set<int> region(pm.begin(), pm.end());
      region.insert(pp.begin(), pp.end());
      EdgeKey side = ekey(r.root[cm], r.root[cp]);
      if (!barrier.count(side)) {
        auto it = edge_faces.find(side);
        if (it == edge_faces.end() || it->second.empty())
          throw construction_error("outer side missing from face map");
        std::vector<int> stack{it->second[0]};
        std::vector<char> seen(t.faces.size(), 0);
        seen[stack[0]] = 1;
        while (!stack.empty()) {
          int f = stack.back();
          stack.pop_back();
          auto& fc = t.faces[f];
          for (int i = 0; i < 3; ++i) {
            region.insert(fc[i]);
            EdgeKey e = ekey(fc[i], fc[(i + 1) % 3]);
            if (barrier.count(e)) continue;
            for (int nf : edge_faces[e])
              if (!seen[nf]) {
                seen[nf] = 1;
                stack.push_back(nf);
              }
          }
        }
      }
      int cnt = 0;
      std::set<int> exclude(pm.begin(), pm.end());
      for (int w : region)
        if (!exclude.count(w)) ++cnt;
      coord[color] = cnt;
    }
    if (coord[0] + coord[1] + coord[2] != n - 1)
      throw construction_error("region counts inconsistent");
    pos[v] = pt(coord[0], coord[1]);
  }

  std::set<std::pair<Coord, Coord>> used;
  for (auto& p : pos) {
    if (p.x < 0 || p.x > n - 2 || p.y < 0 || p.y > n - 2)
      throw construction_error("coordinate outside the (n-2) grid");
    if (!used.insert({p.x, p.y}).second)
      throw construction_error("coordinates collide");
  }

  PlanarDrawing d;
  d.positions = std::move(pos);
  d.edges = g.edges();
  d.scale = 1;
  d.assert_planar();
  return d;
}

}  // namespace gridobs
