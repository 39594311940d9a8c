#include "gridobs/core.hpp"

#include <algorithm>
#include <set>

#include <nlohmann/json.hpp>

namespace gridobs {

using json = nlohmann::ordered_json;

Coord Box::volume(int dim) const {
  Coord v = 1;
  for (int a = 0; a < dim; ++a) {
    if (hi[a] < lo[a]) return 0;
    Coord side = hi[a] - lo[a] + 1;
    if (v > 0 && side > 0 && v > (std::int64_t(1) << 62) / side)
      throw invalid_input("bounds volume overflows 64-bit count");
    v *= side;
  }
  return v;
}

Graph::Graph(int n, std::vector<std::pair<int, int>> edges) : n_(n) {
  if (n < 0) throw invalid_input("negative vertex count");
  for (auto& [u, v] : edges) {
    if (u == v) throw invalid_input("self-loop");
    if (u > v) std::swap(u, v);
    if (u < 0 || v >= n) throw invalid_input("edge label out of range");
  }
  std::sort(edges.begin(), edges.end());
  if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
    throw invalid_input("duplicate edge");
  edges_ = std::move(edges);
}

bool Graph::has_edge(int u, int v) const {
  if (u > v) std::swap(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

std::vector<int> Graph::neighbors(int v) const {
  std::vector<int> out;
  for (auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    else if (b == v) out.push_back(a);
  }
  return out;
}

int Graph::degree(int v) const { return int(neighbors(v).size()); }

Graph Graph::path(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph Graph::cycle(int n) {
  if (n < 3) throw invalid_input("cycle needs n >= 3");
  auto e = path(n).edges();
  e.emplace_back(0, n - 1);
  return Graph(n, std::move(e));
}

Graph Graph::complete(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph(n, std::move(e));
}

Graph Graph::complete_bipartite(int n, int m) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) e.emplace_back(i, n + j);
  return Graph(n + m, std::move(e));
}

Graph Graph::empty(int n) { return Graph(n, {}); }

bool Representation::has_cell(const GridPoint& p) const {
  return std::binary_search(cells.begin(), cells.end(), p);
}

bool Representation::is_obstacle(const GridPoint& p) const {
  for (auto& v : vertices)
    if (v == p) return false;
  if (default_occ == Occupancy::Free) return has_cell(p);
  if (!bounds || !bounds->contains(p, dim)) return false;
  return !has_cell(p);
}

Coord Representation::obstacle_count() const {
  if (default_occ == Occupancy::Free) return Coord(cells.size());
  return bounds->volume(dim) - Coord(cells.size()) - Coord(vertices.size());
}

void Representation::normalize() {
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
}

void Representation::validate() const {
  if (dim != 2 && dim != 3) throw invalid_input("dimension must be 2 or 3");
  if (dim == 2) {
    for (auto& v : vertices)
      if (v.z != 0) throw invalid_input("2D point with nonzero z");
    for (auto& c : cells)
      if (c.z != 0) throw invalid_input("2D point with nonzero z");
  }
  std::set<GridPoint> vs(vertices.begin(), vertices.end());
  if (vs.size() != vertices.size())
    throw invalid_input("vertex positions not pairwise distinct");
  if (!std::is_sorted(cells.begin(), cells.end()))
    throw invalid_input("cells not sorted");
  if (std::adjacent_find(cells.begin(), cells.end()) != cells.end())
    throw invalid_input("duplicate cell");
  for (auto& c : cells)
    if (vs.count(c)) throw invalid_input("cell collides with vertex");
  if (default_occ == Occupancy::Blocked) {
    if (!bounds) throw invalid_input("default=blocked requires bounds");
    for (auto& v : vertices)
      if (!bounds->contains(v, dim)) throw invalid_input("vertex outside bounds");
    for (auto& c : cells)
      if (!bounds->contains(c, dim)) throw invalid_input("cell outside bounds");
  }
}

bool LatticePath::is_monotone_unit() const {
  for (std::size_t i = 1; i < points.size(); ++i)
    if (l1(points[i - 1], points[i]) != 1) return false;
  if (points.size() < 2) return true;
  return Coord(points.size()) - 1 == l1(points.front(), points.back());
}

void LatticePath::validate(int dim) const {
  if (dim == 2)
    for (auto& p : points)
      if (p.z != 0) throw invalid_input("2D path point with nonzero z");
  if (!is_monotone_unit()) throw invalid_input("path is not a monotone unit-step path");
}

namespace {

json point_to_json(const GridPoint& p, int dim) {
  json a = json::array();
  for (int i = 0; i < dim; ++i) a.push_back(p[i]);
  return a;
}

GridPoint point_from_json(const json& a, int dim) {
  if (!a.is_array() || int(a.size()) != dim)
    throw invalid_input("coordinate array has wrong length");
  GridPoint p;
  for (int i = 0; i < dim; ++i) {
    if (!a[i].is_number_integer()) throw invalid_input("non-integer coordinate");
    p[i] = a[i].get<Coord>();
  }
  return p;
}

}  // namespace

std::string encode_representation(const Representation& rep) {
  Representation r = rep;
  r.normalize();
  r.validate();
  json j;
  j["dim"] = r.dim;
  j["default"] = r.default_occ == Occupancy::Free ? "free" : "blocked";
  if (r.bounds) {
    j["bounds"] = json::array(
        {point_to_json(r.bounds->lo, r.dim), point_to_json(r.bounds->hi, r.dim)});
  }
  json vs = json::array();
  for (auto& v : r.vertices) vs.push_back(point_to_json(v, r.dim));
  j["vertices"] = vs;
  json cs = json::array();
  for (auto& c : r.cells) cs.push_back(point_to_json(c, r.dim));
  j["cells"] = cs;
  return j.dump();
}

Representation decode_representation(const std::string& bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw invalid_input(std::string("bad JSON: ") + e.what());
  }
  Representation r;
  if (!j.contains("dim") || !j["dim"].is_number_integer())
    throw invalid_input("missing dim");
  r.dim = j["dim"].get<int>();
  if (r.dim != 2 && r.dim != 3) throw invalid_input("dimension must be 2 or 3");
  std::string d = j.value("default", "free");
  if (d == "free") r.default_occ = Occupancy::Free;
  else if (d == "blocked") r.default_occ = Occupancy::Blocked;
  else throw invalid_input("default must be 'free' or 'blocked'");
  if (j.contains("bounds")) {
    auto& b = j["bounds"];
    if (!b.is_array() || b.size() != 2) throw invalid_input("bad bounds");
    r.bounds = Box{point_from_json(b[0], r.dim), point_from_json(b[1], r.dim)};
  }
  for (auto& v : j.value("vertices", json::array()))
    r.vertices.push_back(point_from_json(v, r.dim));
  for (auto& c : j.value("cells", json::array()))
    r.cells.push_back(point_from_json(c, r.dim));
  r.normalize();
  r.validate();
  return r;
}

std::string encode_graph(const Graph& g) {
  json j;
  j["n"] = g.n();
  json es = json::array();
  for (auto& [u, v] : g.edges()) es.push_back(json::array({u, v}));
  j["edges"] = es;
  return j.dump();
}

Graph decode_graph(const std::string& bytes) {
  json j;
  try {
    j = json::parse(bytes);
  } catch (const json::parse_error& e) {
    throw invalid_input(std::string("bad JSON: ") + e.what());
  }
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw invalid_input("missing n");
  std::vector<std::pair<int, int>> edges;
  for (auto& e : j.value("edges", json::array())) {
    if (!e.is_array() || e.size() != 2) throw invalid_input("bad edge entry");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return Graph(j["n"].get<int>(), std::move(edges));
}

}  // namespace gridobs
