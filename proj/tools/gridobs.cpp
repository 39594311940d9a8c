#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "gridobs/analysis.hpp"
#include "gridobs/embed3d.hpp"
#include "gridobs/fixtures.hpp"
#include "gridobs/planar.hpp"
#include "gridobs/reduction.hpp"
#include "gridobs/render.hpp"
#include "gridobs/strip.hpp"

using namespace gridobs;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw invalid_input("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void spit(const std::string& path, const std::string& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw invalid_input("cannot write " + path);
  out << data;
}

void emit(const std::string& out_path, const std::string& data) {
  if (out_path.empty())
    std::cout << data << "\n";
  else
    spit(out_path, data);
}

json point_json(const GridPoint& p, int dim) {
  json a = json::array({p.x, p.y});
  if (dim == 3) a.push_back(p.z);
  return a;
}

EmbedMode parse_mode(const std::string& m) {
  if (m == "adaptive") return EmbedMode::Adaptive;
  if (m == "paper") return EmbedMode::PaperFaithful;
  throw invalid_input("mode must be adaptive or paper");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"grid obstacle representations"};
  app.require_subcommand(1);
  int threads = 0;
  app.add_option("--threads", threads, "thread cap (0 = hardware)");

  // embed2d / embed3d
  std::string g_path, rep_path, out_path, graph_out, mode_str = "adaptive";
  auto* e2 = app.add_subcommand("embed2d", "planar graph -> 2D representation");
  e2->add_option("--graph", g_path)->required();
  e2->add_option("--mode", mode_str);
  e2->add_option("--out", out_path);
  auto* e3 = app.add_subcommand("embed3d", "graph -> 3D representation");
  e3->add_option("--graph", g_path)->required();
  e3->add_option("--mode", mode_str);
  e3->add_option("--out", out_path);

  auto* vf = app.add_subcommand("verify", "check a representation against a graph");
  vf->add_option("--rep", rep_path)->required();
  vf->add_option("--graph", g_path)->required();

  auto* vg = app.add_subcommand("visgraph", "visibility graph of a representation");
  vg->add_option("--rep", rep_path)->required();
  vg->add_option("--out", out_path);

  int strip_b = 0;
  auto* cs = app.add_subcommand("compress-strip", "compress a height-b strip");
  cs->add_option("--rep", rep_path)->required();
  cs->add_option("--b", strip_b)->required();
  cs->add_option("--out", out_path);

  std::string fix_class;
  int fn = -1, fm = -1, fk = -1, fh = -1;
  auto* fx = app.add_subcommand("fixture", "generate a standard-family example");
  fx->add_option("--class", fix_class)->required();
  fx->add_option("--n", fn);
  fx->add_option("--m", fm);
  fx->add_option("--k", fk);
  fx->add_option("--height", fh);
  fx->add_option("--out", out_path);
  fx->add_option("--graph-out", graph_out);

  auto* cm = app.add_subcommand("components", "obstacle component decomposition");
  cm->add_option("--rep", rep_path)->required();

  std::string window = "5x5";
  int cap = 4;
  auto* ox = app.add_subcommand("obsnum-exact", "window-exact obstacle minimum");
  ox->add_option("--graph", g_path)->required();
  ox->add_option("--window", window);
  ox->add_option("--cap", cap);

  auto* c4 = app.add_subcommand("check-c4-invariant", "crossing => C4 soundness check");
  c4->add_option("--rep", rep_path)->required();
  c4->add_option("--graph", g_path)->required();

  int rn = 0, rk1 = 0, rk2 = 0;
  std::string variant = "gpse";
  auto* rg = app.add_subcommand("reduce-gpse", "hardness-instance point sets");
  rg->add_option("--n", rn)->required();
  rg->add_option("--k1", rk1)->required();
  rg->add_option("--k2", rk2)->required();
  rg->add_option("--variant", variant);
  rg->add_option("--out", out_path);

  std::string points_path;
  std::uint64_t max_nodes = 1'000'000;
  auto* od = app.add_subcommand("oeps-decide", "point-set representability search");
  od->add_option("--graph", g_path)->required();
  od->add_option("--points", points_path)->required();
  od->add_option("--max-nodes", max_nodes);
  od->add_option("--out", out_path);

  auto* rs = app.add_subcommand("render-svg", "draw a 2D representation");
  rs->add_option("--rep", rep_path)->required();
  rs->add_option("--graph", g_path);
  rs->add_option("--out", out_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*e2 || *e3) {
      Graph g = decode_graph(slurp(g_path));
      Representation rep = *e2 ? embed2d(g, parse_mode(mode_str), threads).rep
                               : embed3d(g, parse_mode(mode_str), threads);
      emit(out_path, encode_representation(rep));
    } else if (*vf) {
      Representation rep = decode_representation(slurp(rep_path));
      Graph g = decode_graph(slurp(g_path));
      auto report = verify(rep, g, threads);
      json j;
      j["matches"] = report.matches;
      j["missing_edges"] = report.missing_edges;
      j["extra_edges"] = report.extra_edges;
      std::cout << j.dump() << "\n";
      return report.matches ? 0 : 1;
    } else if (*vg) {
      Representation rep = decode_representation(slurp(rep_path));
      emit(out_path, encode_graph(visibility_graph(rep, threads)));
    } else if (*cs) {
      Representation rep = decode_representation(slurp(rep_path));
      emit(out_path, encode_representation(compress_strip(rep, strip_b)));
    } else if (*fx) {
      std::vector<int> params;
      for (int p : {fn, fm, fk, fh})
        if (p >= 0) params.push_back(p);
      Fixture f = fixture(fix_class, params);
      if (!out_path.empty() || graph_out.empty())
        emit(out_path, encode_representation(f.rep));
      if (!graph_out.empty()) spit(graph_out, encode_graph(f.graph));
    } else if (*cm) {
      Representation rep = decode_representation(slurp(rep_path));
      auto d = component_obstacles(rep);
      json j;
      j["count"] = d.count;
      j["components"] = json::array();
      for (auto& comp : d.components) {
        json c = json::array();
        for (auto& p : comp) c.push_back(point_json(p, rep.dim));
        j["components"].push_back(c);
      }
      std::cout << j.dump() << "\n";
    } else if (*ox) {
      Graph g = decode_graph(slurp(g_path));
      auto x = window.find('x');
      if (x == std::string::npos) throw invalid_input("window must look like 5x5");
      int w = std::stoi(window.substr(0, x)), h = std::stoi(window.substr(x + 1));
      auto r = obsnum_exact(g, w, h, cap);
      json j;
      j["found"] = r.has_value();
      if (r) j["min_obstacles"] = *r;
      j["note"] = "window-restricted search; result is an upper bound on the Z^2 minimum";
      std::cout << j.dump() << "\n";
    } else if (*c4) {
      Representation rep = decode_representation(slurp(rep_path));
      Graph g = decode_graph(slurp(g_path));
      bool ok = crossing_c4_check(rep, g);
      std::cout << (ok ? "{\"holds\":true}" : "{\"holds\":false}") << "\n";
      return ok ? 0 : 1;
    } else if (*rg) {
      PointSetInstance inst = variant == "oeps" ? oeps_points(rn, rk1, rk2)
                              : variant == "gpse"
                                  ? gpse_points(rn, rk1, rk2)
                                  : throw invalid_input("variant must be gpse or oeps");
      json j;
      for (auto [name, pts] : {std::pair{"p0", &inst.p0}, {"p1", &inst.p1}, {"p2", &inst.p2}}) {
        json a = json::array();
        for (auto& p : *pts) a.push_back(point_json(p, 2));
        j[name] = a;
      }
      emit(out_path, j.dump());
    } else if (*od) {
      Graph g = decode_graph(slurp(g_path));
      json pj = json::parse(slurp(points_path));
      std::vector<GridPoint> s;
      for (auto key : {"p0", "p1", "p2", "points"})
        if (pj.contains(key))
          for (auto& p : pj[key]) s.push_back(pt(p[0].get<Coord>(), p[1].get<Coord>()));
      OepsCaps caps;
      caps.max_nodes = max_nodes;
      OepsResult r = oeps_decide(g, s, caps);
      json j;
      j["status"] = r.status == OepsStatus::Yes   ? "yes"
                    : r.status == OepsStatus::No  ? "no"
                                                  : "unknown";
      std::cout << j.dump() << "\n";
      if (r.witness && !out_path.empty()) spit(out_path, encode_representation(*r.witness));
    } else if (*rs) {
      Representation rep = decode_representation(slurp(rep_path));
      if (g_path.empty()) {
        spit(out_path, render_svg(rep));
      } else {
        Graph g = decode_graph(slurp(g_path));
        spit(out_path, render_svg(rep, &g));
      }
    }
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const construction_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
