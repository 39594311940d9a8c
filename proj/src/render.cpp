#include "gridobs/render.hpp"

#include <sstream>

#include "gridobs/visibility.hpp"

namespace gridobs {

std::string render_svg(const Representation& rep, const Graph* g) {
  if (rep.dim != 2) throw invalid_input("render_svg: 2D only");
  rep.validate();

  Box view{};
  if (rep.default_occ == Occupancy::Blocked) {
    view = *rep.bounds;
  } else {
    if (rep.vertices.empty() && rep.cells.empty())
      throw invalid_input("render_svg: nothing to draw");
    bool first = true;
    auto grow = [&](const GridPoint& p) {
      if (first) {
        view = Box{p, p};
        first = false;
        return;
      }
      view.lo.x = std::min(view.lo.x, p.x);
      view.lo.y = std::min(view.lo.y, p.y);
      view.hi.x = std::max(view.hi.x, p.x);
      view.hi.y = std::max(view.hi.y, p.y);
    };
    for (auto& p : rep.vertices) grow(p);
    for (auto& p : rep.cells) grow(p);
    view.lo.x -= 2;
    view.lo.y -= 2;
    view.hi.x += 2;
    view.hi.y += 2;
  }

  const Coord unit = 10;
  // lattice (x, y) -> SVG center, y axis flipped
  auto cx = [&](Coord x) { return (x - view.lo.x) * unit + unit / 2; };
  auto cy = [&](Coord y) { return (view.hi.y - y) * unit + unit / 2; };

  std::size_t elements = rep.vertices.size() + rep.cells.size();
  if (rep.default_occ == Occupancy::Blocked)
    elements += std::size_t(view.volume(2));
  if (elements > 500000) throw invalid_input("render_svg: too many elements");

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
      << (view.hi.x - view.lo.x + 1) * unit << "\" height=\""
      << (view.hi.y - view.lo.y + 1) * unit << "\">\n";

  auto square = [&](const GridPoint& p, const char* fill) {
    out << "<rect x=\"" << cx(p.x) - unit / 2 + 1 << "\" y=\"" << cy(p.y) - unit / 2 + 1
        << "\" width=\"" << unit - 2 << "\" height=\"" << unit - 2 << "\" fill=\"" << fill
        << "\"/>\n";
  };

  if (rep.default_occ == Occupancy::Blocked) {
    // light free corridors on a dark field
    GridPoint p;
    for (p.x = view.lo.x; p.x <= view.hi.x; ++p.x)
      for (p.y = view.lo.y; p.y <= view.hi.y; ++p.y)
        if (rep.is_obstacle(p))
          square(p, "#444444");
        else
          square(p, "#f2f2f2");
  } else {
    for (auto& p : rep.cells) square(p, "#444444");
  }

  if (g) {
    for (auto& [u, v] : g->edges()) {
      auto wp = witness_path(rep, u, v);
      if (!wp) continue;
      out << "<polyline fill=\"none\" stroke=\"#2060c0\" stroke-width=\"2\" points=\"";
      for (auto& p : wp->points) out << cx(p.x) << "," << cy(p.y) << " ";
      out << "\"/>\n";
    }
  }

  for (auto& p : rep.vertices)
    out << "<circle cx=\"" << cx(p.x) << "\" cy=\"" << cy(p.y) << "\" r=\"" << unit / 3
        << "\" fill=\"#101010\"/>\n";

  out << "</svg>\n";
  return out.str();
}

}  // namespace gridobs
