#pragma once

#include <string>

#include "gridobs/core.hpp"

namespace gridobs {

class Graph;

// SVG picture of a 2D representation: vertices as filled dots, obstacles
// as filled squares, free cells of blocked-default reps as light cells;
// when a graph is given, each edge's witness path is drawn as a polyline.
// Viewport: bounds for default=blocked, otherwise the content bounding
// box padded by 2 cells. Throws invalid_input past 500k SVG elements.
std::string render_svg(const Representation& rep, const Graph* g = nullptr);

}  // namespace gridobs
