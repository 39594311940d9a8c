#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "gridobs/rational_geom.hpp"

using namespace gridobs;

namespace {
RPoint rp(int x, int y, int z = 0) { return {Rat(x), Rat(y), Rat(z)}; }
}  // namespace

TEST_CASE("point-segment distance") {
  CHECK(dist2_point_segment(rp(1, 1), rp(0, 0), rp(2, 0)) == 1);
  CHECK(dist2_point_segment(rp(5, 1), rp(0, 0), rp(2, 0)) == 10);  // clamps to b
  CHECK(dist2_point_segment(rp(-3, 4), rp(0, 0), rp(2, 0)) == 25);
  CHECK(dist2_point_segment(rp(1, 0), rp(1, 0), rp(1, 0)) == 0);  // degenerate
  // Off-axis projection keeps exact rationals: (1,1) onto (0,0)-(2,2).
  CHECK(dist2_point_segment(rp(2, 0), rp(0, 0), rp(2, 2)) == 2);
}

TEST_CASE("segment-segment distance") {
  CHECK(dist2_segment_segment(rp(0, 0), rp(2, 2), rp(0, 2), rp(2, 0)) == 0);  // cross
  CHECK(dist2_segment_segment(rp(0, 0), rp(2, 0), rp(0, 3), rp(2, 3)) == 9);  // parallel
  CHECK(dist2_segment_segment(rp(0, 0), rp(1, 0), rp(3, 0), rp(4, 0)) == 4);  // collinear gap
  // 3D skew pair: (0,0,0)-(1,0,0) vs (0,1,1)-(1,1,1) at distance sqrt(2).
  CHECK(dist2_segment_segment(rp(0, 0, 0), rp(1, 0, 0), rp(0, 1, 1), rp(1, 1, 1)) == 2);
  // Interior-interior minimum (not at any endpoint).
  CHECK(dist2_segment_segment(rp(0, 0), rp(4, 0), rp(2, 1), rp(2, 5)) == 1);
}

TEST_CASE("segment conflicts") {
  CHECK(segments_conflict(rp(0, 0), rp(2, 2), rp(0, 2), rp(2, 0)));
  CHECK_FALSE(segments_conflict(rp(0, 0), rp(1, 0), rp(0, 0), rp(0, 1)));  // shared endpoint
  CHECK(segments_conflict(rp(0, 0), rp(3, 0), rp(1, 0), rp(5, 0)));       // overlap
  CHECK(segments_conflict(rp(0, 0), rp(2, 0), rp(0, 0), rp(1, 0)));       // nested, shared end
  CHECK_FALSE(segments_conflict(rp(0, 0), rp(1, 0), rp(1, 0), rp(3, 0))); // collinear, touching
  CHECK(segments_conflict(rp(0, 0), rp(2, 0), rp(1, 0), rp(1, 2)));       // T-touch interior
  CHECK_FALSE(segments_conflict(rp(0, 0), rp(1, 1), rp(3, 0), rp(3, 5)));
  // 3D: segments meeting at a shared endpoint, collinear continuation is fine.
  CHECK_FALSE(segments_conflict(rp(0, 0, 0), rp(1, 1, 1), rp(1, 1, 1), rp(2, 2, 2)));
  CHECK(segments_conflict(rp(0, 0, 0), rp(2, 2, 2), rp(1, 1, 1), rp(1, 1, 5)));
}

TEST_CASE("point on segment") {
  CHECK(point_on_segment(rp(1, 1), rp(0, 0), rp(2, 2)));
  CHECK(point_on_segment(rp(0, 0), rp(0, 0), rp(2, 2)));
  CHECK_FALSE(point_on_segment(rp(1, 2), rp(0, 0), rp(2, 2)));
  CHECK(point_in_segment_interior(rp(1, 1), rp(0, 0), rp(2, 2)));
  CHECK_FALSE(point_in_segment_interior(rp(2, 2), rp(0, 0), rp(2, 2)));
}

TEST_CASE("box predicates") {
  RPoint lo = rp(0, 0), hi = rp(4, 4);
  CHECK(segment_intersects_box(rp(-1, 2), rp(5, 2), lo, hi, 2));
  CHECK(segment_intersects_box(rp(2, 2), rp(3, 3), lo, hi, 2));
  CHECK_FALSE(segment_intersects_box(rp(5, 5), rp(6, 9), lo, hi, 2));
  CHECK_FALSE(segment_intersects_box(rp(-2, -1), rp(-1, -2), lo, hi, 2));
  CHECK(segment_intersects_box(rp(-1, 5), rp(5, -1), lo, hi, 2));
  CHECK(dist2_point_box(rp(6, 2), lo, hi, 2) == 4);
  CHECK(dist2_point_box(rp(2, 2), lo, hi, 2) == 0);
  CHECK(dist2_point_box(rp(-3, -4), lo, hi, 2) == 25);
  CHECK(dist2_box_segment(lo, hi, rp(6, 0), rp(6, 4), 2) == 4);
  CHECK(dist2_box_segment(lo, hi, rp(5, 5), rp(9, 5), 2) == 2);  // nearest at corner
  CHECK(dist2_box_segment(lo, hi, rp(2, 2), rp(9, 9), 2) == 0);
  // 3D: segment passing above a cube face.
  CHECK(dist2_box_segment(rp(0, 0, 0), rp(2, 2, 2), rp(-1, 1, 3), rp(3, 1, 3), 3) == 1);
}

TEST_CASE("sqrt lower bounds") {
  CHECK(sqrt_lower(0) == 0);
  CHECK(sqrt_lower(4) == 2);
  CHECK(sqrt_lower(Rat(1, 4)) == Rat(1, 2));
  Rat r = sqrt_lower(2);
  CHECK(r * r <= 2);
  Rat bump = r + Rat(1, Coord(1) << 30);
  CHECK(bump * bump > 2);
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    Rat x(int(rng() % 10000) + 1, int(rng() % 100) + 1);
    Rat s = sqrt_lower(x);
    CHECK(s * s <= x);
    Rat s2 = s + Rat(1, Coord(1) << 28);
    CHECK(s2 * s2 > x);
  }
}

TEST_CASE("angular order") {
  std::vector<RPoint> dirs = {rp(1, 0),  rp(2, 1),  rp(0, 1),  rp(-1, 1),
                              rp(-1, 0), rp(-2, -1), rp(0, -1), rp(1, -1)};
  for (std::size_t i = 0; i + 1 < dirs.size(); ++i) {
    CHECK(angular_less(dirs[i], dirs[i + 1]));
    CHECK_FALSE(angular_less(dirs[i + 1], dirs[i]));
  }
  CHECK_FALSE(angular_less(rp(1, 0), rp(2, 0)));  // same direction: neither less
  CHECK_FALSE(angular_less(rp(2, 0), rp(1, 0)));
}

TEST_CASE("chebyshev clipping") {
  RPoint out;
  REQUIRE(clip_outside_chebyshev(rp(0, 0), rp(10, 4), 5, 2, out));
  CHECK(out == rp(5, 2));
  REQUIRE(clip_outside_chebyshev(rp(1, 1), rp(1, 9), 2, 2, out));
  CHECK(out == rp(1, 3));
  CHECK_FALSE(clip_outside_chebyshev(rp(0, 0), rp(3, -2), 5, 2, out));
  // 3D clip dominated by the z axis.
  REQUIRE(clip_outside_chebyshev(rp(0, 0, 0), rp(2, 2, 8), 4, 3, out));
  CHECK(out == rp(1, 1, 4));
}
