#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "gridobs/core.hpp"

// Exact geometric predicates over rational coordinates. Everything is
// squared-distance based so no radicals ever appear; sqrt_lower provides a
// rational lower bound when a length (not its square) is needed.

namespace gridobs {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

struct RPoint {
  Rat x, y, z;
  friend bool operator==(const RPoint&, const RPoint&) = default;
  Rat operator[](int axis) const { return axis == 0 ? x : axis == 1 ? y : z; }
};

inline RPoint rpoint(const GridPoint& p) { return {Rat(p.x), Rat(p.y), Rat(p.z)}; }
inline RPoint operator-(const RPoint& a, const RPoint& b) {
  return {a.x - b.x, a.y - b.y, a.z - b.z};
}
inline RPoint operator+(const RPoint& a, const RPoint& b) {
  return {a.x + b.x, a.y + b.y, a.z + b.z};
}
inline RPoint operator*(const Rat& s, const RPoint& a) {
  return {s * a.x, s * a.y, s * a.z};
}
inline Rat dot(const RPoint& a, const RPoint& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}
inline RPoint cross(const RPoint& a, const RPoint& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline Rat cross2(const RPoint& a, const RPoint& b) { return a.x * b.y - a.y * b.x; }
inline Rat norm2(const RPoint& a) { return dot(a, a); }

Rat dist2_point_point(const RPoint& a, const RPoint& b);
Rat dist2_point_segment(const RPoint& p, const RPoint& a, const RPoint& b);
Rat dist2_segment_segment(const RPoint& a, const RPoint& b, const RPoint& c,
                          const RPoint& d);

// p on the closed segment [a,b]?
bool point_on_segment(const RPoint& p, const RPoint& a, const RPoint& b);
// p strictly inside (on the segment, not an endpoint)?
bool point_in_segment_interior(const RPoint& p, const RPoint& a, const RPoint& b);

// Segments conflict if they touch anywhere other than a shared endpoint.
// Works in 2D and 3D.
bool segments_conflict(const RPoint& a, const RPoint& b, const RPoint& c,
                       const RPoint& d);

// Solid axis-aligned box [lo,hi] (per-axis inclusive), dim 2 or 3.
bool segment_intersects_box(const RPoint& a, const RPoint& b, const RPoint& lo,
                            const RPoint& hi, int dim);
Rat dist2_point_box(const RPoint& p, const RPoint& lo, const RPoint& hi, int dim);
Rat dist2_box_segment(const RPoint& lo, const RPoint& hi, const RPoint& a,
                      const RPoint& b, int dim);

// Largest rational r (within a 2^-32 relative shave) with r*r <= x.
Rat sqrt_lower(const Rat& x);

// Strict counter-clockwise angular order of directions around the origin
// (half-plane split, then cross product). Zero vectors are not allowed.
bool angular_less(const RPoint& a, const RPoint& b);

// Portion of segment v->e outside the Chebyshev box of half-side h around v
// (v must be the box center). Returns false if the whole segment is inside.
bool clip_outside_chebyshev(const RPoint& v, const RPoint& e, const Rat& h, int dim,
                            RPoint& out_start);

}  // namespace gridobs
