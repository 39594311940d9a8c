#include "gridobs/rational_geom.hpp"

#include <algorithm>

namespace gridobs {

Rat dist2_point_point(const RPoint& a, const RPoint& b) { return norm2(a - b); }

Rat dist2_point_segment(const RPoint& p, const RPoint& a, const RPoint& b) {
  RPoint u = b - a;
  Rat uu = norm2(u);
  if (uu == 0) return dist2_point_point(p, a);
  Rat t = dot(p - a, u) / uu;
  if (t < 0) t = 0;
  if (t > 1) t = 1;
  return norm2(p - (a + t * u));
}

Rat dist2_segment_segment(const RPoint& a, const RPoint& b, const RPoint& c,
                          const RPoint& d) {
  RPoint u = b - a, v = d - c, w = a - c;
  Rat A = dot(u, u), B = dot(u, v), C = dot(v, v);
  if (A == 0 && C == 0) return dist2_point_point(a, c);
  if (A == 0) return dist2_point_segment(a, c, d);
  if (C == 0) return dist2_point_segment(c, a, b);
  Rat best = dist2_point_segment(a, c, d);
  best = std::min(best, dist2_point_segment(b, c, d));
  best = std::min(best, dist2_point_segment(c, a, b));
  best = std::min(best, dist2_point_segment(d, a, b));
  Rat D = dot(u, w), E = dot(v, w);
  Rat denom = A * C - B * B;
  if (denom != 0) {
    // Unconstrained minimum of |w + s*u - t*v|^2.
    Rat s = (B * E - C * D) / denom;
    Rat t = (A * E - B * D) / denom;
    if (s >= 0 && s <= 1 && t >= 0 && t <= 1)
      best = std::min(best, norm2(w + s * u - t * v));
  }
  return best;
}

bool point_on_segment(const RPoint& p, const RPoint& a, const RPoint& b) {
  return dist2_point_segment(p, a, b) == 0;
}

bool point_in_segment_interior(const RPoint& p, const RPoint& a, const RPoint& b) {
  return p != a && p != b && point_on_segment(p, a, b);
}

bool segments_conflict(const RPoint& a, const RPoint& b, const RPoint& c,
                       const RPoint& d) {
  int shared = int(a == c) + int(a == d) + int(b == c) + int(b == d);
  if (shared >= 2) return true;  // identical (or degenerate) segments
  if (shared == 0) return dist2_segment_segment(a, b, c, d) == 0;
  // Orient both segments to leave the shared endpoint.
  RPoint p = (a == c || a == d) ? a : b;
  RPoint e1 = (p == a) ? b : a;
  RPoint e2 = (p == c) ? d : c;
  RPoint d1 = e1 - p, d2 = e2 - p;
  RPoint cr = cross(d1, d2);
  if (cr.x != 0 || cr.y != 0 || cr.z != 0) return false;  // only touch at p
  return dot(d1, d2) > 0;  // collinear: conflict iff they overlap beyond p
}

bool segment_intersects_box(const RPoint& a, const RPoint& b, const RPoint& lo,
                            const RPoint& hi, int dim) {
  Rat t0 = 0, t1 = 1;
  for (int axis = 0; axis < dim; ++axis) {
    Rat d = b[axis] - a[axis];
    if (d == 0) {
      if (a[axis] < lo[axis] || a[axis] > hi[axis]) return false;
      continue;
    }
    Rat ta = (lo[axis] - a[axis]) / d;
    Rat tb = (hi[axis] - a[axis]) / d;
    if (ta > tb) std::swap(ta, tb);
    t0 = std::max(t0, ta);
    t1 = std::min(t1, tb);
    if (t0 > t1) return false;
  }
  return true;
}

Rat dist2_point_box(const RPoint& p, const RPoint& lo, const RPoint& hi, int dim) {
  Rat d2 = 0;
  for (int axis = 0; axis < dim; ++axis) {
    Rat c = p[axis];
    if (c < lo[axis]) {
      Rat d = lo[axis] - c;
      d2 += d * d;
    } else if (c > hi[axis]) {
      Rat d = c - hi[axis];
      d2 += d * d;
    }
  }
  return d2;
}

Rat dist2_box_segment(const RPoint& lo, const RPoint& hi, const RPoint& a,
                      const RPoint& b, int dim) {
  if (segment_intersects_box(a, b, lo, hi, dim)) return 0;
  Rat best = std::min(dist2_point_box(a, lo, hi, dim), dist2_point_box(b, lo, hi, dim));
  if (dim == 2) {
    RPoint c00 = lo, c11 = hi;
    RPoint c10{hi.x, lo.y, 0}, c01{lo.x, hi.y, 0};
    best = std::min(best, dist2_segment_segment(a, b, c00, c10));
    best = std::min(best, dist2_segment_segment(a, b, c10, c11));
    best = std::min(best, dist2_segment_segment(a, b, c11, c01));
    best = std::min(best, dist2_segment_segment(a, b, c01, c00));
    return best;
  }
  // 3D: all 12 box edges. (Endpoint-vs-face cases are covered by the two
  // point-box distances above; interior-vs-face minima reduce to edges.)
  for (int axis = 0; axis < 3; ++axis) {
    int u = (axis + 1) % 3, v = (axis + 2) % 3;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        RPoint e0, e1;
        auto set = [&](RPoint& p, Rat main) {
          Rat coords[3];
          coords[axis] = main;
          coords[u] = i ? hi[u] : lo[u];
          coords[v] = j ? hi[v] : lo[v];
          p = {coords[0], coords[1], coords[2]};
        };
        set(e0, lo[axis]);
        set(e1, hi[axis]);
        best = std::min(best, dist2_segment_segment(a, b, e0, e1));
      }
  }
  return best;
}

Rat sqrt_lower(const Rat& x) {
  if (x < 0) throw invalid_input("sqrt of negative value");
  if (x == 0) return 0;
  BigInt n = numerator(x), d = denominator(x);
  // sqrt(n/d) = sqrt(n*d)/d; floor the integer sqrt after scaling by 2^64.
  BigInt scaled = n * d << 128;
  BigInt root = sqrt(scaled);  // floor
  return Rat(root, d << 64);
}

bool angular_less(const RPoint& a, const RPoint& b) {
  auto half = [](const RPoint& p) {
    return (p.y > 0 || (p.y == 0 && p.x > 0)) ? 0 : 1;
  };
  int ha = half(a), hb = half(b);
  if (ha != hb) return ha < hb;
  return cross2(a, b) > 0;
}

bool clip_outside_chebyshev(const RPoint& v, const RPoint& e, const Rat& h, int dim,
                            RPoint& out_start) {
  RPoint d = e - v;
  Rat m = 0;
  for (int axis = 0; axis < dim; ++axis) {
    Rat c = d[axis];
    if (c < 0) c = -c;
    m = std::max(m, c);
  }
  if (m <= h) return false;  // endpoint inside the box
  Rat t = h / m;
  out_start = v + t * d;
  return true;
}

}  // namespace gridobs
