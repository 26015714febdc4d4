#pragma once

// Exact planar geometry over Q or a single real quadratic field.

#include <vector>

#include "zok/quadratic.hpp"

namespace zok {

struct Point {
  ExtRat x;
  ExtRat y;
  friend bool operator==(const Point&, const Point&) = default;
};

// Continuous piecewise-linear function given by its values at strictly
// increasing breakpoints, linear in between.
class PiecewiseLinear {
 public:
  PiecewiseLinear() = default;
  PiecewiseLinear(std::vector<ExtRat> breakpoints, std::vector<ExtRat> values);

  const std::vector<ExtRat>& breakpoints() const { return t_; }
  const std::vector<ExtRat>& values() const { return v_; }
  const ExtRat& lo() const { return t_.front(); }
  const ExtRat& hi() const { return t_.back(); }

  // Throws PreconditionFailed outside [lo, hi].
  ExtRat operator()(const ExtRat& t) const;
  // Slope on each of the breakpoints.size() - 1 pieces.
  std::vector<ExtRat> slopes() const;
  bool convex() const;
  bool concave() const;

 private:
  std::vector<ExtRat> t_;
  std::vector<ExtRat> v_;
};

// Counter-clockwise vertex list of a convex polygon; a single point or a
// segment are allowed as degenerate cases.
using Polygon = std::vector<Point>;

ExtRat cross(const Point& o, const Point& a, const Point& b);

// Signed shoelace area (positive for counter-clockwise input).
ExtRat shoelace_area(const Polygon& p);

// Drops repeated and collinear vertices and rotates the list to start at the
// lowest (then leftmost) vertex. Throws NonConvexPolygon unless the input is
// a counter-clockwise convex chain.
Polygon normalize_convex(const Polygon& p);

Polygon minkowski_sum(const Polygon& p, const Polygon& q);

// True iff every vertex of q lies in p.
bool polygon_contains(const Polygon& p, const Polygon& q);

Polygon scale(const Polygon& p, const Rat& c);

bool same_polygon(const Polygon& p, const Polygon& q);

}  // namespace zok
