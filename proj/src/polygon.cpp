#include "zok/polygon.hpp"

#include <algorithm>

#include "zok/error.hpp"

namespace zok {

PiecewiseLinear::PiecewiseLinear(std::vector<ExtRat> breakpoints, std::vector<ExtRat> values)
    : t_(std::move(breakpoints)), v_(std::move(values)) {
  if (t_.empty() || t_.size() != v_.size()) throw PreconditionFailed("piecewise-linear: bad breakpoint data");
  for (std::size_t k = 1; k < t_.size(); ++k)
    if (!(t_[k - 1] < t_[k])) throw PreconditionFailed("piecewise-linear: breakpoints not strictly increasing");
}

ExtRat PiecewiseLinear::operator()(const ExtRat& t) const {
  if (t < t_.front() || t > t_.back()) throw PreconditionFailed("piecewise-linear: argument outside domain");
  auto it = std::lower_bound(t_.begin(), t_.end(), t);
  std::size_t k = static_cast<std::size_t>(it - t_.begin());
  if (t_[k] == t) return v_[k];
  return v_[k - 1] + (t - t_[k - 1]) * (v_[k] - v_[k - 1]) / (t_[k] - t_[k - 1]);
}

std::vector<ExtRat> PiecewiseLinear::slopes() const {
  std::vector<ExtRat> s;
  for (std::size_t k = 1; k < t_.size(); ++k) s.push_back((v_[k] - v_[k - 1]) / (t_[k] - t_[k - 1]));
  return s;
}

bool PiecewiseLinear::convex() const {
  auto s = slopes();
  return std::is_sorted(s.begin(), s.end());
}

bool PiecewiseLinear::concave() const {
  auto s = slopes();
  return std::is_sorted(s.rbegin(), s.rend());
}

ExtRat cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

ExtRat shoelace_area(const Polygon& p) {
  ExtRat twice;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point& a = p[i];
    const Point& b = p[(i + 1) % p.size()];
    twice += a.x * b.y - b.x * a.y;
  }
  return twice / ExtRat(2);
}

namespace {

bool lower_left(const Point& a, const Point& b) { return a.y < b.y || (a.y == b.y && a.x < b.x); }

// 0 for directions in [0, pi), 1 for [pi, 2 pi).
int half(const Point& v) { return (v.y.sign() < 0 || (v.y.sign() == 0 && v.x.sign() < 0)) ? 1 : 0; }

bool angle_less(const Point& u, const Point& v) {
  int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  return (u.x * v.y - u.y * v.x).sign() > 0;
}

Point sub(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point add(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }

Polygon rotate_to_lowest(Polygon p) {
  auto it = std::min_element(p.begin(), p.end(), lower_left);
  std::rotate(p.begin(), it, p.end());
  return p;
}

}  // namespace

Polygon normalize_convex(const Polygon& input) {
  Polygon p;
  for (const Point& v : input)
    if (p.empty() || !(p.back() == v)) p.push_back(v);
  while (p.size() > 1 && p.front() == p.back()) p.pop_back();
  if (p.size() <= 1) return p;

  bool collinear = true;
  for (std::size_t k = 2; k < p.size() && collinear; ++k) collinear = cross(p[0], p[1], p[k]).sign() == 0;
  if (collinear) {
    auto [lo, hi] = std::minmax_element(p.begin(), p.end(), lower_left);
    return Polygon{*lo, *hi};
  }

  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < p.size() && p.size() > 2; ++i) {
      const Point& prev = p[(i + p.size() - 1) % p.size()];
      const Point& next = p[(i + 1) % p.size()];
      int c = cross(prev, p[i], next).sign();
      if (c < 0) throw NonConvexPolygon("polygon has a reflex vertex");
      if (c == 0) {
        Point d1 = sub(p[i], prev), d2 = sub(next, p[i]);
        if ((d1.x * d2.x + d1.y * d2.y).sign() < 0) throw NonConvexPolygon("polygon folds back on itself");
        p.erase(p.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  p = rotate_to_lowest(std::move(p));
  // Edge directions of a simple convex polygon increase through one turn.
  for (std::size_t i = 1; i < p.size(); ++i) {
    Point e0 = sub(p[i], p[i - 1]);
    Point e1 = sub(p[(i + 1) % p.size()], p[i]);
    if (!angle_less(e0, e1)) throw NonConvexPolygon("polygon winds more than once");
  }
  return p;
}

Polygon minkowski_sum(const Polygon& p_in, const Polygon& q_in) {
  Polygon p = normalize_convex(p_in);
  Polygon q = normalize_convex(q_in);
  if (p.empty() || q.empty()) return {};
  auto edges = [](const Polygon& poly) {
    std::vector<Point> e;
    if (poly.size() < 2) return e;
    for (std::size_t i = 0; i < poly.size(); ++i) e.push_back(sub(poly[(i + 1) % poly.size()], poly[i]));
    return e;
  };
  std::vector<Point> ep = edges(p), eq = edges(q);
  Polygon out{add(p[0], q[0])};
  std::size_t i = 0, j = 0;
  while (i < ep.size() || j < eq.size()) {
    Point step;
    if (j == eq.size() || (i < ep.size() && angle_less(ep[i], eq[j]))) {
      step = ep[i++];
    } else if (i == ep.size() || angle_less(eq[j], ep[i])) {
      step = eq[j++];
    } else {
      step = add(ep[i++], eq[j++]);
    }
    out.push_back(add(out.back(), step));
  }
  if (out.size() > 1) {
    if (!(out.back() == out.front())) throw InvariantViolation("minkowski sum did not close");
    out.pop_back();
  }
  return normalize_convex(out);
}

bool polygon_contains(const Polygon& p_in, const Polygon& q) {
  Polygon p = normalize_convex(p_in);
  if (p.empty()) return q.empty();
  if (p.size() == 1) return std::all_of(q.begin(), q.end(), [&](const Point& v) { return v == p[0]; });
  if (p.size() == 2) {
    return std::all_of(q.begin(), q.end(), [&](const Point& v) {
      if (cross(p[0], p[1], v).sign() != 0) return false;
      Point d = sub(p[1], p[0]), w = sub(v, p[0]);
      ExtRat along = d.x * w.x + d.y * w.y;
      return along.sign() >= 0 && along <= d.x * d.x + d.y * d.y;
    });
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point& a = p[i];
    const Point& b = p[(i + 1) % p.size()];
    for (const Point& v : q)
      if (cross(a, b, v).sign() < 0) return false;
  }
  return true;
}

Polygon scale(const Polygon& p, const Rat& c) {
  Polygon out;
  for (const Point& v : p) out.push_back({v.x * ExtRat(c), v.y * ExtRat(c)});
  return out;
}

bool same_polygon(const Polygon& p, const Polygon& q) { return normalize_convex(p) == normalize_convex(q); }

}  // namespace zok
