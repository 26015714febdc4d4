#include <doctest.h>

#include "support.hpp"
#include "zok/error.hpp"
#include "zok/okounkov.hpp"
#include "zok/oracle.hpp"
#include "zok/zariski.hpp"

using namespace zt;

namespace {

Point pt(long x, long y) { return {ExtRat(Rat(x)), ExtRat(Rat(y))}; }

Polygon poly(std::initializer_list<std::pair<long, long>> ps) {
  Polygon out;
  for (auto [x, y] : ps) out.push_back(pt(x, y));
  return out;
}

PiecewiseLinear pl(std::initializer_list<std::pair<Rat, Rat>> pts) {
  std::vector<ExtRat> t, y;
  for (const auto& [a, b] : pts) {
    t.emplace_back(a);
    y.emplace_back(b);
  }
  return PiecewiseLinear(t, y);
}

const SurfaceModel& bl() {
  static const SurfaceModel m = fixture("blowup1");
  return m;
}

std::vector<SurfaceModel> all_fixtures() {
  return {fixture("p2"), fixture("blowup1"), fixture("blowup2"), fixture("hirzebruch2")};
}

}  // namespace

TEST_CASE("piecewise-linear evaluation and shape") {
  PiecewiseLinear f = pl({{0, 0}, {1, 1}, {3, 2}});
  CHECK(f(ExtRat(Rat(1, 2))) == ExtRat(Rat(1, 2)));
  CHECK(f(ExtRat(2)) == ExtRat(Rat(3, 2)));
  CHECK(f.concave());
  CHECK_FALSE(f.convex());
  CHECK_THROWS_AS(f(ExtRat(4)), PreconditionFailed);
  CHECK_THROWS_AS(pl({{0, 0}, {0, 1}}), PreconditionFailed);
}

TEST_CASE("shoelace and normalization") {
  Polygon tri = poly({{0, 0}, {1, 0}, {0, 1}});
  CHECK(shoelace_area(tri) == ExtRat(Rat(1, 2)));
  CHECK(normalize_convex(poly({{1, 0}, {0, 1}, {0, 0}})) == tri);
  CHECK(normalize_convex(poly({{0, 0}, {1, 0}, {2, 0}, {0, 2}, {0, 1}})) == poly({{0, 0}, {2, 0}, {0, 2}}));
  CHECK(normalize_convex(poly({{0, 0}, {0, 0}, {0, 0}})) == poly({{0, 0}}));
  CHECK(normalize_convex(poly({{0, 1}, {0, 0}, {0, 3}})) == poly({{0, 0}, {0, 3}}));
  CHECK_THROWS_AS(normalize_convex(poly({{0, 0}, {0, 1}, {1, 0}})), NonConvexPolygon);
  CHECK_THROWS_AS(normalize_convex(poly({{0, 0}, {2, 0}, {1, 1}, {2, 2}, {0, 2}})), NonConvexPolygon);
}

TEST_CASE("minkowski sum and containment") {
  Polygon tri = poly({{0, 0}, {1, 0}, {0, 1}});
  CHECK(same_polygon(minkowski_sum(tri, tri), scale(tri, Rat(2))));
  Polygon sq = poly({{0, 0}, {1, 0}, {1, 1}, {0, 1}});
  CHECK(same_polygon(minkowski_sum(sq, poly({{0, 0}, {1, 1}})), poly({{0, 0}, {1, 0}, {2, 1}, {2, 2}, {1, 2}, {0, 1}})));
  CHECK_FALSE(polygon_contains(sq, poly({{2, 2}})));
  CHECK(polygon_contains(sq, poly({{1, 1}})));
  CHECK(polygon_contains(poly({{0, 0}, {0, 2}}), poly({{0, 1}})));
  CHECK_FALSE(polygon_contains(poly({{0, 0}, {0, 2}}), poly({{0, 3}})));
}

TEST_CASE("minkowski sum of random hulls contains all vertex sums") {
  Gen g(9);
  auto random_convex = [&](int n) {
    Polygon p;
    for (int k = 0; k < n; ++k) {
      long x = g.integer(-6, 6);
      Point q = pt(x, g.integer(-6, 6));
      if (std::find(p.begin(), p.end(), q) == p.end()) p.push_back(q);
    }
    Polygon hull;
    std::size_t start = 0;
    for (std::size_t i = 1; i < p.size(); ++i)
      if (p[i].x < p[start].x || (p[i].x == p[start].x && p[i].y < p[start].y)) start = i;
    std::size_t cur = start;
    do {
      hull.push_back(p[cur]);
      std::size_t nxt = (cur + 1) % p.size();
      for (std::size_t i = 0; i < p.size(); ++i) {
        int c = cross(p[cur], p[nxt], p[i]).sign();
        if (c < 0) nxt = i;
      }
      cur = nxt;
    } while (cur != start && hull.size() <= p.size());
    return hull;
  };
  for (int k = 0; k < 100; ++k) {
    Polygon p = random_convex(6), q = random_convex(5);
    Polygon s;
    try {
      s = minkowski_sum(p, q);
    } catch (const NonConvexPolygon&) {
      FAIL("hull construction produced a non-convex polygon");
      continue;
    }
    CHECK(shoelace_area(s) >= shoelace_area(normalize_convex(p)) + shoelace_area(normalize_convex(q)));
    // Every vertex sum lies in P + Q.
    Polygon sums;
    for (const Point& a : p)
      for (const Point& b : q) sums.push_back({a.x + b.x, a.y + b.y});
    CHECK(polygon_contains(s, sums));
  }
}

TEST_CASE("segment_chambers examples") {
  const std::size_t e = idx(bl(), "E"), lt = idx(bl(), "Lt");
  SurfaceModel p2 = fixture("p2");
  auto ch = segment_chambers(p2, v({1}), 0);
  REQUIRE(ch.size() == 1);
  CHECK(ch[0].t_lo == ExtRat(0));
  CHECK(ch[0].t_hi == ExtRat(1));
  CHECK(ch[0].support.empty());
  CHECK(ch[0].z0 == v({1}));
  CHECK(ch[0].z1 == v({-1}));

  ch = segment_chambers(bl(), v({2, 0}), lt);
  REQUIRE(ch.size() == 1);
  CHECK(ch[0].t_hi == ExtRat(2));
  CHECK(ch[0].support == std::vector<std::size_t>{e});
  CHECK(ch[0].z0 == v({2, 0}));
  CHECK(ch[0].z1 == v({-1, 0}));
  CHECK(ch[0].coeff0 == std::vector<Rat>{Rat(0)});
  CHECK(ch[0].coeff1 == std::vector<Rat>{Rat(1)});

  ch = segment_chambers(bl(), v({1, 1}), e);
  REQUIRE(ch.size() == 2);
  CHECK(ch[0].t_hi == ExtRat(1));
  CHECK(ch[0].support == std::vector<std::size_t>{e});
  CHECK(ch[0].z0 == v({1, 0}));
  CHECK(ch[0].z1 == v({0, 0}));
  CHECK(ch[1].t_lo == ExtRat(1));
  CHECK(ch[1].t_hi == ExtRat(2));
  CHECK(ch[1].support.empty());
  CHECK(ch[1].z0 + ch[1].z1 == v({1, 0}));

  CHECK_THROWS_AS(segment_chambers(bl(), v({1, -1}), e), NotBig);
  CHECK_THROWS_AS(segment_chambers(bl(), v({2, 0}), 9), UnknownCurve);
}

TEST_CASE("terminal endpoint can be a quadratic irrational") {
  SurfaceModel m = root_two_model();
  const std::size_t x = idx(m, "X");
  auto ch = segment_chambers(m, v({1, 0}), x);
  REQUIRE(ch.size() == 1);
  ExtRat s = ExtRat::sqrt(Rat(1, 2));
  CHECK(ch[0].t_hi == s);
  OkounkovPolygon p = okounkov_polygon(m, v({1, 0}), FlagSpec{x, {}});
  CHECK(p.s == s);
  CHECK(p.vertices.size() == 3);
  CHECK(p.vertices[2].y == ExtRat(2) * s);
  CHECK(p.area == ExtRat(Rat(1, 2)));
  CHECK(area_by_integration(p.f, p.g) == p.area);
}

TEST_CASE("irrational slopes on generated models keep the volume identity") {
  int irrational = 0;
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    SurfaceModel m;
    try {
      m = random_model({seed, 2 + seed % 2, 4, 2});
    } catch (const GenerationFailure&) {
      continue;
    }
    // Rescale the gram so square roots do not always cancel.
    Matrix g = m.gram.matrix();
    for (std::size_t i = 1; i < m.rank(); ++i) g(i, i) = -2;
    m.gram = GramForm(g);
    if (!validate_model(m).ok()) continue;
    for (const ClassVec& a : integer_grid(m.rank(), 2)) {
      if (classify(m, a).kind != ClassKind::Big) continue;
      for (std::size_t c = 0; c < m.curves.size(); ++c) {
        OkounkovPolygon p = okounkov_polygon(m, a, FlagSpec{c, {}});
        irrational += !p.s.is_rational();
        CHECK(ExtRat(2) * p.area == ExtRat(volume(m, a)));
        CHECK(area_by_integration(p.f, p.g) == p.area);
      }
    }
  }
  CHECK(irrational > 0);
}

TEST_CASE("slopes examples") {
  const std::size_t e = idx(bl(), "E"), lt = idx(bl(), "Lt");
  Slopes s = slopes(bl(), v({1, 0}), e);
  CHECK(s.a == ExtRat(0));
  CHECK(s.s == ExtRat(1));
  s = slopes(bl(), v({1, 1}), e);
  CHECK(s.a == ExtRat(1));
  CHECK(s.s == ExtRat(2));
  s = slopes(bl(), v({2, 0}), lt);
  CHECK(s.a == ExtRat(0));
  CHECK(s.s == ExtRat(2));
}

TEST_CASE("envelopes examples") {
  const std::size_t e = idx(bl(), "E"), lt = idx(bl(), "Lt");
  Envelopes env = envelopes(bl(), v({2, 0}), FlagSpec{lt, {}});
  CHECK(env.f.values() == std::vector<ExtRat>{0, 0});
  CHECK(env.g.breakpoints() == std::vector<ExtRat>{0, 2});
  CHECK(env.g.values() == std::vector<ExtRat>{2, 0});

  env = envelopes(bl(), v({2, 0}), FlagSpec{lt, {{e, 1}}});
  CHECK(env.f.values() == std::vector<ExtRat>{0, 2});
  CHECK(env.g.values() == std::vector<ExtRat>{2, 2});

  env = envelopes(bl(), v({1, 1}), FlagSpec{e, {}});
  CHECK(env.f.breakpoints() == std::vector<ExtRat>{1, 2});
  CHECK(env.f.values() == std::vector<ExtRat>{0, 0});
  CHECK(env.g.values() == std::vector<ExtRat>{0, 1});

  CHECK_THROWS_AS(envelopes(bl(), v({2, 0}), FlagSpec{lt, {{e, 2}}}), InvalidFlag);
  CHECK_THROWS_AS(envelopes(bl(), v({2, 0}), FlagSpec{lt, {{lt, 0}}}), InvalidFlag);
}

TEST_CASE("okounkov_polygon examples") {
  const std::size_t e = idx(bl(), "E"), lt = idx(bl(), "Lt");
  OkounkovPolygon p = okounkov_polygon(fixture("p2"), v({1}), FlagSpec{0, {}});
  CHECK(p.vertices == poly({{0, 0}, {1, 0}, {0, 1}}));
  CHECK(p.area == ExtRat(Rat(1, 2)));

  p = okounkov_polygon(bl(), v({1, 0}), FlagSpec{e, {}});
  CHECK(p.vertices == poly({{0, 0}, {1, 0}, {1, 1}}));
  CHECK(p.area == ExtRat(Rat(1, 2)));

  p = okounkov_polygon(bl(), v({1, 1}), FlagSpec{e, {}});
  CHECK(p.vertices == poly({{1, 0}, {2, 0}, {2, 1}}));
  CHECK(p.a == ExtRat(1));
  CHECK(p.s == ExtRat(2));
  CHECK(p.area == ExtRat(Rat(1, 2)));

  p = okounkov_polygon(bl(), v({2, 0}), FlagSpec{lt, {}});
  CHECK(p.vertices == poly({{0, 0}, {2, 0}, {0, 2}}));
  CHECK(p.area == ExtRat(2));
}

TEST_CASE("restricted_body examples") {
  const std::size_t e = idx(bl(), "E"), lt = idx(bl(), "Lt");
  CHECK(restricted_body(bl(), v({2, -1}), FlagSpec{lt, {}}) == Interval{0, 1});
  CHECK(restricted_body(bl(), v({2, 1}), FlagSpec{lt, {{e, 1}}}) == Interval{1, 3});
  CHECK_THROWS_AS(restricted_body(bl(), v({2, 0}), FlagSpec{e, {}}), FlagInNonKahlerLocus);
}

TEST_CASE("restricted body is the t = 0 slice of the polygon") {
  for (const SurfaceModel& m : all_fixtures())
    for (const ClassVec& a : integer_grid(m.rank(), 2)) {
      if (classify(m, a).kind != ClassKind::Big) continue;
      auto nk = non_kahler_curves(m, a);
      for (std::size_t c = 0; c < m.curves.size(); ++c) {
        if (std::binary_search(nk.begin(), nk.end(), c)) continue;
        for (const FlagSpec& flag : flag_choices(m, c)) {
          Interval iv = restricted_body(m, a, flag);
          OkounkovPolygon p = okounkov_polygon(m, a, flag);
          REQUIRE(p.a == ExtRat(0));
          CHECK(p.f(ExtRat(0)) == ExtRat(iv.lo));
          CHECK(p.g(ExtRat(0)) == ExtRat(iv.hi));
        }
      }
    }
}

TEST_CASE("boundary_body examples") {
  const std::size_t e = idx(bl(), "E"), lt = idx(bl(), "Lt"), l = idx(bl(), "L");
  CHECK(boundary_body(bl(), v({0, 1}), FlagSpec{l, {}}) == BoundaryBody{BodyKind::Point, 0, 0});
  CHECK(boundary_body(bl(), v({0, 1}), FlagSpec{lt, {{e, 1}}}) == BoundaryBody{BodyKind::Point, 1, 1});
  CHECK(boundary_body(bl(), v({1, -1}), FlagSpec{l, {}}) == BoundaryBody{BodyKind::Segment, 0, 1});
  CHECK_THROWS_AS(boundary_body(bl(), v({2, 0}), FlagSpec{l, {}}), NotOnBoundary);
  CHECK_THROWS_AS(boundary_body(bl(), v({0, 1}), FlagSpec{e, {}}), HypothesisViolated);
  CHECK_THROWS_AS(boundary_body(bl(), v({1, -1}), FlagSpec{lt, {}}), HypothesisViolated);
  CHECK_THROWS_AS(boundary_body(bl(), v({-1, 0}), FlagSpec{l, {}}), NotPseudoEffective);
}

TEST_CASE("polygon invariants on fixture grids") {
  for (const SurfaceModel& m : all_fixtures())
    for (const ClassVec& a : integer_grid(m.rank(), 2)) {
      if (classify(m, a).kind != ClassKind::Big) continue;
      for (std::size_t c = 0; c < m.curves.size(); ++c) {
        auto chambers = segment_chambers(m, a, c);
        for (std::size_t k = 1; k < chambers.size(); ++k) {
          const auto& l = chambers[k - 1];
          const auto& r = chambers[k];
          REQUIRE(l.t_hi == r.t_lo);
          Rat t = l.t_hi.rational();
          CHECK(l.z0 + t * l.z1 == r.z0 + t * r.z1);
          for (std::size_t i = 0; i < m.curves.size(); ++i) CHECK(l.coeff_of(i, t) == r.coeff_of(i, t));
        }
        for (const FlagSpec& flag : flag_choices(m, c)) {
          OkounkovPolygon p = okounkov_polygon(m, a, flag);
          CHECK(p.vertices.size() <= 2 * m.rank() + 2);
          CHECK(p.f.convex());
          CHECK(p.g.concave());
          CHECK(ExtRat(2) * p.area == ExtRat(volume(m, a)));
          CHECK(area_by_integration(p.f, p.g) == p.area);
          if (is_nef_in_model(m, m.curves[c].cls)) {
            CHECK(p.a == ExtRat(0));
            auto fs = p.f.slopes();
            CHECK(std::all_of(fs.begin(), fs.end(), [](const ExtRat& s) { return s.sign() >= 0; }));
          }
          for (Rat k : {Rat(2), Rat(1, 2)}) {
            OkounkovPolygon q = okounkov_polygon(m, k * a, flag);
            CHECK(same_polygon(q.vertices, scale(p.vertices, k)));
          }
        }
      }
    }
}
