#include <doctest.h>

#include <cmath>

#include "support.hpp"
#include "zok/error.hpp"
#include "zok/quadratic.hpp"

using namespace zt;

TEST_CASE("parse_rat accepts integers, fractions and signs") {
  CHECK(parse_rat("3") == Rat(3));
  CHECK(parse_rat(" -6/4 ") == Rat(-3, 2));
  CHECK(parse_rat("+1/3") == Rat(1, 3));
  CHECK(to_string(Rat(-3, 2)) == "-3/2");
  CHECK(to_string(Rat(4)) == "4");
  CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rat("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rat(""), ParseError);
  CHECK_THROWS_AS(parse_rat("2/-3"), ParseError);
}

TEST_CASE("parse and print round-trip on random rationals") {
  Gen g(11);
  for (int k = 0; k < 500; ++k) {
    Rat r = g.rat(1000);
    CHECK(parse_rat(to_string(r)) == r);
  }
}

TEST_CASE("sqrt pulls out square factors") {
  ExtRat r = ExtRat::sqrt(Rat(12));
  CHECK(r.p() == 0);
  CHECK(r.q() == 2);
  CHECK(r.d() == 3);
  CHECK(ExtRat::sqrt(Rat(9, 4)) == ExtRat(Rat(3, 2)));
  CHECK(ExtRat::sqrt(Rat(0)).is_rational());
  ExtRat half = ExtRat::sqrt(Rat(1, 2));
  CHECK(half * half == ExtRat(Rat(1, 2)));
}

TEST_CASE("field arithmetic in Q(sqrt 2)") {
  ExtRat s = ExtRat::sqrt(Rat(2));
  ExtRat x = ExtRat(1) + s;
  CHECK(x * (s - ExtRat(1)) == ExtRat(1));
  CHECK(ExtRat(1) / x == s - ExtRat(1));
  CHECK((x * x).p() == 3);
  CHECK((x * x).q() == 2);
  CHECK(s > ExtRat(Rat(141, 100)));
  CHECK(s < ExtRat(Rat(142, 100)));
  CHECK(-s < ExtRat(0));
  CHECK((s - s).is_rational());
}

TEST_CASE("mixing two quadratic fields is refused") {
  ExtRat a = ExtRat::sqrt(Rat(2)), b = ExtRat::sqrt(Rat(3));
  CHECK_THROWS_AS(a + b, IncompatibleFields);
  CHECK_THROWS_AS(a * b, IncompatibleFields);
  CHECK_NOTHROW(a + ExtRat(Rat(1, 2)));
}

TEST_CASE("ExtRat sign and order agree with floating point on random field elements") {
  Gen g(5);
  for (int k = 0; k < 400; ++k) {
    long d = g.integer(2, 30);
    ExtRat x(g.rat(20), g.rat(20), Int(d));
    ExtRat y(g.rat(20), g.rat(20), Int(d));
    double dx = x.to_double(), dy = y.to_double();
    if (std::abs(dx - dy) > 1e-9) CHECK(((x < y) == (dx < dy)));
    if (std::abs(dx) > 1e-9) CHECK(x.sign() == (dx > 0 ? 1 : -1));
    CHECK(((x + y) - y == x));
    if (y.sign() != 0) CHECK(((x / y) * y == x));
  }
}

TEST_CASE("rational_below lands strictly between") {
  ExtRat s = ExtRat(Rat(1)) + ExtRat::sqrt(Rat(5));
  for (Rat lo : {Rat(0), Rat(3), Rat(32, 10), Rat(3236, 1000)}) {
    Rat r = s.rational_below(lo);
    CHECK(r > lo);
    CHECK(ExtRat(r) < s);
  }
}

TEST_CASE("intersect examples") {
  GramForm g(Matrix{{1, 0}, {0, -1}});
  CHECK(intersect(g, v({1, 0}), v({0, 1})) == 0);
  CHECK(intersect(g, v({2, 1}), v({2, 1})) == 3);
  GramForm f2(Matrix{{0, 1}, {1, -2}});
  CHECK(intersect(f2, v({1, 1}), v({1, 1})) == 0);
  CHECK_THROWS_AS(intersect(g, v({1}), v({1, 0})), DimensionMismatch);
}

TEST_CASE("GramForm rejects asymmetric input and names the entry") {
  try {
    GramForm g(Matrix{{1, 2}, {3, 1}});
    FAIL("accepted an asymmetric matrix");
  } catch (const NonSymmetric& e) {
    CHECK(std::string(e.what()).find("(0,1)") != std::string::npos);
  }
}

TEST_CASE("intersect is bilinear and symmetric") {
  Gen g(1);
  for (int k = 0; k < 200; ++k) {
    std::size_t n = static_cast<std::size_t>(g.integer(1, 5));
    GramForm q(g.symmetric(n, 9));
    ClassVec a = g.vec(n, 9), b = g.vec(n, 9), c = g.vec(n, 9);
    Rat s = g.rat(9);
    CHECK(intersect(q, a + b, c) == intersect(q, a, c) + intersect(q, b, c));
    CHECK(intersect(q, s * a, c) == s * intersect(q, a, c));
    CHECK(intersect(q, a, b) == intersect(q, b, a));
  }
}

TEST_CASE("signature examples") {
  CHECK(signature(Matrix{{1, 0}, {0, -1}}) == Inertia{1, 1, 0});
  CHECK(signature(Matrix{{0, 1}, {1, -2}}) == Inertia{1, 1, 0});
  CHECK(signature(Matrix{{-2, 1}, {1, -2}}) == Inertia{0, 2, 0});
  CHECK(signature(Matrix{{0, 1}, {1, 0}}) == Inertia{1, 1, 0});
  CHECK(signature(Matrix{{0, 0}, {0, 0}}) == Inertia{0, 0, 2});
  CHECK(signature(Matrix{{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}) == Inertia{1, 1, 1});
  CHECK_THROWS_AS(signature(Matrix{{0, 1}, {2, 0}}), NonSymmetric);
}

TEST_CASE("signature is invariant under unimodular congruence") {
  Gen g(2);
  for (int k = 0; k < 200; ++k) {
    std::size_t n = static_cast<std::size_t>(g.integer(1, 5));
    Matrix q = g.symmetric(n, 5);
    // Zero out some diagonal entries so the 2x2 split path is exercised.
    for (std::size_t i = 0; i < n; ++i)
      if (g.integer(0, 2) == 0) q(i, i) = 0;
    Matrix p = g.unimodular(n, 6);
    CHECK(signature(p.transpose() * q * p) == signature(q));
  }
}

namespace {

// Determinant by fraction-free elimination over Q, used only as an
// independent cross-check of the definiteness test.
Rat det(Matrix m) {
  const std::size_t n = m.rows();
  Rat d = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(p, k), m(c, k));
      d = -d;
    }
    d *= m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      Rat f = m(r, c) / m(c, c);
      for (std::size_t k = c; k < n; ++k) m(r, k) -= f * m(c, k);
    }
  }
  return d;
}

bool negdef_by_minors(const Matrix& m) {
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    int s = sign(det(m.principal(idx)));
    if (s != (k % 2 ? -1 : 1)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("is_negative_definite examples") {
  CHECK(is_negative_definite(Matrix{{-1}}));
  CHECK(is_negative_definite(Matrix{{-2, 1}, {1, -2}}));
  CHECK_FALSE(is_negative_definite(Matrix{{0}}));
  CHECK(is_negative_definite(Matrix(0, 0)));
  CHECK_FALSE(is_negative_definite(Matrix{{-1, 1}, {1, -1}}));
}

TEST_CASE("is_negative_definite agrees with the leading minor criterion") {
  Gen g(3);
  int positives = 0;
  for (int k = 0; k < 600; ++k) {
    std::size_t n = static_cast<std::size_t>(g.integer(1, 5));
    Matrix m = g.symmetric(n, 4);
    // Shift the diagonal down so that a fair share of samples is definite.
    Rat shift = g.integer(0, 8);
    for (std::size_t i = 0; i < n; ++i) m(i, i) -= shift;
    bool expect = negdef_by_minors(m);
    positives += expect;
    CHECK(is_negative_definite(m) == expect);
  }
  CHECK(positives > 50);
}

TEST_CASE("solve_linear examples") {
  CHECK(solve_linear(Matrix{{-1}}, {Rat(1)}) == std::vector<Rat>{Rat(-1)});
  CHECK(solve_linear(Matrix{{-2, 1}, {1, -2}}, {Rat(-1), Rat(-1)}) == std::vector<Rat>{Rat(1), Rat(1)});
  CHECK(solve_linear(Matrix::identity(2), {Rat(3, 7), Rat(-2)}) == std::vector<Rat>{Rat(3, 7), Rat(-2)});
  CHECK_THROWS_AS(solve_linear(Matrix{{1, 2}, {2, 4}}, {Rat(1), Rat(1)}), SingularMatrix);
}

TEST_CASE("solve_linear round-trips") {
  Gen g(4);
  int solved = 0;
  for (int k = 0; k < 300; ++k) {
    std::size_t n = static_cast<std::size_t>(g.integer(1, 5));
    Matrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) s(i, j) = g.rat(6);
    std::vector<Rat> b = g.vec(n, 6).coords();
    try {
      std::vector<Rat> x = solve_linear(s, b);
      CHECK(s * x == b);
      ++solved;
    } catch (const SingularMatrix&) {
      CHECK(det(s) == 0);
    }
  }
  CHECK(solved > 200);
}

TEST_CASE("validate_model examples") {
  CHECK(validate_model(fixture("p2")).ok());
  for (const char* name : {"blowup1", "blowup2", "hirzebruch2"}) CHECK(validate_model(fixture(name)).ok());

  SurfaceModel bad = fixture("p2");
  bad.gram = GramForm(Matrix{{1, 0}, {0, 1}});
  bad.kahler = v({1, 0});
  bad.curves = {{"A", v({1, 0})}};
  auto rep = validate_model(bad);
  REQUIRE_FALSE(rep.ok());
  CHECK(rep.issues.front().find("(2,0,0)") != std::string::npos);

  SurfaceModel b1 = fixture("blowup1");
  b1.kahler = v({1, 0});
  rep = validate_model(b1);
  REQUIRE(rep.issues.size() == 1);
  CHECK(rep.issues[0] == "kahler class fails ω·E>0");
}

TEST_CASE("validate_model reports every problem") {
  SurfaceModel m = fixture("blowup1");
  m.curves.push_back({"E", v({0, 1})});
  m.curves.push_back({"Z", v({0, 0})});
  m.curves.push_back({"M", v({1, -2})});
  auto rep = validate_model(m);
  auto has = [&](const std::string& needle) {
    for (const auto& s : rep.issues)
      if (s.find(needle) != std::string::npos) return true;
    return false;
  };
  CHECK(has("duplicate"));
  CHECK(has("zero"));
  CHECK(has("M"));
}
