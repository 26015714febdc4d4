#pragma once

#include <compare>
#include <string>

#include "zok/rational.hpp"

namespace zok {

// Exact element p + q*sqrt(d) of Q or of a real quadratic field Q(sqrt d).
//
// Canonical form: when q == 0 the radicand is 1 (plain rational); otherwise
// d >= 2 has had its square factors pulled into q. Arithmetic between two
// irrational values is only defined when they live in the same field;
// mixing fields throws IncompatibleFields.
class ExtRat {
 public:
  ExtRat() : p_(0), q_(0), d_(1) {}
  ExtRat(const Rat& r) : p_(r), q_(0), d_(1) {}  // NOLINT: implicit by design of the number tower
  ExtRat(int v) : p_(v), q_(0), d_(1) {}         // NOLINT
  ExtRat(Rat p, Rat q, Int d);

  // The non-negative root sqrt(r) of a non-negative rational.
  static ExtRat sqrt(const Rat& r);

  const Rat& p() const { return p_; }
  const Rat& q() const { return q_; }
  const Int& d() const { return d_; }
  bool is_rational() const { return q_ == 0; }
  // Throws InvariantViolation when irrational.
  const Rat& rational() const;

  ExtRat operator-() const;
  ExtRat& operator+=(const ExtRat& o);
  ExtRat& operator-=(const ExtRat& o);
  ExtRat& operator*=(const ExtRat& o);
  ExtRat& operator/=(const ExtRat& o);
  friend ExtRat operator+(ExtRat a, const ExtRat& b) { return a += b; }
  friend ExtRat operator-(ExtRat a, const ExtRat& b) { return a -= b; }
  friend ExtRat operator*(ExtRat a, const ExtRat& b) { return a *= b; }
  friend ExtRat operator/(ExtRat a, const ExtRat& b) { return a /= b; }

  int sign() const;
  friend bool operator==(const ExtRat& a, const ExtRat& b);
  friend std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b);

  double to_double() const;
  // A rational strictly between lo and *this; requires lo < *this.
  Rat rational_below(const Rat& lo) const;

  std::string str() const;

 private:
  void normalize();
  const Int& common_radicand(const ExtRat& o) const;

  Rat p_;
  Rat q_;
  Int d_;
};

inline ExtRat abs(const ExtRat& x) { return x.sign() < 0 ? -x : x; }

}  // namespace zok
