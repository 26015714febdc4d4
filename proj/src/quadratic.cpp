#include "zok/quadratic.hpp"

#include <cmath>

#include "zok/error.hpp"

namespace zok {

namespace {

// Splits n > 0 as k^2 * d. Square factors are removed by trial division up
// to a desk-scale bound; a leftover perfect square is absorbed as well.
void split_square(const Int& n, Int& k, Int& d) {
  k = 1;
  d = n;
  if (mpz_perfect_square_p(d.get_mpz_t())) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), d.get_mpz_t());
    k = r;
    d = 1;
    return;
  }
  for (unsigned long p = 2; p <= 100000; ++p) {
    Int pp = Int(p) * p;
    if (pp > d) break;
    while (mpz_divisible_p(d.get_mpz_t(), pp.get_mpz_t())) {
      d /= pp;
      k *= p;
    }
  }
  if (d > 1 && mpz_perfect_square_p(d.get_mpz_t())) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), d.get_mpz_t());
    k *= r;
    d = 1;
  }
}

}  // namespace

ExtRat::ExtRat(Rat p, Rat q, Int d) : p_(std::move(p)), q_(std::move(q)), d_(std::move(d)) {
  if (d_ < 0) throw InvariantViolation("negative radicand");
  normalize();
}

void ExtRat::normalize() {
  if (q_ == 0 || d_ == 0) {
    q_ = 0;
    d_ = 1;
    return;
  }
  Int k, rest;
  split_square(d_, k, rest);
  q_ *= k;
  d_ = rest;
  if (d_ == 1) {
    p_ += q_;
    q_ = 0;
  }
}

ExtRat ExtRat::sqrt(const Rat& r) {
  if (r < 0) throw InvariantViolation("sqrt of a negative rational");
  if (r == 0) return ExtRat();
  Int nm = r.get_num() * r.get_den();
  Rat coeff(1, r.get_den());
  coeff.canonicalize();
  return ExtRat(Rat(0), coeff, nm);
}

const Rat& ExtRat::rational() const {
  if (!is_rational()) throw InvariantViolation("expected a rational value, got " + str());
  return p_;
}

const Int& ExtRat::common_radicand(const ExtRat& o) const {
  if (is_rational()) return o.d_;
  if (o.is_rational() || o.d_ == d_) return d_;
  throw IncompatibleFields("values from different quadratic fields: sqrt(" + d_.get_str() + ") and sqrt(" +
                           o.d_.get_str() + ")");
}

ExtRat ExtRat::operator-() const {
  ExtRat r = *this;
  r.p_ = -r.p_;
  r.q_ = -r.q_;
  return r;
}

ExtRat& ExtRat::operator+=(const ExtRat& o) {
  Int d = common_radicand(o);
  p_ += o.p_;
  q_ += o.q_;
  d_ = d;
  if (q_ == 0) d_ = 1;
  return *this;
}

ExtRat& ExtRat::operator-=(const ExtRat& o) { return *this += -o; }

ExtRat& ExtRat::operator*=(const ExtRat& o) {
  Int d = common_radicand(o);
  Rat p = p_ * o.p_ + q_ * o.q_ * Rat(d);
  Rat q = p_ * o.q_ + q_ * o.p_;
  p_ = p;
  q_ = q;
  d_ = q_ == 0 ? Int(1) : d;
  return *this;
}

ExtRat& ExtRat::operator/=(const ExtRat& o) {
  if (o.sign() == 0) throw InvariantViolation("division by zero");
  if (o.is_rational()) {
    p_ /= o.p_;
    q_ /= o.p_;
    return *this;
  }
  // Multiply through by the conjugate of the divisor.
  Rat norm = o.p_ * o.p_ - o.q_ * o.q_ * Rat(o.d_);
  ExtRat conj(o.p_, -o.q_, o.d_);
  *this *= conj;
  p_ /= norm;
  q_ /= norm;
  return *this;
}

int ExtRat::sign() const {
  int sp = sgn(p_);
  int sq = sgn(q_);
  if (sq == 0) return sp;
  if (sp == 0 || sp == sq) return sq;
  // Opposite signs: compare p^2 against q^2 d.
  int c = cmp(Rat(p_ * p_), Rat(q_ * q_ * Rat(d_)));
  return c > 0 ? sp : sq;
}

bool operator==(const ExtRat& a, const ExtRat& b) {
  return a.p_ == b.p_ && a.q_ == b.q_ && (a.q_ == 0 || a.d_ == b.d_);
}

std::strong_ordering operator<=>(const ExtRat& a, const ExtRat& b) {
  int s = (a - b).sign();
  if (s < 0) return std::strong_ordering::less;
  if (s > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

double ExtRat::to_double() const {
  return p_.get_d() + q_.get_d() * std::sqrt(Rat(d_).get_d());
}

Rat ExtRat::rational_below(const Rat& lo) const {
  if (!(ExtRat(lo) < *this)) throw InvariantViolation("rational_below: lower bound not below value");
  if (is_rational()) return Rat((lo + p_) / 2);
  for (unsigned k = 1; k < 4096; k *= 2) {
    Int scale = Int(1) << k;
    Int s;
    Int scaled = d_ * scale * scale;
    mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
    Rat root_lo(s, scale);
    Rat root_hi(Int(s + 1), scale);
    root_lo.canonicalize();
    root_hi.canonicalize();
    Rat lower = q_ > 0 ? Rat(p_ + q_ * root_lo) : Rat(p_ + q_ * root_hi);
    if (lower > lo) return lower;
  }
  throw InvariantViolation("rational_below did not converge");
}

std::string ExtRat::str() const {
  if (is_rational()) return to_string(p_);
  return to_string(p_) + (q_ < 0 ? " - " : " + ") + to_string(Rat(abs(q_))) + "*sqrt(" + d_.get_str() + ")";
}

}  // namespace zok
