#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace zok {

// Exact rational. mpq_class keeps itself canonical (reduced, positive
// denominator) after every arithmetic operation.
using Rat = mpq_class;
using Int = mpz_class;

// Accepts "p", "p/q", "-p/q" with optional surrounding whitespace.
Rat parse_rat(std::string_view text);

// "p/q", or bare "p" for integers.
std::string to_string(const Rat& r);

inline int sign(const Rat& r) { return sgn(r); }

bool fits_int64(const Int& z);

// Dense row-major matrix of rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Rat>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool symmetric() const;
  Matrix transpose() const;
  // Principal submatrix on the given indices, in the given order.
  Matrix principal(const std::vector<std::size_t>& idx) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend std::vector<Rat> operator*(const Matrix& a, const std::vector<Rat>& x);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

}  // namespace zok
