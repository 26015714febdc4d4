#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zok/rational.hpp"

namespace zok {

// Coordinates of a (1,1)-class in the model basis.
class ClassVec {
 public:
  ClassVec() = default;
  explicit ClassVec(std::size_t rank) : coords_(rank) {}
  explicit ClassVec(std::vector<Rat> coords) : coords_(std::move(coords)) {}
  ClassVec(std::initializer_list<Rat> coords) : coords_(coords) {}

  std::size_t size() const { return coords_.size(); }
  const Rat& operator[](std::size_t i) const { return coords_[i]; }
  Rat& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rat>& coords() const { return coords_; }
  bool is_zero() const;

  ClassVec& operator+=(const ClassVec& o);
  ClassVec& operator-=(const ClassVec& o);
  ClassVec& operator*=(const Rat& c);
  friend ClassVec operator+(ClassVec a, const ClassVec& b) { return a += b; }
  friend ClassVec operator-(ClassVec a, const ClassVec& b) { return a -= b; }
  friend ClassVec operator*(const Rat& c, ClassVec a) { return a *= c; }
  friend ClassVec operator-(ClassVec a) { return a *= Rat(-1); }
  friend bool operator==(const ClassVec&, const ClassVec&) = default;

 private:
  std::vector<Rat> coords_;
};

// Symmetric intersection form on the model lattice.
class GramForm {
 public:
  GramForm() = default;
  explicit GramForm(Matrix entries);  // throws NonSymmetric

  std::size_t rank() const { return m_.rows(); }
  const Matrix& matrix() const { return m_; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

 private:
  Matrix m_;
};

struct CurveRecord {
  std::string name;
  ClassVec cls;
};

struct SurfaceModel {
  std::string name;
  GramForm gram;
  std::vector<CurveRecord> curves;
  ClassVec kahler;

  std::size_t rank() const { return gram.rank(); }
  std::optional<std::size_t> find_curve(std::string_view curve_name) const;
  // Index of the listed curve whose class equals `cls`, if any.
  std::optional<std::size_t> curve_with_class(const ClassVec& cls) const;
};

struct Inertia {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

struct ValidationReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};

// u^T G v. Throws DimensionMismatch.
Rat intersect(const SurfaceModel& model, const ClassVec& u, const ClassVec& v);
Rat intersect(const GramForm& gram, const ClassVec& u, const ClassVec& v);

// Sylvester inertia by exact symmetric congruence diagonalization.
// Throws NonSymmetric.
Inertia signature(const Matrix& gram);
inline Inertia signature(const GramForm& gram) { return signature(gram.matrix()); }

// The 0x0 matrix counts as negative definite.
bool is_negative_definite(const Matrix& sub);

// Exact Gaussian elimination. Throws SingularMatrix.
std::vector<Rat> solve_linear(const Matrix& s, const std::vector<Rat>& b);

// Gram matrix (D_i . D_j) of the listed curves at `indices`.
Matrix curve_gram(const SurfaceModel& model, const std::vector<std::size_t>& indices);

ValidationReport validate_model(const SurfaceModel& model);

}  // namespace zok
