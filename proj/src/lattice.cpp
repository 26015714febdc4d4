#include "zok/lattice.hpp"

#include <set>

#include "zok/error.hpp"

namespace zok {

bool ClassVec::is_zero() const {
  for (const Rat& c : coords_)
    if (c != 0) return false;
  return true;
}

ClassVec& ClassVec::operator+=(const ClassVec& o) {
  if (o.size() != size()) throw DimensionMismatch("class vectors of different length");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

ClassVec& ClassVec::operator-=(const ClassVec& o) {
  if (o.size() != size()) throw DimensionMismatch("class vectors of different length");
  for (std::size_t i = 0; i < size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

ClassVec& ClassVec::operator*=(const Rat& c) {
  for (Rat& x : coords_) x *= c;
  return *this;
}

GramForm::GramForm(Matrix entries) : m_(std::move(entries)) {
  if (!m_.square()) throw NonSymmetric("gram matrix is not square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = i + 1; j < m_.cols(); ++j)
      if (m_(i, j) != m_(j, i))
        throw NonSymmetric("gram matrix not symmetric at entry (" + std::to_string(i) + "," + std::to_string(j) +
                           "): " + to_string(m_(i, j)) + " vs " + to_string(m_(j, i)));
}

std::optional<std::size_t> SurfaceModel::find_curve(std::string_view curve_name) const {
  for (std::size_t i = 0; i < curves.size(); ++i)
    if (curves[i].name == curve_name) return i;
  return std::nullopt;
}

std::optional<std::size_t> SurfaceModel::curve_with_class(const ClassVec& cls) const {
  for (std::size_t i = 0; i < curves.size(); ++i)
    if (curves[i].cls == cls) return i;
  return std::nullopt;
}

Rat intersect(const GramForm& gram, const ClassVec& u, const ClassVec& v) {
  const std::size_t n = gram.rank();
  if (u.size() != n || v.size() != n)
    throw DimensionMismatch("class length " + std::to_string(u.size()) + "/" + std::to_string(v.size()) +
                            " does not match rank " + std::to_string(n));
  Rat acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (u[i] == 0) continue;
    Rat row = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (v[j] != 0) row += gram(i, j) * v[j];
    acc += u[i] * row;
  }
  return acc;
}

Rat intersect(const SurfaceModel& model, const ClassVec& u, const ClassVec& v) {
  return intersect(model.gram, u, v);
}

Inertia signature(const Matrix& gram) {
  if (!gram.symmetric()) throw NonSymmetric("signature of a non-symmetric matrix");
  Matrix a = gram;
  const std::size_t n = a.rows();
  std::vector<bool> active(n, true);
  std::size_t remaining = n;
  Inertia out;

  while (remaining > 0) {
    // Largest-magnitude diagonal pivot.
    std::optional<std::size_t> piv;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i] || a(i, i) == 0) continue;
      if (!piv || abs(a(i, i)) > abs(a(*piv, *piv))) piv = i;
    }
    if (piv) {
      const std::size_t p = *piv;
      const Rat d = a(p, p);
      (d > 0 ? out.n_plus : out.n_minus)++;
      active[p] = false;
      --remaining;
      for (std::size_t j = 0; j < n; ++j) {
        if (!active[j] || a(j, p) == 0) continue;
        Rat f = a(j, p) / d;
        for (std::size_t k = 0; k < n; ++k)
          if (active[k]) a(j, k) -= f * a(p, k);
      }
      continue;
    }
    // All active diagonal entries vanish: split off a [[0,b],[b,0]] block,
    // which contributes one positive and one negative square.
    std::optional<std::pair<std::size_t, std::size_t>> pair;
    for (std::size_t i = 0; i < n && !pair; ++i)
      for (std::size_t j = i + 1; j < n && !pair; ++j)
        if (active[i] && active[j] && a(i, j) != 0) pair = {i, j};
    if (!pair) {
      out.n_zero += remaining;
      break;
    }
    const auto [i, l] = *pair;
    const Rat b = a(i, l);
    out.n_plus++;
    out.n_minus++;
    active[i] = active[l] = false;
    remaining -= 2;
    // Schur complement against the block; its inverse is [[0,1/b],[1/b,0]].
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < n; ++j)
      if (active[j]) rest.push_back(j);
    Matrix upd(rest.size(), rest.size());
    for (std::size_t x = 0; x < rest.size(); ++x)
      for (std::size_t y = 0; y < rest.size(); ++y) {
        const std::size_t j = rest[x], k = rest[y];
        upd(x, y) = (a(j, i) * a(l, k) + a(j, l) * a(i, k)) / b;
      }
    for (std::size_t x = 0; x < rest.size(); ++x)
      for (std::size_t y = 0; y < rest.size(); ++y) a(rest[x], rest[y]) -= upd(x, y);
  }
  return out;
}

bool is_negative_definite(const Matrix& sub) {
  if (sub.rows() == 0) return true;
  Inertia s = signature(sub);
  return s.n_minus == sub.rows();
}

std::vector<Rat> solve_linear(const Matrix& s, const std::vector<Rat>& b) {
  if (!s.square() || s.rows() != b.size()) throw DimensionMismatch("solve_linear shape mismatch");
  const std::size_t n = s.rows();
  Matrix a = s;
  std::vector<Rat> x = b;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col) == 0) ++piv;
    if (piv == n) throw SingularMatrix("singular system in solve_linear");
    if (piv != col) {
      for (std::size_t k = 0; k < n; ++k) std::swap(a(col, k), a(piv, k));
      std::swap(x[col], x[piv]);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Rat f = a(r, col) / a(col, col);
      for (std::size_t k = col; k < n; ++k) a(r, k) -= f * a(col, k);
      x[r] -= f * x[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) x[i] /= a(i, i);
  return x;
}

Matrix curve_gram(const SurfaceModel& model, const std::vector<std::size_t>& indices) {
  Matrix m(indices.size(), indices.size());
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = a; b < indices.size(); ++b) {
      Rat v = intersect(model, model.curves[indices[a]].cls, model.curves[indices[b]].cls);
      m(a, b) = v;
      m(b, a) = v;
    }
  return m;
}

ValidationReport validate_model(const SurfaceModel& model) {
  ValidationReport rep;
  auto& issues = rep.issues;
  const Matrix& g = model.gram.matrix();
  const std::size_t n = g.rows();
  if (n == 0) {
    issues.push_back("rank must be positive");
    return rep;
  }
  if (!g.symmetric()) {
    issues.push_back("gram matrix is not symmetric");
    return rep;
  }
  Inertia s = signature(g);
  if (s != Inertia{1, n - 1, 0})
    issues.push_back("signature (" + std::to_string(s.n_plus) + "," + std::to_string(s.n_minus) + "," +
                     std::to_string(s.n_zero) + ") violates the Hodge index signature (1," + std::to_string(n - 1) +
                     ",0)");

  bool kahler_ok = model.kahler.size() == n;
  if (!kahler_ok) {
    issues.push_back("kahler class has length " + std::to_string(model.kahler.size()) + ", expected " +
                     std::to_string(n));
  } else if (intersect(model, model.kahler, model.kahler) <= 0) {
    issues.push_back("kahler class fails ω·ω>0");
  }

  std::set<std::string> names;
  for (const auto& c : model.curves) {
    if (!names.insert(c.name).second) issues.push_back("duplicate curve name '" + c.name + "'");
    if (c.cls.size() != n) {
      issues.push_back("curve '" + c.name + "' has class of length " + std::to_string(c.cls.size()));
      continue;
    }
    if (c.cls.is_zero()) issues.push_back("curve '" + c.name + "' has zero class");
    if (kahler_ok && intersect(model, model.kahler, c.cls) <= 0)
      issues.push_back("kahler class fails ω·" + c.name + ">0");
  }
  for (std::size_t i = 0; i < model.curves.size(); ++i)
    for (std::size_t j = i + 1; j < model.curves.size(); ++j) {
      const auto& a = model.curves[i];
      const auto& b = model.curves[j];
      if (a.cls.size() != n || b.cls.size() != n) continue;
      Rat v = intersect(model, a.cls, b.cls);
      if (v < 0)
        issues.push_back("distinct curves '" + a.name + "' and '" + b.name + "' meet negatively (" + to_string(v) +
                         ")");
    }
  return rep;
}

}  // namespace zok
