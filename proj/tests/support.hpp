#pragma once

#include <random>
#include <string>

#include "zok/io.hpp"
#include "zok/lattice.hpp"

namespace zt {

using namespace zok;

inline SurfaceModel fixture(const std::string& name) {
  return load_model(std::string(ZOK_MODEL_DIR) + "/" + name + ".json");
}

// Lattice diag(1, -2) with a line L and a (-2)-curve X. Along L - tX the
// volume 1 - 2t^2 vanishes at the irrational slope 1/sqrt 2.
inline SurfaceModel root_two_model() {
  return model_from_json(Json::parse(R"({"name": "root2", "rank": 2, "gram": [[1, 0], [0, -2]],
    "kahler": [3, -1], "curves": [{"name": "X", "class": [0, 1]}, {"name": "L", "class": [1, 0]}]})"));
}

inline ClassVec v(std::initializer_list<long> xs) {
  ClassVec out(xs.size());
  std::size_t i = 0;
  for (long x : xs) out[i++] = Rat(x);
  return out;
}

inline std::size_t idx(const SurfaceModel& m, const std::string& name) { return m.find_curve(name).value(); }

// Seeded generators for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    return lo + static_cast<long>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Rat rat(long bound) {
    long num = integer(-bound, bound);
    long den = integer(1, bound);
    Rat r{Int(num), Int(den)};
    r.canonicalize();
    return r;
  }
  ClassVec vec(std::size_t n, long bound) {
    ClassVec out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = rat(bound);
    return out;
  }
  ClassVec int_vec(std::size_t n, long bound) {
    ClassVec out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = integer(-bound, bound);
    return out;
  }
  Matrix symmetric(std::size_t n, long bound) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = rat(bound);
    return m;
  }
  // Product of random elementary row operations: integer, determinant +-1.
  Matrix unimodular(std::size_t n, int steps) {
    Matrix p = Matrix::identity(n);
    if (n < 2) return p;
    for (int s = 0; s < steps; ++s) {
      std::size_t i = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
      std::size_t j = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 2));
      if (j >= i) ++j;
      long c = integer(-2, 2);
      for (std::size_t k = 0; k < n; ++k) p(i, k) += c * p(j, k);
    }
    return p;
  }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace zt
