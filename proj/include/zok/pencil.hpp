#pragma once

// Zariski decomposition along a line of classes base + t*dir.
//
// Running the support-growth iteration with every sign test taken either at
// a point t0 or on a right neighbourhood (t0, t0 + eps) yields the support
// together with the affine formulas for Z_t and the coefficients a_i(t) that
// hold on that neighbourhood. The plain decomposition is the dir = 0 case.

#include <vector>

#include "zok/lattice.hpp"

namespace zok {

struct Pencil {
  ClassVec base;
  ClassVec dir;

  ClassVec at(const Rat& t) const { return base + t * dir; }
};

enum class Probe { At, RightOf };

struct AffineDecomp {
  std::vector<std::size_t> support;  // sorted curve indices
  std::vector<Rat> coeff0;           // a_i(t) = coeff0[i] + t * coeff1[i]
  std::vector<Rat> coeff1;
  ClassVec z0;  // Z_t = z0 + t * z1
  ClassVec z1;

  ClassVec z_at(const Rat& t) const { return z0 + t * z1; }
  Rat coeff_at(std::size_t k, const Rat& t) const { return coeff0[k] + t * coeff1[k]; }
};

// Throws NotPseudoEffective when the iteration breaks down: a support whose
// Gram matrix is not negative definite, a non-positive coefficient, or a
// final Z with Z.omega < 0 or Z^2 < 0.
AffineDecomp decompose_pencil(const SurfaceModel& model, const Pencil& line, const Rat& t0, Probe probe);

}  // namespace zok
