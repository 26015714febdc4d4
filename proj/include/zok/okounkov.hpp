#pragma once

// Chamber walks along alpha - t C and the Okounkov polygons they bound.

#include <map>
#include <optional>
#include <vector>

#include "zok/lattice.hpp"
#include "zok/pencil.hpp"
#include "zok/polygon.hpp"

namespace zok {

// Flag curve C and a point x on it, described by the local intersection
// multiplicities m_i = (N_i . C)_x of the other listed curves at x. An empty
// map is a generic point.
struct FlagSpec {
  std::size_t curve = 0;
  std::map<std::size_t, Rat> mults;

  Rat mult(std::size_t index) const;
};

// Maximal interval of the walk with constant negative-part support, on
// which Z_t = z0 + t z1 and a_i(t) = coeff0[i] + t coeff1[i].
struct SegmentChamber {
  ExtRat t_lo;
  ExtRat t_hi;
  std::vector<std::size_t> support;
  ClassVec z0;
  ClassVec z1;
  std::vector<Rat> coeff0;
  std::vector<Rat> coeff1;

  ExtRat coeff_at(std::size_t k, const ExtRat& t) const { return ExtRat(coeff0[k]) + t * ExtRat(coeff1[k]); }
  // Coefficient of curve `index` at t, zero off the support.
  ExtRat coeff_of(std::size_t index, const ExtRat& t) const;
};

// The chamber of `line` that starts at t0, with its right end (nullopt when
// no event ever occurs) and whether that end is the terminal Z_t^2 = 0
// event. The support is checked against a direct decomposition at an
// interior rational point.
struct LineChamber {
  SegmentChamber chamber;
  bool bounded = false;
  bool terminal = false;
};
LineChamber chamber_from(const SurfaceModel& model, const Pencil& line, const Rat& t0);

// Chambers covering [0, s] along alpha - t C. Throws NotBig, UnknownCurve.
std::vector<SegmentChamber> segment_chambers(const SurfaceModel& model, const ClassVec& alpha, std::size_t curve);

struct Slopes {
  ExtRat a;
  ExtRat s;
};
Slopes slopes(const SurfaceModel& model, const ClassVec& alpha, std::size_t curve);

struct Envelopes {
  PiecewiseLinear f;
  PiecewiseLinear g;
};
Envelopes envelopes(const SurfaceModel& model, const ClassVec& alpha, const FlagSpec& flag);

struct OkounkovPolygon {
  ExtRat a;
  ExtRat s;
  PiecewiseLinear f;
  PiecewiseLinear g;
  Polygon vertices;  // counter-clockwise from (a, f(a))
  ExtRat area;
};
OkounkovPolygon okounkov_polygon(const SurfaceModel& model, const ClassVec& alpha, const FlagSpec& flag);

struct Interval {
  Rat lo;
  Rat hi;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// [f, g] at t = 0. Throws FlagInNonKahlerLocus.
Interval restricted_body(const SurfaceModel& model, const ClassVec& alpha, const FlagSpec& flag);

enum class BodyKind { Point, Segment };

// Body of a pseudo-effective class that is not big: the point (0, base) or
// the segment {0} x [base, top].
struct BoundaryBody {
  BodyKind kind = BodyKind::Point;
  Rat base;
  Rat top;
  int dimension() const { return kind == BodyKind::Point ? 0 : 1; }
  friend bool operator==(const BoundaryBody&, const BoundaryBody&) = default;
};
// Throws NotOnBoundary, HypothesisViolated.
BoundaryBody boundary_body(const SurfaceModel& model, const ClassVec& alpha, const FlagSpec& flag);

// Throws UnknownCurve / InvalidFlag.
void validate_flag(const SurfaceModel& model, const FlagSpec& flag);

}  // namespace zok
