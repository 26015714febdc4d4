#include "zok/okounkov.hpp"

#include <algorithm>

#include "zok/error.hpp"
#include "zok/zariski.hpp"

namespace zok {

Rat FlagSpec::mult(std::size_t index) const {
  auto it = mults.find(index);
  return it == mults.end() ? Rat(0) : it->second;
}

ExtRat SegmentChamber::coeff_of(std::size_t index, const ExtRat& t) const {
  auto it = std::lower_bound(support.begin(), support.end(), index);
  if (it == support.end() || *it != index) return ExtRat();
  return coeff_at(static_cast<std::size_t>(it - support.begin()), t);
}

namespace {

// Smallest root > t0 of a t^2 + 2 b t + c, if any.
std::optional<ExtRat> first_root_after(const Rat& a, const Rat& b, const Rat& c, const Rat& t0) {
  std::vector<ExtRat> roots;
  if (a == 0) {
    if (b != 0) roots.emplace_back(Rat(-c / (2 * b)));
  } else {
    Rat disc = b * b - a * c;
    if (disc >= 0) {
      ExtRat root = ExtRat::sqrt(disc);
      roots.push_back((ExtRat(Rat(-b)) - root) / ExtRat(a));
      roots.push_back((ExtRat(Rat(-b)) + root) / ExtRat(a));
    }
  }
  std::optional<ExtRat> best;
  for (const ExtRat& r : roots)
    if (r > ExtRat(t0) && (!best || r < *best)) best = r;
  return best;
}

void check_chamber(const SurfaceModel& model, const Pencil& line, const LineChamber& lc, const Rat& t0) {
  Rat probe = lc.bounded ? lc.chamber.t_hi.rational_below(t0) : Rat(t0 + 1);
  if (lc.bounded && lc.chamber.t_hi.is_rational()) probe = (t0 + lc.chamber.t_hi.rational()) / 2;
  AffineDecomp direct = decompose_pencil(model, line, probe, Probe::At);
  const SegmentChamber& ch = lc.chamber;
  bool same = direct.support == ch.support && direct.z0 + probe * direct.z1 == ch.z0 + probe * ch.z1;
  for (std::size_t k = 0; same && k < ch.support.size(); ++k)
    same = direct.coeff_at(k, probe) == Rat(ch.coeff0[k] + probe * ch.coeff1[k]);
  if (!same) throw InvariantViolation("chamber formula disagrees with the decomposition at t = " + to_string(probe));
}

}  // namespace

LineChamber chamber_from(const SurfaceModel& model, const Pencil& line, const Rat& t0) {
  AffineDecomp dec = decompose_pencil(model, line, t0, Probe::RightOf);
  LineChamber lc;
  SegmentChamber& ch = lc.chamber;
  ch.t_lo = t0;
  ch.support = dec.support;
  ch.z0 = dec.z0;
  ch.z1 = dec.z1;
  ch.coeff0 = dec.coeff0;
  ch.coeff1 = dec.coeff1;

  std::optional<Rat> affine_end;
  auto consider = [&](const Rat& h0, const Rat& h1) {
    if (h1 >= 0) return;
    Rat t = -h0 / h1;
    if (t <= t0) throw InvariantViolation("chamber event not to the right of its start");
    if (!affine_end || t < *affine_end) affine_end = t;
  };
  for (std::size_t k = 0; k < ch.support.size(); ++k) consider(ch.coeff0[k], ch.coeff1[k]);
  for (std::size_t i = 0; i < model.curves.size(); ++i) {
    if (std::binary_search(ch.support.begin(), ch.support.end(), i)) continue;
    consider(intersect(model, ch.z0, model.curves[i].cls), intersect(model, ch.z1, model.curves[i].cls));
  }
  std::optional<ExtRat> square_end = first_root_after(intersect(model, ch.z1, ch.z1), intersect(model, ch.z0, ch.z1),
                                                      intersect(model, ch.z0, ch.z0), t0);

  if (square_end && (!affine_end || *square_end <= ExtRat(*affine_end))) {
    lc.bounded = lc.terminal = true;
    ch.t_hi = *square_end;
  } else if (affine_end) {
    lc.bounded = true;
    ch.t_hi = *affine_end;
  }
  check_chamber(model, line, lc, t0);
  return lc;
}

std::vector<SegmentChamber> segment_chambers(const SurfaceModel& model, const ClassVec& alpha, std::size_t curve) {
  if (curve >= model.curves.size()) throw UnknownCurve("curve index " + std::to_string(curve) + " out of range");
  if (classify(model, alpha).kind != ClassKind::Big) throw NotBig("chamber walk needs a big class");
  Pencil line{alpha, -model.curves[curve].cls};
  std::vector<SegmentChamber> out;
  Rat t = 0;
  // Each non-terminal event adds or removes a support curve, and supports
  // only grow once the flag curve has left, so the walk is short.
  const std::size_t guard = 4 * (model.curves.size() + 2);
  for (std::size_t step = 0; step < guard; ++step) {
    LineChamber lc = chamber_from(model, line, t);
    if (!lc.bounded) throw InvariantViolation("walk along alpha - tC never leaves the big cone");
    out.push_back(lc.chamber);
    if (lc.terminal) return out;
    t = lc.chamber.t_hi.rational();
  }
  throw InvariantViolation("chamber walk did not terminate");
}

namespace {

ExtRat z_dot(const SurfaceModel& model, const SegmentChamber& ch, std::size_t curve, const ExtRat& t) {
  const ClassVec& c = model.curves[curve].cls;
  return ExtRat(intersect(model, ch.z0, c)) + t * ExtRat(intersect(model, ch.z1, c));
}

ExtRat start_of_body(const SurfaceModel& model, const std::vector<SegmentChamber>& chambers, std::size_t curve) {
  for (const auto& ch : chambers) {
    const ClassVec& c = model.curves[curve].cls;
    if (intersect(model, ch.z0, c) != 0 || intersect(model, ch.z1, c) != 0) return ch.t_lo;
  }
  throw InvariantViolation("flag curve stays in the non-Kahler locus along the whole walk");
}

ExtRat f_value(const SegmentChamber& ch, const FlagSpec& flag, const ExtRat& t) {
  ExtRat f;
  for (std::size_t k = 0; k < ch.support.size(); ++k) {
    Rat m = flag.mult(ch.support[k]);
    if (m != 0) f += ch.coeff_at(k, t) * ExtRat(m);
  }
  return f;
}

}  // namespace

Slopes slopes(const SurfaceModel& model, const ClassVec& alpha, std::size_t curve) {
  auto chambers = segment_chambers(model, alpha, curve);
  return {start_of_body(model, chambers, curve), chambers.back().t_hi};
}

void validate_flag(const SurfaceModel& model, const FlagSpec& flag) {
  const std::size_t n = model.curves.size();
  if (flag.curve >= n) throw UnknownCurve("flag curve index " + std::to_string(flag.curve) + " out of range");
  const ClassVec& c = model.curves[flag.curve].cls;
  for (const auto& [i, m] : flag.mults) {
    if (i >= n) throw UnknownCurve("multiplicity given for unknown curve index " + std::to_string(i));
    if (i == flag.curve) throw InvalidFlag("the flag curve cannot carry a multiplicity");
    Rat bound = intersect(model, model.curves[i].cls, c);
    if (m < 0 || m > bound)
      throw InvalidFlag("multiplicity " + to_string(m) + " of " + model.curves[i].name + " outside [0, " +
                        to_string(bound) + "]");
  }
}

Envelopes envelopes(const SurfaceModel& model, const ClassVec& alpha, const FlagSpec& flag) {
  validate_flag(model, flag);
  auto chambers = segment_chambers(model, alpha, flag.curve);
  const ExtRat a = start_of_body(model, chambers, flag.curve);
  const ExtRat s = chambers.back().t_hi;
  if (!(a < s)) throw InvariantViolation("degenerate body: a = s for a big class");

  std::vector<ExtRat> ts, fs, gs;
  for (const auto& ch : chambers) {
    if (ch.t_hi <= a) continue;
    if (std::binary_search(ch.support.begin(), ch.support.end(), flag.curve))
      throw InvariantViolation("flag curve in the negative part on (a, s)");
    for (const ExtRat& t : {ch.t_lo, ch.t_hi}) {
      ExtRat f = f_value(ch, flag, t);
      ExtRat g = f + z_dot(model, ch, flag.curve, t);
      if (!ts.empty() && ts.back() == t) {
        if (!(fs.back() == f) || !(gs.back() == g))
          throw InvariantViolation("envelopes jump at a chamber boundary t = " + t.str());
        continue;
      }
      ts.push_back(t);
      fs.push_back(f);
      gs.push_back(g);
    }
  }
  return {PiecewiseLinear(ts, fs), PiecewiseLinear(ts, gs)};
}

OkounkovPolygon okounkov_polygon(const SurfaceModel& model, const ClassVec& alpha, const FlagSpec& flag) {
  Envelopes env = envelopes(model, alpha, flag);
  OkounkovPolygon poly;
  poly.a = env.f.lo();
  poly.s = env.f.hi();
  const auto& ts = env.f.breakpoints();
  const auto& fs = env.f.values();
  const auto& gs = env.g.values();
  for (std::size_t k = 0; k + 1 < ts.size(); ++k)
    if (!(fs[k] <= gs[k])) throw InvariantViolation("f exceeds g at t = " + ts[k].str());
  if (!env.f.convex()) throw InvariantViolation("lower envelope is not convex");
  if (!env.g.concave()) throw InvariantViolation("upper envelope is not concave");

  Polygon ring;
  for (std::size_t k = 0; k < ts.size(); ++k) ring.push_back({ts[k], fs[k]});
  for (std::size_t k = ts.size(); k-- > 0;) ring.push_back({ts[k], gs[k]});
  poly.vertices = normalize_convex(ring);
  poly.area = shoelace_area(poly.vertices);
  poly.f = std::move(env.f);
  poly.g = std::move(env.g);

  if (poly.vertices.size() > 2 * model.rank() + 2) throw InvariantViolation("polygon has too many vertices");
  if (!(ExtRat(2) * poly.area == ExtRat(volume(model, alpha))))
    throw InvariantViolation("2 * area " + (ExtRat(2) * poly.area).str() + " differs from the volume");
  return poly;
}

Interval restricted_body(const SurfaceModel& model, const ClassVec& alpha, const FlagSpec& flag) {
  validate_flag(model, flag);
  auto nk = non_kahler_curves(model, alpha);
  if (std::binary_search(nk.begin(), nk.end(), flag.curve))
    throw FlagInNonKahlerLocus("flag curve " + model.curves[flag.curve].name + " lies in the non-Kahler locus");
  ZariskiDecomp d = zariski_decompose(model, alpha);
  Rat lo = 0;
  for (std::size_t k = 0; k < d.support.size(); ++k) lo += d.coeffs[k] * flag.mult(d.support[k]);
  return {lo, lo + intersect(model, d.z, model.curves[flag.curve].cls)};
}

BoundaryBody boundary_body(const SurfaceModel& model, const ClassVec& alpha, const FlagSpec& flag) {
  validate_flag(model, flag);
  ZariskiDecomp d = zariski_decompose(model, alpha);
  Rat zz = intersect(model, d.z, d.z);
  if (zz > 0) throw NotOnBoundary("class is big; use the Okounkov polygon");
  Rat base = 0;
  for (std::size_t k = 0; k < d.support.size(); ++k) base += d.coeffs[k] * flag.mult(d.support[k]);
  if (d.z.is_zero()) {
    if (std::binary_search(d.support.begin(), d.support.end(), flag.curve))
      throw HypothesisViolated("flag curve lies in the negative part of a numerical-dimension-0 class");
    return {BodyKind::Point, base, base};
  }
  Rat zc = intersect(model, d.z, model.curves[flag.curve].cls);
  if (zc <= 0) throw HypothesisViolated("numerical dimension 1 needs Z(alpha).C > 0 for the flag curve");
  return {BodyKind::Segment, base, base + zc};
}

}  // namespace zok
