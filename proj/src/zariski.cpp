#include "zok/zariski.hpp"

#include <algorithm>

#include "zok/error.hpp"
#include "zok/pencil.hpp"

namespace zok {

Rat ZariskiDecomp::coeff(std::size_t index) const {
  auto it = std::lower_bound(support.begin(), support.end(), index);
  if (it == support.end() || *it != index) return 0;
  return coeffs[static_cast<std::size_t>(it - support.begin())];
}

ClassVec ZariskiDecomp::negative_class(const SurfaceModel& model) const {
  ClassVec n(model.rank());
  for (std::size_t k = 0; k < support.size(); ++k) n += coeffs[k] * model.curves[support[k]].cls;
  return n;
}

bool is_nef_in_model(const SurfaceModel& model, const ClassVec& alpha) {
  for (const auto& c : model.curves)
    if (intersect(model, alpha, c.cls) < 0) return false;
  return intersect(model, alpha, alpha) >= 0 && intersect(model, alpha, model.kahler) >= 0;
}

ZariskiDecomp zariski_decompose(const SurfaceModel& model, const ClassVec& alpha) {
  Pencil line{alpha, ClassVec(model.rank())};
  AffineDecomp a = decompose_pencil(model, line, Rat(0), Probe::At);
  return ZariskiDecomp{alpha, a.z0, a.support, a.coeff0};
}

std::vector<std::string> decomposition_violations(const SurfaceModel& model, const ZariskiDecomp& d) {
  std::vector<std::string> v;
  if (d.support.size() != d.coeffs.size()) {
    v.push_back("support and coefficient lists differ in length");
    return v;
  }
  if (!std::is_sorted(d.support.begin(), d.support.end()) ||
      std::adjacent_find(d.support.begin(), d.support.end()) != d.support.end())
    v.push_back("support is not strictly increasing");
  if (d.z + d.negative_class(model) != d.alpha) v.push_back("alpha != Z + N");
  for (std::size_t k = 0; k < d.support.size(); ++k) {
    const auto& c = model.curves[d.support[k]];
    if (intersect(model, d.z, c.cls) != 0) v.push_back("Z not orthogonal to " + c.name);
    if (d.coeffs[k] <= 0) v.push_back("coefficient of " + c.name + " is not positive");
  }
  if (!is_negative_definite(curve_gram(model, d.support))) v.push_back("support is not negative definite");
  if (!is_nef_in_model(model, d.z)) v.push_back("Z is not nef in the model");
  return v;
}

Rat volume(const SurfaceModel& model, const ClassVec& alpha) {
  ZariskiDecomp d = zariski_decompose(model, alpha);
  return intersect(model, d.z, d.z);
}

Classification classify(const SurfaceModel& model, const ClassVec& alpha) {
  ZariskiDecomp d;
  try {
    d = zariski_decompose(model, alpha);
  } catch (const NotPseudoEffective&) {
    return {ClassKind::NotPsefInModel, std::nullopt};
  }
  if (d.z.is_zero()) return {ClassKind::Boundary, 0};
  if (intersect(model, d.z, d.z) == 0) return {ClassKind::Boundary, 1};
  return {ClassKind::Big, 2};
}

namespace {

ZariskiDecomp decompose_big(const SurfaceModel& model, const ClassVec& alpha) {
  ZariskiDecomp d;
  try {
    d = zariski_decompose(model, alpha);
  } catch (const NotPseudoEffective& e) {
    throw NotBig(std::string("class is not big: ") + e.what());
  }
  if (intersect(model, d.z, d.z) <= 0) throw NotBig("class is not big: Z(alpha)^2 = 0");
  return d;
}

}  // namespace

Rat derivative_vol(const SurfaceModel& model, const ClassVec& alpha, const ClassVec& beta) {
  ZariskiDecomp d = decompose_big(model, alpha);
  if (!is_nef_in_model(model, beta) && !model.curve_with_class(beta))
    throw UnsupportedDirection("direction is neither nef in the model nor a listed curve class");
  return 2 * intersect(model, d.z, beta);
}

MorseCertificate morse_gap(const SurfaceModel& model, const ClassVec& alpha, const ClassVec& beta) {
  if (!is_nef_in_model(model, alpha)) throw NotNef("alpha is not nef in the model");
  if (!is_nef_in_model(model, beta)) throw NotNef("beta is not nef in the model");
  MorseCertificate cert;
  cert.lhs = intersect(model, alpha, alpha) - 2 * intersect(model, alpha, beta);
  ClassVec diff = alpha - beta;
  cert.conclusion_big = classify(model, diff).kind == ClassKind::Big;
  if (cert.conclusion_big) cert.vol = volume(model, diff);
  if (cert.lhs > 0) cert.holds = cert.conclusion_big && *cert.vol >= cert.lhs;
  return cert;
}

std::vector<std::size_t> null_curves(const SurfaceModel& model, const ClassVec& z) {
  if (!is_nef_in_model(model, z) || intersect(model, z, z) <= 0)
    throw PreconditionFailed("null locus needs a class that is nef in the model with positive square");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < model.curves.size(); ++i)
    if (intersect(model, z, model.curves[i].cls) == 0) out.push_back(i);
  return out;
}

std::vector<std::size_t> non_kahler_curves(const SurfaceModel& model, const ClassVec& alpha) {
  ZariskiDecomp d = decompose_big(model, alpha);
  std::vector<std::size_t> nulls = null_curves(model, d.z);
  std::vector<std::size_t> out;
  std::set_union(d.support.begin(), d.support.end(), nulls.begin(), nulls.end(), std::back_inserter(out));
  if (!is_negative_definite(curve_gram(model, out)))
    throw InvariantViolation("non-Kahler curves do not form an exceptional family");
  return out;
}

std::vector<ExceptionalFamily> enumerate_exceptional_families(const SurfaceModel& model, bool allow_large) {
  const std::size_t n = model.curves.size();
  if (n > kMaxFamilyCurves && !allow_large)
    throw TooManyCurves("model lists " + std::to_string(n) + " curves; family enumeration is capped at " +
                        std::to_string(kMaxFamilyCurves));
  // Negative definiteness passes to principal submatrices, so every family
  // extends a smaller family by a larger index.
  std::vector<ExceptionalFamily> out{ExceptionalFamily{}};
  std::vector<ExceptionalFamily> level{ExceptionalFamily{}};
  while (!level.empty()) {
    std::vector<ExceptionalFamily> next;
    for (const auto& fam : level) {
      std::size_t start = fam.indices.empty() ? 0 : fam.indices.back() + 1;
      for (std::size_t j = start; j < n; ++j) {
        ExceptionalFamily cand = fam;
        cand.indices.push_back(j);
        if (is_negative_definite(curve_gram(model, cand.indices))) next.push_back(std::move(cand));
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return out;
}

NefLift orthogonal_nef_lift(const SurfaceModel& model, const ExceptionalFamily& family, const ClassVec& omega) {
  const auto& idx = family.indices;
  if (idx.empty()) throw PreconditionFailed("nef lift needs a nonempty family");
  Matrix s = curve_gram(model, idx);
  if (!is_negative_definite(s)) throw PreconditionFailed("family is not negative definite");
  std::vector<Rat> rhs;
  for (std::size_t i : idx) {
    Rat w = intersect(model, omega, model.curves[i].cls);
    if (w <= 0) throw PreconditionFailed("omega is not positive on " + model.curves[i].name);
    rhs.push_back(-w);
  }
  NefLift lift;
  lift.b = solve_linear(s, rhs);
  lift.gamma = omega;
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (lift.b[k] <= 0) throw InvariantViolation("nef lift coefficient is not positive");
    lift.gamma += lift.b[k] * model.curves[idx[k]].cls;
  }
  for (std::size_t i : idx)
    if (intersect(model, lift.gamma, model.curves[i].cls) != 0)
      throw InvariantViolation("nef lift is not orthogonal to the family");
  if (!is_nef_in_model(model, lift.gamma)) throw PreconditionFailed("omega is not positive on the model");
  if (intersect(model, lift.gamma, lift.gamma) <= 0) throw InvariantViolation("nef lift is not big");
  return lift;
}

ZariskiDecomp perturbed_decomposition(const SurfaceModel& model, const ClassVec& alpha, const ClassVec& omega,
                                      const Rat& eps) {
  if (eps <= 0) throw PreconditionFailed("epsilon must be positive");
  ZariskiDecomp base = zariski_decompose(model, alpha);
  ClassVec shifted = alpha + eps * omega;
  if (base.support.empty()) return zariski_decompose(model, shifted);

  NefLift lift = orthogonal_nef_lift(model, ExceptionalFamily{base.support}, omega);
  Rat threshold = base.coeffs[0] / lift.b[0];
  for (std::size_t k = 1; k < base.support.size(); ++k)
    threshold = std::min(threshold, Rat(base.coeffs[k] / lift.b[k]));
  if (eps >= threshold)
    throw EpsilonTooLarge("epsilon " + to_string(eps) + " reaches the threshold " + to_string(threshold),
                          threshold);

  ZariskiDecomp out{shifted, base.z + eps * lift.gamma, base.support, {}};
  for (std::size_t k = 0; k < base.support.size(); ++k) out.coeffs.push_back(base.coeffs[k] - eps * lift.b[k]);
  if (out != zariski_decompose(model, shifted))
    throw InvariantViolation("closed-form perturbation disagrees with the direct decomposition");
  return out;
}

}  // namespace zok
