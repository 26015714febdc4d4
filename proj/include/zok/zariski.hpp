#pragma once

// Divisorial Zariski decomposition on a surface model and the quantities
// built from it. Cone membership is always relative to the listed curves:
// a class the model calls nef or pseudo-effective may fail to be so on a
// surface with curves the model does not list.

#include <optional>
#include <vector>

#include "zok/lattice.hpp"

namespace zok {

struct ZariskiDecomp {
  ClassVec alpha;
  ClassVec z;                        // positive part
  std::vector<std::size_t> support;  // sorted curve indices of the negative part
  std::vector<Rat> coeffs;           // coeffs[k] belongs to support[k], all > 0

  // Coefficient of curve `index` in N (zero off the support).
  Rat coeff(std::size_t index) const;
  ClassVec negative_class(const SurfaceModel& model) const;
  friend bool operator==(const ZariskiDecomp&, const ZariskiDecomp&) = default;
};

enum class ClassKind { NotPsefInModel, Boundary, Big };

struct Classification {
  ClassKind kind = ClassKind::NotPsefInModel;
  std::optional<int> numdim;  // nullopt encodes -infinity
  friend bool operator==(const Classification&, const Classification&) = default;
};

struct ExceptionalFamily {
  std::vector<std::size_t> indices;
  friend bool operator==(const ExceptionalFamily&, const ExceptionalFamily&) = default;
};

struct MorseCertificate {
  Rat lhs;                 // alpha^2 - 2 alpha.beta
  bool conclusion_big = false;
  std::optional<Rat> vol;  // vol(alpha - beta) when it is big
  bool holds = true;
};

struct NefLift {
  ClassVec gamma;       // omega + sum b_i N_i
  std::vector<Rat> b;   // aligned with the family indices
};

// alpha.D >= 0 for every listed D, alpha^2 >= 0, alpha.omega >= 0.
bool is_nef_in_model(const SurfaceModel& model, const ClassVec& alpha);

// Throws NotPseudoEffective.
ZariskiDecomp zariski_decompose(const SurfaceModel& model, const ClassVec& alpha);

// Empty when `d` satisfies every decomposition invariant.
std::vector<std::string> decomposition_violations(const SurfaceModel& model, const ZariskiDecomp& d);

Rat volume(const SurfaceModel& model, const ClassVec& alpha);

Classification classify(const SurfaceModel& model, const ClassVec& alpha);

// Right derivative of vol(alpha + t beta) at 0, for big alpha and beta nef in
// the model or equal to a listed curve class. Throws NotBig,
// UnsupportedDirection.
Rat derivative_vol(const SurfaceModel& model, const ClassVec& alpha, const ClassVec& beta);

// Throws NotNef when alpha or beta is not nef in the model.
MorseCertificate morse_gap(const SurfaceModel& model, const ClassVec& alpha, const ClassVec& beta);

// Listed curves with Z.D = 0, for Z nef in the model with Z^2 > 0.
std::vector<std::size_t> null_curves(const SurfaceModel& model, const ClassVec& z);

// Supp N(alpha) together with the null curves of Z(alpha). Throws NotBig.
std::vector<std::size_t> non_kahler_curves(const SurfaceModel& model, const ClassVec& alpha);

// Every subset of the curve list with negative definite Gram matrix, the
// empty one first, ordered by size and then lexicographically. Refuses
// models with more than kMaxFamilyCurves curves unless allow_large is set.
inline constexpr std::size_t kMaxFamilyCurves = 20;
std::vector<ExceptionalFamily> enumerate_exceptional_families(const SurfaceModel& model, bool allow_large = false);

// The unique b > 0 with (omega + sum b_i N_i).N_j = 0 on the family.
NefLift orthogonal_nef_lift(const SurfaceModel& model, const ExceptionalFamily& family, const ClassVec& omega);

// Closed form Z(alpha + eps omega) = Z(alpha) + eps gamma,
// N = sum (a_i - eps b_i) N_i, checked against a direct decomposition.
// Throws EpsilonTooLarge carrying min a_i / b_i when eps reaches it.
ZariskiDecomp perturbed_decomposition(const SurfaceModel& model, const ClassVec& alpha, const ClassVec& omega,
                                      const Rat& eps);

}  // namespace zok
