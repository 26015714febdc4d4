#pragma once

// Independent cross-check routes for the main algorithms, plus the grids and
// generated models they are run over. Shipped in the library so the CLI can
// run them on user models.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zok/lattice.hpp"
#include "zok/okounkov.hpp"
#include "zok/zariski.hpp"

namespace zok {

struct OracleReport {
  std::string subject;
  bool agrees = true;
  std::optional<std::string> witness;  // present whenever agrees is false
};

struct ModelGenSpec {
  std::uint64_t seed = 0;
  std::size_t rank = 1;
  std::size_t num_curves = 1;
  int coord_bound = 2;
};

// Default cap on the subset search; ZOK_MAX_SUBSET_CURVES overrides it.
inline constexpr std::size_t kOracleMaxCurves = 16;
std::size_t oracle_curve_cap();

// Tries every negative definite subset as the support. nullopt means no
// candidate exists (not pseudo-effective in the model). Throws
// MultipleCandidates when uniqueness fails, TooManyCurves above the cap.
std::optional<ZariskiDecomp> brute_force_zariski(const SurfaceModel& model, const ClassVec& alpha);

// d/dt Z_t^2 at 0+ read off the first chamber of alpha + t beta.
Rat derivative_by_chambers(const SurfaceModel& model, const ClassVec& alpha, const ClassVec& beta);

// Trapezoid integral of g - f over the common refinement of breakpoints.
// Throws PreconditionFailed when the domains differ or f > g somewhere.
ExtRat area_by_integration(const PiecewiseLinear& f, const PiecewiseLinear& g);

// Deterministic blow-up type model; throws GenerationFailure.
SurfaceModel random_model(const ModelGenSpec& spec);

// All integer classes with coordinates in [-bound, bound], in lexicographic
// order.
std::vector<ClassVec> integer_grid(std::size_t rank, int bound);

// Generic point, plus for every other listed curve D meeting C a point of
// C cap D carrying the full multiplicity D.C.
std::vector<FlagSpec> flag_choices(const SurfaceModel& model, std::size_t curve);

struct VerifyOptions {
  int grid_bound = 2;
};

// Runs every cross-check on the model; reports are in a fixed order.
std::vector<OracleReport> verify_model(const SurfaceModel& model, const VerifyOptions& opts = {});

}  // namespace zok
