#include "zok/oracle.hpp"

#include <algorithm>
#include <cstdlib>
#include <random>
#include <set>
#include <sstream>

#include "zok/error.hpp"

namespace zok {

std::size_t oracle_curve_cap() {
  if (const char* env = std::getenv("ZOK_MAX_SUBSET_CURVES")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0') return v;
  }
  return kOracleMaxCurves;
}

std::optional<ZariskiDecomp> brute_force_zariski(const SurfaceModel& model, const ClassVec& alpha) {
  const std::size_t n = model.curves.size();
  if (n > oracle_curve_cap())
    throw TooManyCurves("subset oracle capped at " + std::to_string(oracle_curve_cap()) + " curves");
  std::optional<ZariskiDecomp> found;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) subset.push_back(i);
    Matrix g = curve_gram(model, subset);
    if (!is_negative_definite(g)) continue;
    std::vector<Rat> rhs;
    for (std::size_t i : subset) rhs.push_back(intersect(model, alpha, model.curves[i].cls));
    std::vector<Rat> a = subset.empty() ? std::vector<Rat>{} : solve_linear(g, rhs);
    if (std::any_of(a.begin(), a.end(), [](const Rat& x) { return x <= 0; })) continue;
    ClassVec z = alpha;
    for (std::size_t k = 0; k < subset.size(); ++k) z -= a[k] * model.curves[subset[k]].cls;
    if (!is_nef_in_model(model, z)) continue;
    if (found) throw MultipleCandidates("two orthogonal decompositions exist; the model breaks uniqueness");
    found = ZariskiDecomp{alpha, z, subset, a};
  }
  return found;
}

Rat derivative_by_chambers(const SurfaceModel& model, const ClassVec& alpha, const ClassVec& beta) {
  if (classify(model, alpha).kind != ClassKind::Big) throw NotBig("derivative needs a big class");
  if (!is_nef_in_model(model, beta) && !model.curve_with_class(beta))
    throw UnsupportedDirection("direction is neither nef in the model nor a listed curve class");
  LineChamber first = chamber_from(model, Pencil{alpha, beta}, Rat(0));
  return 2 * intersect(model, first.chamber.z0, first.chamber.z1);
}

ExtRat area_by_integration(const PiecewiseLinear& f, const PiecewiseLinear& g) {
  if (!(f.lo() == g.lo()) || !(f.hi() == g.hi())) throw PreconditionFailed("envelopes have different domains");
  std::vector<ExtRat> ts = f.breakpoints();
  ts.insert(ts.end(), g.breakpoints().begin(), g.breakpoints().end());
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  ExtRat area;
  ExtRat prev_gap;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    ExtRat gap = g(ts[k]) - f(ts[k]);
    if (gap.sign() < 0) throw PreconditionFailed("f > g at t = " + ts[k].str());
    if (k > 0) area += (ts[k] - ts[k - 1]) * (gap + prev_gap) / ExtRat(2);
    prev_gap = gap;
  }
  return area;
}

SurfaceModel random_model(const ModelGenSpec& spec) {
  if (spec.rank == 0) throw GenerationFailure("rank must be at least 1");
  const std::size_t n = spec.rank;
  SurfaceModel m;
  m.name = "random-" + std::to_string(spec.seed) + "-" + std::to_string(n);
  Matrix g(n, n);
  g(0, 0) = 1;
  for (std::size_t i = 1; i < n; ++i) g(i, i) = -1;
  m.gram = GramForm(g);
  m.kahler = ClassVec(n);
  m.kahler[0] = Rat(static_cast<long>(2 * n - 1));
  for (std::size_t i = 1; i < n; ++i) m.kahler[i] = -1;

  if (n == 1) {
    m.curves.push_back({"L", ClassVec{Rat(1)}});
    return m;
  }
  for (std::size_t i = 1; i < n; ++i) {
    ClassVec e(n);
    e[i] = 1;
    m.curves.push_back({"E" + std::to_string(i), e});
  }

  std::mt19937_64 rng(spec.seed);
  const int bound = std::max(1, spec.coord_bound);
  auto draw = [&](int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
  const int max_attempts = 2000;
  for (int attempt = 0; attempt < max_attempts && m.curves.size() < spec.num_curves; ++attempt) {
    ClassVec c(n);
    int degree = draw(1, bound);
    c[0] = degree;
    for (std::size_t i = 1; i < n; ++i) c[i] = -draw(0, degree);
    if (m.curve_with_class(c) || intersect(m, m.kahler, c) <= 0) continue;
    bool meets_ok = std::all_of(m.curves.begin(), m.curves.end(),
                                [&](const CurveRecord& d) { return intersect(m, c, d.cls) >= 0; });
    if (!meets_ok) continue;
    m.curves.push_back({"C" + std::to_string(m.curves.size() + 1), c});
  }
  if (m.curves.size() < spec.num_curves)
    throw GenerationFailure("could not place " + std::to_string(spec.num_curves) + " curves (seed " +
                            std::to_string(spec.seed) + ")");
  ValidationReport rep = validate_model(m);
  if (!rep.ok()) throw GenerationFailure("generated model invalid (seed " + std::to_string(spec.seed) + "): " +
                                         rep.issues.front());
  return m;
}

std::vector<ClassVec> integer_grid(std::size_t rank, int bound) {
  std::vector<ClassVec> out;
  std::vector<int> c(rank, -bound);
  for (;;) {
    ClassVec v(rank);
    for (std::size_t i = 0; i < rank; ++i) v[i] = c[i];
    out.push_back(v);
    std::size_t k = rank;
    while (k > 0 && c[k - 1] == bound) c[--k] = -bound;
    if (k == 0) return out;
    ++c[k - 1];
  }
}

std::vector<FlagSpec> flag_choices(const SurfaceModel& model, std::size_t curve) {
  std::vector<FlagSpec> out{FlagSpec{curve, {}}};
  for (std::size_t j = 0; j < model.curves.size(); ++j) {
    if (j == curve) continue;
    Rat m = intersect(model, model.curves[j].cls, model.curves[curve].cls);
    if (m > 0) out.push_back(FlagSpec{curve, {{j, m}}});
  }
  return out;
}

namespace {

std::string show(const ClassVec& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
  os << ")";
  return os.str();
}

class Check {
 public:
  explicit Check(std::string subject) { r_.subject = std::move(subject); }
  void fail(const std::string& witness) {
    if (r_.agrees) {
      r_.agrees = false;
      r_.witness = witness;
    }
  }
  OracleReport done() && { return std::move(r_); }

 private:
  OracleReport r_;
};

}  // namespace

std::vector<OracleReport> verify_model(const SurfaceModel& model, const VerifyOptions& opts) {
  const auto grid = integer_grid(model.rank(), opts.grid_bound);
  std::vector<OracleReport> out;

  std::vector<ClassVec> big, nef;
  {
    Check oracle("zariski-vs-subset-oracle");
    Check inv("decomposition-invariants");
    for (const ClassVec& a : grid) {
      std::optional<ZariskiDecomp> direct;
      try {
        direct = zariski_decompose(model, a);
      } catch (const NotPseudoEffective&) {
      }
      std::optional<ZariskiDecomp> brute = brute_force_zariski(model, a);
      if (direct.has_value() != brute.has_value() || (direct && *direct != *brute))
        oracle.fail("class " + show(a) + ": iteration " + (direct ? "Z=" + show(direct->z) : "NotPsef") +
                    ", oracle " + (brute ? "Z=" + show(brute->z) : "NotPsef"));
      if (direct) {
        auto v = decomposition_violations(model, *direct);
        if (!v.empty()) inv.fail("class " + show(a) + ": " + v.front());
        if (intersect(model, direct->z, direct->z) > 0) big.push_back(a);
      }
      if (is_nef_in_model(model, a)) nef.push_back(a);
    }
    out.push_back(std::move(oracle).done());
    out.push_back(std::move(inv).done());
  }

  {
    Check deriv("derivative-vs-chambers");
    std::vector<ClassVec> dirs = nef;
    for (const auto& c : model.curves) dirs.push_back(c.cls);
    for (const ClassVec& a : big)
      for (const ClassVec& b : dirs) {
        Rat lhs = derivative_vol(model, a, b);
        Rat rhs = derivative_by_chambers(model, a, b);
        if (lhs != rhs)
          deriv.fail("alpha " + show(a) + ", beta " + show(b) + ": " + to_string(lhs) + " vs " + to_string(rhs));
      }
    out.push_back(std::move(deriv).done());
  }

  {
    Check vol("volume-equals-twice-area");
    Check integ("shoelace-vs-integration");
    for (const ClassVec& a : big)
      for (std::size_t c = 0; c < model.curves.size(); ++c)
        for (const FlagSpec& flag : flag_choices(model, c)) {
          OkounkovPolygon p;
          try {
            p = okounkov_polygon(model, a, flag);
          } catch (const InvariantViolation& e) {
            vol.fail("alpha " + show(a) + ", flag " + model.curves[c].name + ": " + e.what());
            continue;
          }
          if (!(ExtRat(2) * p.area == ExtRat(volume(model, a))))
            vol.fail("alpha " + show(a) + ", flag " + model.curves[c].name);
          ExtRat integral = area_by_integration(p.f, p.g);
          if (!(integral == p.area))
            integ.fail("alpha " + show(a) + ", flag " + model.curves[c].name + ": " + p.area.str() + " vs " +
                       integral.str());
        }
    out.push_back(std::move(vol).done());
    out.push_back(std::move(integ).done());
  }

  {
    Check morse("morse-inequality");
    for (const ClassVec& a : nef)
      for (const ClassVec& b : nef) {
        MorseCertificate cert = morse_gap(model, a, b);
        if (!cert.holds) morse.fail("alpha " + show(a) + ", beta " + show(b) + ": lhs " + to_string(cert.lhs));
      }
    out.push_back(std::move(morse).done());
  }
  return out;
}

}  // namespace zok
