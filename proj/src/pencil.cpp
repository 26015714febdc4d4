#include "zok/pencil.hpp"

#include <algorithm>
#include <sstream>

#include "zok/error.hpp"

namespace zok {

namespace {

struct SignProbe {
  Rat t0;
  Probe probe;

  // Sign of h0 + t*h1 at t0, or just to the right of it.
  int affine(const Rat& h0, const Rat& h1) const {
    int s = sgn(Rat(h0 + h1 * t0));
    if (s != 0 || probe == Probe::At) return s;
    return sgn(h1);
  }

  // Sign of a*t^2 + 2*b*t + c.
  int quadratic(const Rat& a, const Rat& b, const Rat& c) const {
    int s = sgn(Rat(a * t0 * t0 + 2 * b * t0 + c));
    if (s != 0 || probe == Probe::At) return s;
    s = sgn(Rat(a * t0 + b));
    if (s != 0) return s;
    return sgn(a);
  }
};

std::string support_names(const SurfaceModel& model, const std::vector<std::size_t>& s) {
  std::ostringstream os;
  os << "{";
  for (std::size_t k = 0; k < s.size(); ++k) os << (k ? "," : "") << model.curves[s[k]].name;
  os << "}";
  return os.str();
}

}  // namespace

AffineDecomp decompose_pencil(const SurfaceModel& model, const Pencil& line, const Rat& t0, Probe probe) {
  const SignProbe sp{t0, probe};
  const auto& curves = model.curves;
  std::vector<Rat> base_dot(curves.size()), dir_dot(curves.size());
  for (std::size_t i = 0; i < curves.size(); ++i) {
    base_dot[i] = intersect(model, line.base, curves[i].cls);
    dir_dot[i] = intersect(model, line.dir, curves[i].cls);
  }

  AffineDecomp out;
  std::vector<std::size_t>& support = out.support;
  for (std::size_t i = 0; i < curves.size(); ++i)
    if (sp.affine(base_dot[i], dir_dot[i]) < 0) support.push_back(i);

  for (;;) {
    out.coeff0.assign(support.size(), Rat(0));
    out.coeff1.assign(support.size(), Rat(0));
    if (!support.empty()) {
      Matrix g = curve_gram(model, support);
      if (!is_negative_definite(g))
        throw NotPseudoEffective("negative part support " + support_names(model, support) +
                                 " is not negative definite");
      std::vector<Rat> rhs0, rhs1;
      for (std::size_t i : support) {
        rhs0.push_back(base_dot[i]);
        rhs1.push_back(dir_dot[i]);
      }
      out.coeff0 = solve_linear(g, rhs0);
      out.coeff1 = solve_linear(g, rhs1);
      for (std::size_t k = 0; k < support.size(); ++k)
        if (sp.affine(out.coeff0[k], out.coeff1[k]) <= 0)
          throw NotPseudoEffective("coefficient of " + curves[support[k]].name + " is not positive");
    }
    out.z0 = line.base;
    out.z1 = line.dir;
    for (std::size_t k = 0; k < support.size(); ++k) {
      out.z0 -= out.coeff0[k] * curves[support[k]].cls;
      out.z1 -= out.coeff1[k] * curves[support[k]].cls;
    }

    std::vector<std::size_t> entering;
    for (std::size_t i = 0; i < curves.size(); ++i) {
      if (std::binary_search(support.begin(), support.end(), i)) continue;
      Rat h0 = intersect(model, out.z0, curves[i].cls);
      Rat h1 = intersect(model, out.z1, curves[i].cls);
      if (sp.affine(h0, h1) < 0) entering.push_back(i);
    }
    if (entering.empty()) break;
    support.insert(support.end(), entering.begin(), entering.end());
    std::sort(support.begin(), support.end());
  }

  const ClassVec& w = model.kahler;
  if (sp.affine(intersect(model, out.z0, w), intersect(model, out.z1, w)) < 0)
    throw NotPseudoEffective("positive part pairs negatively with the kahler class");
  if (sp.quadratic(intersect(model, out.z1, out.z1), intersect(model, out.z0, out.z1),
                   intersect(model, out.z0, out.z0)) < 0)
    throw NotPseudoEffective("positive part has negative square");
  return out;
}

}  // namespace zok
