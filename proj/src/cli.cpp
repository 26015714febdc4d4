#include "zok/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>

#include "zok/error.hpp"
#include "zok/io.hpp"
#include "zok/okounkov.hpp"
#include "zok/oracle.hpp"
#include "zok/zariski.hpp"

#ifndef ZOK_MODEL_DIR
#define ZOK_MODEL_DIR "models"
#endif

namespace zok::cli {
namespace fs = std::filesystem;

namespace {

struct Args {
  std::string model;
  std::string cls;
  std::string direction;
  std::string beta;
  std::string flag;
  std::vector<std::string> mults;
  std::string format = "json";
  std::string svg;
  bool verify = false;
  bool allow_large = false;
  int grid = 2;
};

fs::path resolve_model(const std::string& arg) {
  if (fs::exists(arg)) return arg;
  const char* env = std::getenv("ZOK_MODEL_DIR");
  fs::path dir = env ? fs::path(env) : fs::path(ZOK_MODEL_DIR);
  std::string name = arg == "blowup" || arg == "blowup.json" ? "blowup1.json" : arg;
  for (const fs::path& p : {dir / name, dir / (name + ".json")})
    if (fs::exists(p)) return p;
  throw ParseError("model file not found: " + arg);
}

FlagSpec parse_flag(const SurfaceModel& m, const Args& a) {
  if (a.flag.empty()) throw ParseError("--flag is required");
  auto c = m.find_curve(a.flag);
  if (!c) throw UnknownCurve("no listed curve named " + a.flag);
  FlagSpec flag{*c, {}};
  for (const std::string& s : a.mults) {
    auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError("--mult expects NAME=RAT, got " + s);
    auto i = m.find_curve(s.substr(0, eq));
    if (!i) throw UnknownCurve("no listed curve named " + s.substr(0, eq));
    flag.mults[*i] = parse_rat(s.substr(eq + 1));
  }
  validate_flag(m, flag);
  return flag;
}

const char* kind_name(ClassKind k) {
  switch (k) {
    case ClassKind::Big: return "big";
    case ClassKind::Boundary: return "boundary";
    default: return "not-psef";
  }
}

Json family_json(const SurfaceModel& m, const std::vector<ExceptionalFamily>& fams) {
  Json out = Json::array();
  for (const auto& f : fams) {
    Json names = Json::array();
    for (std::size_t i : f.indices) names.push_back(m.curves[i].name);
    out.push_back(names);
  }
  return out;
}

struct Failure {
  int code;
  Json error;
};

class Runner {
 public:
  Runner(const std::string& command, const Args& a, std::ostringstream& out, std::ostringstream& err)
      : cmd_(command), a_(a), out_(out), err_(err) {}

  int operator()() {
    model_ = load_model(resolve_model(a_.model));
    int code = dispatch();
    if (a_.verify && cmd_ != "verify") {
      if (!verify_reports(err_)) throw InvariantViolation("--verify: an oracle cross-check failed");
    }
    return code;
  }

  const SurfaceModel* model() const { return model_ ? &*model_ : nullptr; }

 private:
  const SurfaceModel& m() const { return *model_; }
  ClassVec cls() const {
    if (a_.cls.empty()) throw ParseError("-c/--class is required");
    return parse_class(m(), a_.cls);
  }
  void emit(const Json& j) { out_ << j.dump(2) << "\n"; }

  bool verify_reports(std::ostream& os) {
    bool all = true;
    for (const auto& r : verify_model(m(), VerifyOptions{a_.grid})) {
      os << report_json(r).dump() << "\n";
      all = all && r.agrees;
    }
    return all;
  }

  int dispatch() {
    if (cmd_ == "validate") {
      Inertia s = signature(m().gram);
      emit({{"name", m().name},
            {"ok", true},
            {"rank", m().rank()},
            {"curves", m().curves.size()},
            {"signature", Json::array({s.n_plus, s.n_minus, s.n_zero})}});
    } else if (cmd_ == "zariski") {
      emit(decomposition_json(m(), zariski_decompose(m(), cls())));
    } else if (cmd_ == "classify") {
      ClassVec c = cls();
      Classification k = classify(m(), c);
      emit({{"class", to_json(c)}, {"kind", kind_name(k.kind)}, {"numdim", k.numdim ? Json(*k.numdim) : Json()}});
    } else if (cmd_ == "volume") {
      ClassVec c = cls();
      emit({{"class", to_json(c)}, {"volume", to_json(volume(m(), c))}});
    } else if (cmd_ == "derivative") {
      ClassVec c = cls();
      if (a_.direction.empty()) throw ParseError("-d/--direction is required");
      ClassVec b = parse_class(m(), a_.direction);
      emit({{"class", to_json(c)}, {"direction", to_json(b)}, {"derivative", to_json(derivative_vol(m(), c, b))}});
    } else if (cmd_ == "morse") {
      ClassVec c = cls();
      if (a_.beta.empty()) throw ParseError("-b/--beta is required");
      ClassVec b = parse_class(m(), a_.beta);
      MorseCertificate cert = morse_gap(m(), c, b);
      emit({{"alpha", to_json(c)},
            {"beta", to_json(b)},
            {"lhs", to_json(cert.lhs)},
            {"conclusion_big", cert.conclusion_big},
            {"vol", cert.vol ? to_json(*cert.vol) : Json()},
            {"holds", cert.holds}});
      if (!cert.holds) throw InvariantViolation("Morse certificate fails");
      if (cert.lhs <= 0) return kMath;
    } else if (cmd_ == "okounkov") {
      FlagSpec flag = parse_flag(m(), a_);
      OkounkovPolygon p = okounkov_polygon(m(), cls(), flag);
      if (a_.format == "json") emit(polygon_json(m(), p, flag));
      else if (a_.format == "csv") out_ << polygon_csv(p);
      else out_ << polygon_svg(p);
      if (!a_.svg.empty()) {
        std::ofstream f(a_.svg, std::ios::binary);
        if (!f) throw ParseError("cannot write " + a_.svg);
        f << polygon_svg(p);
      }
    } else if (cmd_ == "restricted") {
      FlagSpec flag = parse_flag(m(), a_);
      Interval iv = restricted_body(m(), cls(), flag);
      emit({{"lo", to_json(iv.lo)}, {"hi", to_json(iv.hi)}});
    } else if (cmd_ == "boundary") {
      FlagSpec flag = parse_flag(m(), a_);
      BoundaryBody b = boundary_body(m(), cls(), flag);
      emit({{"kind", b.kind == BodyKind::Point ? "point" : "segment"},
            {"dimension", b.dimension()},
            {"base", to_json(b.base)},
            {"top", to_json(b.top)}});
    } else if (cmd_ == "chambers") {
      if (a_.flag.empty()) throw ParseError("--flag is required");
      auto c = m().find_curve(a_.flag);
      if (!c) throw UnknownCurve("no listed curve named " + a_.flag);
      emit(chambers_json(m(), segment_chambers(m(), cls(), *c)));
    } else if (cmd_ == "families") {
      emit(family_json(m(), enumerate_exceptional_families(m(), a_.allow_large)));
    } else if (cmd_ == "verify") {
      if (!verify_reports(out_)) throw InvariantViolation("an oracle cross-check failed");
    }
    return kOk;
  }

  std::string cmd_;
  const Args& a_;
  std::ostringstream& out_;
  std::ostringstream& err_;
  std::optional<SurfaceModel> model_;
};

void dump_repro(const std::vector<std::string>& args, const std::string& what, const SurfaceModel* model,
                std::ostream& err) {
  Json j{{"args", args}, {"error", what}, {"model", model ? model_to_json(*model) : Json()}};
  const char* dir_env = std::getenv("ZOK_REPRO_DIR");
  std::error_code ec;
  fs::path dir = dir_env ? fs::path(dir_env) : fs::temp_directory_path(ec);
  fs::path file = dir / ("zok-repro-" + std::to_string(std::hash<std::string>{}(j.dump())) + ".json");
  std::ofstream f(file);
  f << j.dump(2) << "\n";
  err << (f ? "reproduction written to " + file.string() : "could not write reproduction file") << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Zariski decompositions, volumes and Okounkov polygons on surface models", "zok"};
  app.require_subcommand(1, 1);
  Args a;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"validate", "load and validate a model"},
      {"zariski", "divisorial Zariski decomposition of a class"},
      {"classify", "big / boundary / not pseudo-effective, with numerical dimension"},
      {"volume", "volume Z(alpha)^2"},
      {"derivative", "right derivative of the volume along a direction"},
      {"morse", "Morse inequality certificate for nef alpha, beta"},
      {"okounkov", "Okounkov polygon for a big class and a flag"},
      {"restricted", "restricted body [f(0), g(0)]"},
      {"boundary", "body of a pseudo-effective class that is not big"},
      {"chambers", "chamber walk along alpha - tC"},
      {"families", "negative definite subsets of the curve list"},
      {"verify", "run the oracle cross-checks on the model"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("-m,--model", a.model, "model JSON file or fixture name")->required();
    sub->add_option("-c,--class", a.cls, "class as comma separated rationals, or a curve name")
        ->allow_extra_args(false);
    sub->add_option("-d,--direction", a.direction, "direction beta for derivative");
    sub->add_option("-b,--beta", a.beta, "second class for morse");
    sub->add_option("--flag", a.flag, "flag curve name");
    sub->add_option("--mult", a.mults, "local multiplicity NAME=RAT at the flag point")->take_all();
    sub->add_option("--format", a.format, "output format")->check(CLI::IsMember({"json", "csv", "svg"}));
    sub->add_option("--svg", a.svg, "also write the polygon drawing to this file");
    sub->add_flag("--verify", a.verify, "run the oracle suite and report on stderr");
    sub->add_flag("--allow-large", a.allow_large, "lift the curve cap for families");
    sub->add_option("--grid", a.grid, "coordinate bound of the verification grid")->check(CLI::Range(0, 6));
  }

  std::ostringstream o, e;
  int code = kOk;
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& pe) {
    int rc = app.exit(pe, out, err);
    return rc == 0 ? kOk : kInput;
  }
  CLI::App* sub = app.get_subcommands().front();
  Runner runner(sub->get_name(), a, o, e);
  try {
    code = runner();
  } catch (const MathError& ex) {
    o << Json{{"error", ex.kind()}, {"message", ex.what()}}.dump(2) << "\n";
    e << "error: " << ex.kind() << ": " << ex.what() << "\n";
    code = kMath;
  } catch (const InputError& ex) {
    e << "error: " << ex.kind() << ": " << ex.what() << "\n";
    code = kInput;
  } catch (const InvariantViolation& ex) {
    e << "internal error: " << ex.what() << "\n";
    dump_repro(args, ex.what(), runner.model(), e);
    code = kInternal;
  }
  out << o.str();
  err << e.str();
  return code;
}

}  // namespace zok::cli
