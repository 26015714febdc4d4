#include "zok/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "zok/error.hpp"

namespace zok {

Json to_json(const Rat& r) {
  if (r.get_den() == 1 && fits_int64(r.get_num())) return Json(static_cast<std::int64_t>(r.get_num().get_si()));
  return Json(to_string(r));
}

Json to_json(const ExtRat& x) {
  if (x.is_rational()) return to_json(x.p());
  return Json{{"p", to_json(x.p())}, {"q", to_json(x.q())}, {"d", to_json(Rat(x.d()))}};
}

Json to_json(const ClassVec& v) {
  Json out = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(to_json(v[i]));
  return out;
}

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return Rat(j.dump());
  if (j.is_string()) return parse_rat(j.get<std::string>());
  throw ParseError("expected an integer or a \"p/q\" string, got " + j.dump());
}

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

ClassVec class_from_json(const Json& j, std::size_t rank, const std::string& what) {
  if (!j.is_array()) throw ParseError(what + " must be an array");
  if (j.size() != rank)
    throw DimensionMismatch(what + " has length " + std::to_string(j.size()) + ", expected " + std::to_string(rank));
  ClassVec v(rank);
  for (std::size_t i = 0; i < rank; ++i) v[i] = rat_from_json(j[i]);
  return v;
}

}  // namespace

SurfaceModel model_from_json(const Json& j) {
  SurfaceModel m;
  const Json& name = field(j, "name");
  if (!name.is_string()) throw ParseError("\"name\" must be a string");
  m.name = name.get<std::string>();
  const Json& rank_j = field(j, "rank");
  if (!rank_j.is_number_unsigned() || rank_j.get<std::size_t>() == 0)
    throw ParseError("\"rank\" must be a positive integer");
  const std::size_t n = rank_j.get<std::size_t>();

  const Json& gram = field(j, "gram");
  if (!gram.is_array() || gram.size() != n) throw DimensionMismatch("gram must have " + std::to_string(n) + " rows");
  Matrix g(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!gram[r].is_array() || gram[r].size() != n)
      throw DimensionMismatch("gram row " + std::to_string(r) + " must have " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) g(r, c) = rat_from_json(gram[r][c]);
  }
  m.gram = GramForm(g);
  m.kahler = class_from_json(field(j, "kahler"), n, "kahler");

  const Json& curves = field(j, "curves");
  if (!curves.is_array()) throw ParseError("\"curves\" must be an array");
  for (const Json& c : curves) {
    const Json& cname = field(c, "name");
    if (!cname.is_string()) throw ParseError("curve name must be a string");
    std::string s = cname.get<std::string>();
    m.curves.push_back({s, class_from_json(field(c, "class"), n, "class of " + s)});
  }

  ValidationReport rep = validate_model(m);
  if (!rep.ok()) {
    std::string msg = "model " + m.name + " is invalid:";
    for (const auto& issue : rep.issues) msg += "\n  " + issue;
    throw InvalidModel(msg);
  }
  return m;
}

SurfaceModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open model file " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
  return model_from_json(j);
}

Json model_to_json(const SurfaceModel& model) {
  Json gram = Json::array();
  for (std::size_t r = 0; r < model.rank(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < model.rank(); ++c) row.push_back(to_json(model.gram(r, c)));
    gram.push_back(row);
  }
  Json curves = Json::array();
  for (const auto& c : model.curves) curves.push_back({{"name", c.name}, {"class", to_json(c.cls)}});
  return {{"name", model.name},
          {"rank", model.rank()},
          {"gram", gram},
          {"kahler", to_json(model.kahler)},
          {"curves", curves}};
}

ClassVec parse_class(const SurfaceModel& model, std::string_view text) {
  std::string s(text);
  if (auto idx = model.find_curve(s)) return model.curves[*idx].cls;
  std::vector<Rat> coords;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) coords.push_back(parse_rat(part));
  if (!s.empty() && s.back() == ',') throw ParseError("trailing comma in class \"" + s + "\"");
  if (coords.size() != model.rank())
    throw DimensionMismatch("class \"" + s + "\" has " + std::to_string(coords.size()) + " coordinates, model rank is " +
                            std::to_string(model.rank()));
  return ClassVec(coords);
}

Json decomposition_json(const SurfaceModel& model, const ZariskiDecomp& d) {
  Json n = Json::array();
  for (std::size_t k = 0; k < d.support.size(); ++k)
    n.push_back({{"curve", model.curves[d.support[k]].name}, {"coeff", to_json(d.coeffs[k])}});
  Classification cl = classify(model, d.alpha);
  return {{"class", to_json(d.alpha)},
          {"Z", to_json(d.z)},
          {"N", n},
          {"volume", to_json(intersect(model, d.z, d.z))},
          {"numdim", cl.numdim ? Json(*cl.numdim) : Json(nullptr)}};
}

namespace {

Json pl_json(const PiecewiseLinear& f) {
  Json t = Json::array(), v = Json::array();
  for (const auto& x : f.breakpoints()) t.push_back(to_json(x));
  for (const auto& x : f.values()) v.push_back(to_json(x));
  return {{"breakpoints", t}, {"values", v}};
}

}  // namespace

Json polygon_json(const SurfaceModel& model, const OkounkovPolygon& p, const FlagSpec& flag) {
  Json verts = Json::array();
  for (const Point& v : p.vertices) verts.push_back(Json::array({to_json(v.x), to_json(v.y)}));
  Json mults = Json::object();
  for (const auto& [i, m] : flag.mults) mults[model.curves[i].name] = to_json(m);
  return {{"flag", {{"curve", model.curves[flag.curve].name}, {"mults", mults}}},
          {"a", to_json(p.a)},
          {"s", to_json(p.s)},
          {"vertices", verts},
          {"area", to_json(p.area)},
          {"f", pl_json(p.f)},
          {"g", pl_json(p.g)}};
}

Json chambers_json(const SurfaceModel& model, const std::vector<SegmentChamber>& chambers) {
  Json out = Json::array();
  for (const auto& ch : chambers) {
    Json n = Json::array();
    for (std::size_t k = 0; k < ch.support.size(); ++k)
      n.push_back({{"curve", model.curves[ch.support[k]].name},
                   {"coeff0", to_json(ch.coeff0[k])},
                   {"coeff1", to_json(ch.coeff1[k])}});
    out.push_back({{"t_lo", to_json(ch.t_lo)}, {"t_hi", to_json(ch.t_hi)}, {"z0", to_json(ch.z0)},
                   {"z1", to_json(ch.z1)}, {"N", n}});
  }
  return out;
}

Json report_json(const OracleReport& r) {
  return {{"subject", r.subject}, {"agrees", r.agrees}, {"witness", r.witness ? Json(*r.witness) : Json(nullptr)}};
}

std::string polygon_csv(const OkounkovPolygon& p) {
  std::string out = "x,y\n";
  for (const Point& v : p.vertices) out += v.x.str() + "," + v.y.str() + "\n";
  return out;
}

namespace {

long floor_of(const ExtRat& x) {
  long k = static_cast<long>(std::floor(x.to_double()));
  while (ExtRat(Rat(k)) > x) --k;
  while (ExtRat(Rat(k + 1)) <= x) ++k;
  return k;
}

long ceil_of(const ExtRat& x) { return -floor_of(-x); }

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0 ? 0.0 : v);
  return buf;
}

}  // namespace

std::string polygon_svg(const OkounkovPolygon& p) {
  ExtRat xmin = p.vertices.front().x, xmax = xmin, ymin = p.vertices.front().y, ymax = ymin;
  for (const Point& v : p.vertices) {
    xmin = std::min(xmin, v.x);
    xmax = std::max(xmax, v.x);
    ymin = std::min(ymin, v.y);
    ymax = std::max(ymax, v.y);
  }
  long x0 = floor_of(xmin), x1 = ceil_of(xmax), y0 = floor_of(ymin), y1 = ceil_of(ymax);
  if (x1 == x0) ++x1;
  if (y1 == y0) ++y1;
  // SVG y grows downward, so the drawing uses (x, -y).
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << x0 << " " << -y1 << " " << (x1 - x0) << " "
     << (y1 - y0) << "\">\n";
  const double w = static_cast<double>(std::max(x1 - x0, y1 - y0)) / 200.0;
  os << "  <polygon points=\"";
  for (std::size_t i = 0; i < p.vertices.size(); ++i)
    os << (i ? " " : "") << num(p.vertices[i].x.to_double()) << "," << num(-p.vertices[i].y.to_double());
  os << "\" fill=\"#9ecae1\" stroke=\"#08519c\" stroke-width=\"" << num(w) << "\"/>\n";
  for (const ExtRat& t : p.f.breakpoints()) {
    std::string tx = num(t.to_double());
    os << "  <line x1=\"" << tx << "\" y1=\"" << num(-y0 + 0.0) << "\" x2=\"" << tx << "\" y2=\""
       << num(-y0 - 4 * w) << "\" stroke=\"#000\" stroke-width=\"" << num(w) << "\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace zok
