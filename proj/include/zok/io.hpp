#pragma once

// JSON / CSV / SVG serialization. JSON objects use sorted keys, so every
// dump is byte-stable across runs.

#include <filesystem>
#include <string>
#include <string_view>

#include <json.hpp>

#include "zok/lattice.hpp"
#include "zok/okounkov.hpp"
#include "zok/oracle.hpp"
#include "zok/zariski.hpp"

namespace zok {

using Json = nlohmann::json;

// Integers that fit in 64 bits are bare numbers, everything else "p/q".
Json to_json(const Rat& r);
// Rationals as above; irrationals as {"d", "p", "q"}.
Json to_json(const ExtRat& x);
Json to_json(const ClassVec& v);
Rat rat_from_json(const Json& j);  // throws ParseError

SurfaceModel model_from_json(const Json& j);  // ParseError, NonSymmetric, InvalidModel
SurfaceModel load_model(const std::filesystem::path& path);
Json model_to_json(const SurfaceModel& model);

// "1,-1/2,0" in the model basis, or the name of a listed curve.
ClassVec parse_class(const SurfaceModel& model, std::string_view text);

Json decomposition_json(const SurfaceModel& model, const ZariskiDecomp& d);
Json polygon_json(const SurfaceModel& model, const OkounkovPolygon& p, const FlagSpec& flag);
Json chambers_json(const SurfaceModel& model, const std::vector<SegmentChamber>& chambers);
Json report_json(const OracleReport& r);

// One "x,y" row per vertex with exact values.
std::string polygon_csv(const OkounkovPolygon& p);
std::string polygon_svg(const OkounkovPolygon& p);

}  // namespace zok
