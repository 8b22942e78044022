#include "wedgepow/json_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace wedgepow {

using nlohmann::json;

namespace {

std::int64_t integer_field(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw InputError(where + ": expected an integer, got " + v.dump());
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)) {
    throw InputError(where + ": integer out of range");
  }
  return v.get<std::int64_t>();
}

}  // namespace

PointConfiguration configuration_from_json(const json& j) {
  if (!j.is_object()) throw InputError("configuration: expected an object with \"dim\" and \"points\"");
  for (const auto& [key, value] : j.items()) {
    if (key != "dim" && key != "points") throw InputError("configuration: unknown field \"" + key + "\"");
  }
  if (!j.contains("dim")) throw InputError("configuration: missing field \"dim\"");
  if (!j.contains("points")) throw InputError("configuration: missing field \"points\"");
  const auto dim = integer_field(j.at("dim"), "dim");
  if (dim < 1 || dim > static_cast<std::int64_t>(kMaxDim)) throw InputError("dim: must be 1, 2 or 3");
  const auto& pts = j.at("points");
  if (!pts.is_array()) throw InputError("points: expected an array");

  std::vector<LatticePoint> points;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const auto where = "points[" + std::to_string(i) + "]";
    const auto& row = pts[i];
    if (!row.is_array() || row.size() != static_cast<std::size_t>(dim)) {
      throw InputError(where + ": expected an array of " + std::to_string(dim) + " integers");
    }
    std::vector<std::int64_t> coords;
    for (std::size_t k = 0; k < row.size(); ++k) {
      coords.push_back(integer_field(row[k], where + "[" + std::to_string(k) + "]"));
    }
    points.emplace_back(std::span<const std::int64_t>(coords));
  }
  try {
    return PointConfiguration::from_distinct(static_cast<std::size_t>(dim), std::move(points));
  } catch (const std::invalid_argument& e) {
    throw InputError(std::string("points: ") + e.what());
  }
}

json parse_json_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(e.what());
  }
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json_text(buf.str());
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

PointConfiguration parse_configuration(const std::string& text) {
  return configuration_from_json(parse_json_text(text));
}

PointConfiguration read_configuration(const std::filesystem::path& path) {
  const auto j = read_json_file(path);
  try {
    return configuration_from_json(j);
  } catch (const InputError& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

void to_json(json& j, const LatticePoint& p) {
  j = json::array();
  for (auto c : p.coords()) j.push_back(c);
}

json points_json(const PointConfiguration& s) {
  json arr = json::array();
  for (const auto& p : s) arr.push_back(p);
  return arr;
}

void to_json(json& j, const PointConfiguration& s) {
  j = json{{"dim", s.dim()}, {"points", points_json(s)}};
}

void to_json(json& j, const ConvexityReport& r) {
  j = json{{"convex", r.convex}, {"missing", points_json(r.missing)}, {"cardinality", r.cardinality}};
}

void to_json(json& j, const AffineUnimodularMap& m) {
  json matrix = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.dim(); ++k) row.push_back(m.linear()[i][k]);
    matrix.push_back(row);
  }
  j = json{{"matrix", matrix}, {"translation", m.translation()}, {"determinant", m.determinant()}};
}

void to_json(json& j, const TheoremReport& r) {
  json per_p = json::array();
  for (const auto& row : r.per_p) {
    per_p.push_back({{"p", row.p}, {"convex", row.convex}, {"missing", points_json(row.missing)}});
  }
  j = json{{"base", r.base},
           {"N", r.n_points},
           {"exception_k", r.exception_k ? json(*r.exception_k) : json(nullptr)},
           {"per_p", per_p},
           {"expected_nonconvex", r.expected_nonconvex},
           {"verdict", r.verdict == Verdict::conforms ? "conforms" : "violates"},
           {"violations", r.deviations()}};
}

void to_json(json& j, const GridSummary& s) {
  json violations = json::array();
  for (const auto& v : s.violations) {
    violations.push_back({{"config", points_json(v.config)}, {"check", v.check}, {"p", v.p}});
  }
  json exceptions = json::array();
  for (const auto& [k, count] : s.exceptions_seen) exceptions.push_back({{"k", k}, {"count", count}});
  j = json{{"grid", {s.grid.width, s.grid.height}},
           {"configs", s.configs},
           {"violations", violations},
           {"exceptions_seen", exceptions},
           {"p_good_checks", s.p_good_checks},
           {"union_checks", s.union_checks}};
}

void to_json(json& j, const CounterexampleReport& r) {
  j = json{{"counts", r.counts},
           {"witness", r.witness},
           {"witness_in_wedge", r.witness_in_wedge},
           {"witness_in_hull", r.witness_in_hull},
           {"slice_size", r.slice_size},
           {"min_level_attained", r.min_level_attained},
           {"witness_level", r.witness_level},
           {"slice_matches", r.slice_matches},
           {"red_relation_holds", r.red_relation_holds},
           {"wedge_size", r.wedge_size},
           {"wedge_digest", r.wedge_digest},
           {"holds", r.holds()}};
}

json corner_cut_json(std::int64_t d, std::int64_t bound, const ConvexityReport& r) {
  return json{{"d", d},
              {"B", bound},
              {"wedge_size", r.cardinality},
              {"convex", r.convex},
              {"missing", points_json(r.missing)}};
}

}  // namespace wedgepow
