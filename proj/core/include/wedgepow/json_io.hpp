#pragma once

#include <cstdint>
#include <filesystem>
#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "wedgepow/convexity.hpp"
#include "wedgepow/counterexample3d.hpp"
#include "wedgepow/lattice_point.hpp"
#include "wedgepow/point_configuration.hpp"
#include "wedgepow/theorem_harness.hpp"
#include "wedgepow/unimodular.hpp"

namespace wedgepow {

/// Malformed JSON input; the message names the offending line or field.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Point configuration schema: {"dim": n, "points": [[c1,...,cn], ...]}.
// Only integers are accepted and duplicate points are rejected.
PointConfiguration configuration_from_json(const nlohmann::json& j);
PointConfiguration parse_configuration(const std::string& text);
PointConfiguration read_configuration(const std::filesystem::path& path);

nlohmann::json parse_json_text(const std::string& text);
nlohmann::json read_json_file(const std::filesystem::path& path);

void to_json(nlohmann::json& j, const LatticePoint& p);
void to_json(nlohmann::json& j, const PointConfiguration& s);
void to_json(nlohmann::json& j, const ConvexityReport& r);
void to_json(nlohmann::json& j, const AffineUnimodularMap& m);
void to_json(nlohmann::json& j, const TheoremReport& r);
void to_json(nlohmann::json& j, const GridSummary& s);
void to_json(nlohmann::json& j, const CounterexampleReport& r);

/// Points as a bare array of coordinate arrays.
nlohmann::json points_json(const PointConfiguration& s);

nlohmann::json corner_cut_json(std::int64_t d, std::int64_t bound, const ConvexityReport& r);

}  // namespace wedgepow
