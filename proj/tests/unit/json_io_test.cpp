#include <gtest/gtest.h>

#include <fstream>
#include <random>

#include "test_support.hpp"
#include "wedgepow/cornercut.hpp"
#include "wedgepow/json_io.hpp"
#include "wedgepow/svg.hpp"
#include "wedgepow/wedge_power.hpp"

namespace wedgepow {
namespace {

using nlohmann::json;

TEST(ConfigurationJson, RoundTrip) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const auto s = testing::random_configuration(rng, 1 + trial % 3, 10, -50, 50);
    const auto back = parse_configuration(json(s).dump());
    EXPECT_EQ(back, s);
  }
}

TEST(ConfigurationJson, Shape) {
  const PointConfiguration s{{1, 0}, {0, 1}};
  EXPECT_EQ(json(s).dump(), R"({"dim":2,"points":[[0,1],[1,0]]})");
}

TEST(ConfigurationJson, RejectsMalformedInput) {
  auto message = [](const std::string& text) {
    try {
      parse_configuration(text);
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string("accepted");
  };
  EXPECT_NE(message(R"({"dim":2,"points":[[0,0],[0,0]]})").find("duplicate point (0,0)"), std::string::npos);
  EXPECT_NE(message(R"({"dim":2,"points":[[0,0],[1,1.5]]})").find("points[1][1]: expected an integer, got 1.5"),
            std::string::npos);
  EXPECT_NE(message(R"({"dim":2,"points":[],"colour":1})").find("unknown field \"colour\""), std::string::npos);
  EXPECT_NE(message(R"({"dim":4,"points":[]})").find("dim"), std::string::npos);
  EXPECT_NE(message(R"({"dim":2,"points":[[0]]})").find("points[0]"), std::string::npos);
  EXPECT_NE(message(R"({"points":[]})").find("missing field \"dim\""), std::string::npos);
  EXPECT_NE(message("{\"dim\":2,\n\"points\":[[0,0],]\n}").find("line 2"), std::string::npos);
}

TEST(ConfigurationJson, FileErrorsNameThePath) {
  const auto path = std::filesystem::temp_directory_path() / "wedgepow_bad_input.json";
  std::ofstream(path) << "{\"dim\":2,\"points\":[[0,0],[0,1]";
  try {
    read_configuration(path);
    FAIL() << "expected InputError";
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find(path.string()), std::string::npos);
  }
  std::filesystem::remove(path);
  EXPECT_THROW(read_configuration(path), InputError);
}

TEST(ReportJson, ConvexityReport) {
  const PointConfiguration e1{{0, 1}, {1, 0}, {-1, -1}, {0, 0}};
  const json j = check_lattice_convex(wedge_power(e1, 2));
  EXPECT_EQ(j.dump(), R"({"cardinality":6,"convex":false,"missing":[[0,0]]})");
}

TEST(ReportJson, TheoremReport) {
  const PointConfiguration e1{{0, 1}, {1, 0}, {-1, -1}, {0, 0}};
  const json j = verify_polygon(e1);
  EXPECT_EQ(j.at("N"), 4);
  EXPECT_EQ(j.at("exception_k"), 1);
  EXPECT_EQ(j.at("expected_nonconvex"), json::array({2}));
  EXPECT_EQ(j.at("verdict"), "conforms");
  EXPECT_TRUE(j.at("violations").empty());
  EXPECT_EQ(j.at("per_p").size(), 5u);
  EXPECT_EQ(j.at("per_p")[2].at("missing"), json::parse("[[0,0]]"));
}

TEST(ReportJson, CornerCut) {
  const auto j = corner_cut_json(2, 2, verify_corner_cut(2, 2));
  EXPECT_EQ(j.dump(), R"({"B":2,"convex":true,"d":2,"missing":[],"wedge_size":12})");
}

TEST(ReportJson, UnimodularMap) {
  IntMatrix m{};
  m[0][0] = 1, m[0][1] = 1, m[1][1] = 1;
  const json j = AffineUnimodularMap(2, m, LatticePoint{3, 4});
  EXPECT_EQ(j.dump(), R"({"determinant":1,"matrix":[[1,1],[0,1]],"translation":[3,4]})");
}

TEST(Svg, DeterministicAndScaled) {
  const PointConfiguration e1{{0, 1}, {1, 0}, {-1, -1}, {0, 0}};
  const auto a = render_svg(e1, true);
  EXPECT_EQ(a, render_svg(e1, true));
  EXPECT_EQ(a.rfind("<svg", 0), 0u);
  EXPECT_NE(a.find("<polygon"), std::string::npos);
  EXPECT_EQ(render_svg(e1, false).find("<polygon"), std::string::npos);
  std::size_t circles = 0;
  for (auto pos = a.find("<circle"); pos != std::string::npos; pos = a.find("<circle", pos + 1)) ++circles;
  EXPECT_EQ(circles, 4u);
  // 2 pitches plus margins on each side
  EXPECT_NE(a.find("width=\"140\""), std::string::npos);
}

TEST(Svg, Singleton) {
  const auto s = render_svg(PointConfiguration{{5, 5}}, true);
  EXPECT_NE(s.find("width=\"60\""), std::string::npos);
  EXPECT_NE(s.find("<circle"), std::string::npos);
}

TEST(Svg, RejectsNonPlanar) {
  EXPECT_THROW(render_svg(PointConfiguration(3, {{0, 0, 0}}), false), std::invalid_argument);
}

}  // namespace
}  // namespace wedgepow
