#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("wedgepow_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  int run(std::vector<std::string> args) {
    out_.str({});
    err_.str({});
    return wedgepow::cli::run(args, out_, err_);
  }

  json output() const { return json::parse(out_.str()); }

  fs::path dir_;
  std::ostringstream out_;
  std::ostringstream err_;
};

const char* kE1 = R"({"dim":2,"points":[[0,1],[1,0],[-1,-1],[0,0]]})";
const char* kSquare = R"({"dim":2,"points":[[0,0],[1,0],[0,1],[1,1]]})";

TEST_F(CliTest, WedgeWritesConfiguration) {
  const auto in = write("e1.json", kE1);
  ASSERT_EQ(run({"wedge", "--input", in, "-p", "2"}), 0);
  EXPECT_EQ(output().at("points").size(), 6u);
  ASSERT_EQ(run({"wedge", "--input", in, "-p", "2", "--method", "naive"}), 0);
  EXPECT_EQ(output().at("points").size(), 6u);
  ASSERT_EQ(run({"wedge", "--input", in, "-p", "9"}), 0);
  EXPECT_TRUE(output().at("points").empty());
  EXPECT_NE(err_.str().find("outside"), std::string::npos);
}

TEST_F(CliTest, OutputFlagWritesFile) {
  const auto in = write("e1.json", kE1);
  const auto out = (dir_ / "w.json").string();
  ASSERT_EQ(run({"wedge", "--input", in, "-p", "1", "--output", out}), 0);
  EXPECT_TRUE(out_.str().empty());
  std::ifstream f(out);
  EXPECT_EQ(json::parse(f).at("points").size(), 4u);
}

TEST_F(CliTest, CheckConvexRefutationExitsTwo) {
  const auto in = write("w.json", R"({"dim":2,"points":[[-1,-1],[-1,0],[0,-1],[1,0],[0,1],[1,1]]})");
  EXPECT_EQ(run({"check-convex", "--input", in}), 2);
  EXPECT_EQ(output().at("missing"), json::parse("[[0,0]]"));
  EXPECT_EQ(run({"check-convex", "--input", write("sq.json", kSquare)}), 0);
  EXPECT_TRUE(output().at("convex").get<bool>());
}

TEST_F(CliTest, VerifyPolygon) {
  EXPECT_EQ(run({"verify-polygon", "--input", write("e1.json", kE1)}), 0);
  EXPECT_EQ(output().at("exception_k"), 1);
  EXPECT_EQ(output().at("verdict"), "conforms");
  EXPECT_EQ(run({"verify-polygon", "--input", write("gap.json", R"({"dim":2,"points":[[0,0],[2,0]]})")}), 1);
}

TEST_F(CliTest, VerifyGrid) {
  EXPECT_EQ(run({"verify-grid", "--grid", "2x2", "--jobs", "2"}), 0);
  EXPECT_EQ(output().at("configs"), 132);
  EXPECT_TRUE(output().at("violations").empty());
  EXPECT_EQ(run({"verify-grid", "--grid", "two"}), 1);
  EXPECT_EQ(run({"verify-grid", "--grid", "9x9"}), 1);
}

TEST_F(CliTest, PGood) {
  const auto five = write("five.json", R"({"dim":2,"points":[[0,0],[-1,0],[-1,1],[1,0],[2,0]]})");
  EXPECT_EQ(run({"p-good", "--input", five, "-p", "2"}), 0);
  EXPECT_TRUE(output().at("good").get<bool>());
  EXPECT_EQ(run({"p-good", "--input", write("e1.json", kE1), "-p", "2"}), 2);
  EXPECT_TRUE(output().at("witness").is_null());
}

TEST_F(CliTest, CornerCut) {
  EXPECT_EQ(run({"cornercut", "-d", "3", "-B", "3"}), 0);
  EXPECT_EQ(output().at("wedge_size"), 40);
  EXPECT_EQ(run({"cornercut", "-d", "3", "-B", "1"}), 1);
}

TEST_F(CliTest, Counterexample3d) {
  ASSERT_EQ(run({"counterexample3d"}), 0);
  const auto j = output();
  EXPECT_EQ(j.at("counts"), json::parse("[40,40,4]"));
  EXPECT_EQ(j.at("witness"), json::parse("[49,66,29]"));
  EXPECT_FALSE(j.at("witness_in_wedge").get<bool>());
  EXPECT_TRUE(j.at("witness_in_hull").get<bool>());
  EXPECT_EQ(j.at("slice_size"), 6);
  EXPECT_EQ(j.at("min_level_attained"), 712);
}

TEST_F(CliTest, Equivalent) {
  const auto a = write("a.json", kE1);
  const auto b = write("b.json", R"({"dim":2,"points":[[10,11],[11,10],[9,9],[10,10]]})");
  EXPECT_EQ(run({"equivalent", "--input", a, "--input", b}), 0);
  EXPECT_EQ(output().at("map").at("translation"), json::parse("[10,10]"));
  EXPECT_EQ(run({"equivalent", "--input", a, "--input", write("sq.json", kSquare)}), 2);
  EXPECT_TRUE(output().at("map").is_null());
  EXPECT_EQ(run({"equivalent", "--input", a}), 1);
}

TEST_F(CliTest, Render) {
  EXPECT_EQ(run({"render", "--input", write("e1.json", kE1), "--hull"}), 0);
  EXPECT_EQ(out_.str().rfind("<svg", 0), 0u);
  EXPECT_NE(out_.str().find("<polygon"), std::string::npos);
}

TEST_F(CliTest, InputErrorsExitOne) {
  EXPECT_EQ(run({"wedge", "--input", (dir_ / "missing.json").string(), "-p", "1"}), 1);
  EXPECT_EQ(run({"wedge", "--input", write("dup.json", R"({"dim":2,"points":[[0,0],[0,0]]})"), "-p", "1"}), 1);
  EXPECT_NE(err_.str().find("duplicate point (0,0)"), std::string::npos);
  EXPECT_EQ(run({}), 1);
  EXPECT_EQ(run({"frobnicate"}), 1);
  EXPECT_EQ(run({"wedge", "--input", write("e1.json", kE1)}), 1);
}

TEST_F(CliTest, HelpSucceeds) {
  EXPECT_EQ(run({"--help"}), 0);
  EXPECT_FALSE(out_.str().empty());
}

}  // namespace
