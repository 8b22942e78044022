#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <ostream>
#include <regex>

#include "wedgepow/checked.hpp"
#include "wedgepow/convexity.hpp"
#include "wedgepow/cornercut.hpp"
#include "wedgepow/counterexample3d.hpp"
#include "wedgepow/json_io.hpp"
#include "wedgepow/subset_sum_dp.hpp"
#include "wedgepow/svg.hpp"
#include "wedgepow/theorem_harness.hpp"
#include "wedgepow/unimodular.hpp"
#include "wedgepow/wedge_power.hpp"

namespace wedgepow::cli {

namespace {

using nlohmann::json;

struct Options {
  std::vector<std::string> inputs;
  std::string output;
  std::int64_t p = 0;
  std::string method = "dp";
  std::string grid;
  std::int64_t d = 0;
  std::int64_t bound = 0;
  unsigned jobs = 1;
  bool hull = false;
};

class Emitter {
 public:
  Emitter(const std::string& path, std::ostream& fallback) : path_(path), fallback_(fallback) {}

  void write(const std::string& text) {
    if (path_.empty()) {
      fallback_ << text;
      return;
    }
    std::ofstream file(path_, std::ios::binary);
    if (!file) throw InputError("cannot write " + path_);
    file << text;
  }
  void write(const json& j) { write(j.dump() + "\n"); }

 private:
  std::string path_;
  std::ostream& fallback_;
};

const std::string& single_input(const Options& o) {
  if (o.inputs.size() != 1) throw InputError("expected exactly one --input");
  return o.inputs.front();
}

GridSpec parse_grid(const std::string& text) {
  static const std::regex pattern(R"((\d+)x(\d+))");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw InputError("--grid expects WxH, got '" + text + "'");
  return {std::stoll(m[1]), std::stoll(m[2])};
}

int cmd_wedge(const Options& o, Emitter& emit, std::ostream& err) {
  const auto base = read_configuration(single_input(o));
  const auto result = wedge_power(WedgeQuery{base, o.p}, parse_wedge_method(o.method));
  if (!result.in_range) err << "note: p=" << o.p << " is outside [0, " << base.size() << "]; wedge power is empty\n";
  emit.write(json(result.points));
  return kSuccess;
}

int cmd_check_convex(const Options& o, Emitter& emit) {
  const auto report = check_lattice_convex(read_configuration(single_input(o)));
  emit.write(json(report));
  return report.convex ? kSuccess : kRefuted;
}

int cmd_verify_polygon(const Options& o, Emitter& emit) {
  const auto report = verify_polygon(read_configuration(single_input(o)));
  emit.write(json(report));
  return report.deviations().empty() ? kSuccess : kRefuted;
}

int cmd_verify_grid(const Options& o, Emitter& emit) {
  const auto summary = verify_grid(parse_grid(o.grid), o.jobs);
  emit.write(json(summary));
  return summary.violations.empty() ? kSuccess : kRefuted;
}

int cmd_p_good(const Options& o, Emitter& emit) {
  const auto s = read_configuration(single_input(o));
  const auto witness = is_p_good(s, o.p);
  emit.write(json{{"p", o.p}, {"good", witness.has_value()},
                  {"witness", witness ? json(*witness) : json(nullptr)}});
  return witness ? kSuccess : kRefuted;
}

int cmd_cornercut(const Options& o, Emitter& emit) {
  const auto report = verify_corner_cut(o.d, o.bound);
  emit.write(corner_cut_json(o.d, o.bound, report));
  return report.convex ? kSuccess : kRefuted;
}

int cmd_counterexample3d(Emitter& emit) {
  const auto report = verify_counterexample(build_colored_simplex());
  emit.write(json(report));
  return report.holds() ? kSuccess : kRefuted;
}

int cmd_equivalent(const Options& o, Emitter& emit) {
  if (o.inputs.size() != 2) throw InputError("equivalent expects --input twice");
  const auto s = read_configuration(o.inputs[0]);
  const auto t = read_configuration(o.inputs[1]);
  const auto map = are_equivalent(s, t);
  emit.write(json{{"equivalent", map.has_value()}, {"map", map ? json(*map) : json(nullptr)}});
  return map ? kSuccess : kRefuted;
}

int cmd_render(const Options& o, Emitter& emit) {
  emit.write(render_svg(read_configuration(single_input(o)), o.hull));
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact wedge powers of lattice point configurations", "wedgepow"};
  app.require_subcommand(1);
  Options o;

  auto add_input = [&](CLI::App* sub, bool twice = false) {
    auto* opt = sub->add_option("--input", o.inputs, "point configuration JSON")->required();
    opt->expected(1)->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
    if (!twice) opt->take_last();
  };
  auto add_output = [&](CLI::App* sub) { sub->add_option("--output", o.output, "output path (default stdout)"); };

  auto* wedge = app.add_subcommand("wedge", "all sums of p distinct points");
  add_input(wedge);
  add_output(wedge);
  wedge->add_option("-p", o.p, "subset size")->required();
  wedge->add_option("--method", o.method, "dp|naive")->check(CLI::IsMember({"dp", "naive"}));

  auto* check = app.add_subcommand("check-convex", "lattice-convexity of a planar configuration");
  add_input(check);
  add_output(check);

  auto* polygon = app.add_subcommand("verify-polygon", "convexity of every wedge power of a polygon");
  add_input(polygon);
  add_output(polygon);

  auto* grid = app.add_subcommand("verify-grid", "exhaustive check over a small grid");
  grid->add_option("--grid", o.grid, "WxH for the grid [0,W]x[0,H]")->required();
  grid->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  add_output(grid);

  auto* good = app.add_subcommand("p-good", "common point of wedge^p over all vertex deletions");
  add_input(good);
  add_output(good);
  good->add_option("-p", o.p, "subset size")->required();

  auto* corner = app.add_subcommand("cornercut", "corner cut check on the truncated quadrant");
  corner->add_option("-d", o.d, "number of summands")->required();
  corner->add_option("-B", o.bound, "truncation bound x+y<=B")->required();
  add_output(corner);

  auto* ce3d = app.add_subcommand("counterexample3d", "the 84-point simplex counterexample at p=42");
  add_output(ce3d);

  auto* equiv = app.add_subcommand("equivalent", "unimodular equivalence of two configurations");
  add_input(equiv, true);
  add_output(equiv);

  auto* render = app.add_subcommand("render", "SVG dot diagram");
  add_input(render);
  add_output(render);
  render->add_flag("--hull", o.hull, "draw the convex hull");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageOrResource;
  }

  try {
    Emitter emit(o.output, out);
    if (wedge->parsed()) return cmd_wedge(o, emit, err);
    if (check->parsed()) return cmd_check_convex(o, emit);
    if (polygon->parsed()) return cmd_verify_polygon(o, emit);
    if (grid->parsed()) return cmd_verify_grid(o, emit);
    if (good->parsed()) return cmd_p_good(o, emit);
    if (corner->parsed()) return cmd_cornercut(o, emit);
    if (ce3d->parsed()) return cmd_counterexample3d(emit);
    if (equiv->parsed()) return cmd_equivalent(o, emit);
    if (render->parsed()) return cmd_render(o, emit);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << '\n';
  } catch (const ArithmeticOverflow& e) {
    err << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
  }
  return kUsageOrResource;
}

}  // namespace wedgepow::cli
