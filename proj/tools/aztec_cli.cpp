// Command-line surface: exact counting, verification suites, canonical
// enumeration streams and SVG rendering.
//
// Exit codes: 0 success, 1 verification or input failure, 2 usage error.

#include <exception>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "aztec/diamond.hpp"
#include "aztec/errors.hpp"
#include "aztec/hankel.hpp"
#include "aztec/json_io.hpp"
#include "aztec/lgv.hpp"
#include "aztec/schroeder.hpp"
#include "aztec/svg.hpp"
#include "aztec/verify.hpp"

namespace {

using aztec::BigCount;
using aztec::Json;

struct CountArgs {
  std::string target;
  int n = -1;
  int flag_n = -1;
  std::string kind;
  std::string method = "formula";
  bool json = false;
  int max_enum_n = aztec::kDefaultTilingCutoff;
};

aztec::HankelKind parse_kind(const std::string& kind) {
  if (kind == "h1") return aztec::HankelKind::H1;
  if (kind == "g1") return aztec::HankelKind::G1;
  if (kind == "h0") return aztec::HankelKind::H0;
  if (kind == "g0") return aztec::HankelKind::G0;
  throw CLI::ValidationError("--kind", "expected h1, g1, h0 or g0");
}

int run_count(const CountArgs& args) {
  const int n = args.flag_n >= 0 ? args.flag_n : args.n;
  if (n < 0) throw CLI::ValidationError("count", "missing order n");
  BigCount value;
  std::string method;
  if (args.target == "aztec") {
    aztec::CountMethod m = aztec::CountMethod::Formula;
    if (args.method == "determinant") m = aztec::CountMethod::Determinant;
    else if (args.method == "enumeration") m = aztec::CountMethod::Enumeration;
    else if (args.method != "formula")
      throw CLI::ValidationError("--method",
                                 "expected formula, determinant or enumeration");
    value = aztec::count_tilings(n, m, args.max_enum_n);
    method = args.method;
  } else if (args.target == "schroeder-large") {
    value = aztec::large_schroeder(n);
    method = "convolution";
  } else if (args.target == "schroeder-small") {
    value = aztec::small_schroeder(n);
    method = "convolution";
  } else if (args.target == "det") {
    if (args.kind.empty())
      throw CLI::ValidationError("count det", "requires --kind h1|g1|h0|g0");
    value = aztec::determinant(aztec::build_hankel(parse_kind(args.kind), n));
    method = "fraction-free elimination";
  } else {
    throw CLI::ValidationError(
        "count", "unknown target \"" + args.target +
                     "\", expected aztec, schroeder-large, schroeder-small or det");
  }
  if (args.json) {
    Json out{{"target", args.target}, {"n", n}, {"method", method},
             {"value", value.str()}};
    if (!args.kind.empty()) out["kind"] = args.kind;
    std::cout << out.dump() << '\n';
  } else {
    std::cout << value << '\n';
  }
  return 0;
}

Json report_to_json(const aztec::VerificationReport& rep) {
  Json checks = Json::array();
  for (const auto& c : rep.checks) {
    Json row{{"name", c.name}, {"params", c.params}};
    if (c.skipped) {
      row["skipped"] = true;
      row["reason"] = c.skip_reason;
    } else {
      row["expected"] = c.expected.str();
      row["actual"] = c.actual.str();
      row["pass"] = c.pass;
      row["elapsed_ms"] = c.elapsed_ms;
    }
    checks.push_back(std::move(row));
  }
  return Json{{"checks", std::move(checks)},
              {"passed", rep.passed()},
              {"failed", rep.failed()},
              {"skipped", rep.skipped()},
              {"ok", rep.all_pass()}};
}

int run_verify(const std::string& suite, const aztec::VerifyOptions& opts,
               bool json) {
  aztec::VerificationReport rep;
  if (suite == "all") rep = aztec::verify_all(opts);
  else if (suite == "hankel") rep = aztec::verify_hankel(opts);
  else if (suite == "tilings") rep = aztec::verify_tilings(opts);
  else if (suite == "bijections") rep = aztec::verify_bijections(opts);
  else if (suite == "involution") rep = aztec::verify_involution(opts);
  else
    throw CLI::ValidationError(
        "--suite", "expected all, hankel, bijections, involution or tilings");
  if (json) std::cout << report_to_json(rep).dump(2) << '\n';
  else aztec::print_report(std::cout, rep);
  return rep.all_pass() ? 0 : 1;
}

int run_enumerate(const std::string& target, int n, const std::string& scheme,
                  int max_enum_n) {
  if (target == "tilings") {
    const auto tilings = aztec::enumerate_tilings(n, max_enum_n);
    for (const auto& t : tilings)
      std::cout << aztec::tiling_to_json(t).dump() << '\n';
    std::cout << Json{{"count", tilings.size()}}.dump() << '\n';
    return 0;
  }
  if (target == "families") {
    const auto families = aztec::enumerate_family(
        aztec::AnchorScheme{aztec::scheme_from_name(scheme), n}, max_enum_n);
    for (const auto& f : families)
      std::cout << aztec::family_to_json(f).dump() << '\n';
    std::cout << Json{{"count", families.size()}}.dump() << '\n';
    return 0;
  }
  throw CLI::ValidationError("enumerate", "unknown target \"" + target +
                                              "\", expected tilings or families");
}

int run_render(const std::optional<std::string>& input, int generate_n,
               int index, const std::string& output, bool overlay,
               int max_enum_n) {
  aztec::Tiling tiling;
  if (input) {
    std::ifstream in(*input);
    if (!in) throw aztec::ValidationError("cannot open " + *input);
    Json j;
    in >> j;
    tiling = aztec::tiling_from_json(j);
  } else if (generate_n > 0) {
    const auto tilings = aztec::enumerate_tilings(generate_n, max_enum_n);
    if (index < 0 || index >= static_cast<int>(tilings.size()))
      throw aztec::ValidationError(
          "--index out of range: order " + std::to_string(generate_n) +
          " has " + std::to_string(tilings.size()) + " tilings");
    tiling = tilings[index];
  } else {
    throw CLI::ValidationError("render", "needs --input or --generate");
  }
  aztec::RenderOptions opts;
  opts.overlay_paths = overlay;
  const std::string svg = aztec::render_tiling_svg(tiling, opts);
  std::ofstream out(output, std::ios::binary);
  if (!out) throw aztec::ValidationError("cannot write " + output);
  out << svg;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Aztec diamond tilings, Schroeder paths and their Hankel "
               "determinants, exactly"};
  app.require_subcommand(1);

  CountArgs count_args;
  auto* count = app.add_subcommand("count", "print one exact count");
  count->add_option("target", count_args.target,
                    "aztec | schroeder-large | schroeder-small | det")
      ->required();
  count->add_option("order", count_args.n, "order / index");
  count->add_option("--n", count_args.flag_n, "order / index (flag form)");
  count->add_option("--kind", count_args.kind, "det target: h1 | g1 | h0 | g0");
  count->add_option("--method", count_args.method,
                    "aztec target: formula | determinant | enumeration");
  count->add_flag("--json", count_args.json, "wrap the value with metadata");
  count->add_option("--max-enum-n", count_args.max_enum_n,
                    "enumeration cutoff override");

  std::string suite = "all";
  bool verify_json = false;
  aztec::VerifyOptions vopts;
  int verify_enum_n = 0;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite,
                     "all | hankel | bijections | involution | tilings");
  verify->add_option("--max-n", vopts.max_n, "largest order to check");
  verify->add_option("--seed", vopts.seed, "seed for randomized checks");
  verify->add_option("--max-enum-n", verify_enum_n,
                     "enumeration cutoff override");
  verify->add_flag("--json", verify_json, "emit the report as JSON");

  std::string enum_target;
  std::string enum_scheme = "pi";
  int enum_n = 0;
  int enum_max = 0;
  auto* enumerate = app.add_subcommand(
      "enumerate", "stream objects as JSON records, one per line");
  enumerate->add_option("target", enum_target, "tilings | families")->required();
  enumerate->add_option("n", enum_n, "order / family size")->required();
  enumerate->add_option("--scheme", enum_scheme,
                        "families: pi | omega | pistar");
  enumerate->add_option("--max-enum-n", enum_max,
                        "enumeration cutoff override");

  std::optional<std::string> render_input;
  int render_n = 0, render_index = 0, render_max = aztec::kDefaultTilingCutoff;
  std::string render_output;
  bool overlay = false;
  auto* render = app.add_subcommand("render", "write a tiling as SVG");
  render->add_option("--input", render_input, "tiling JSON file");
  render->add_option("--generate", render_n, "enumerate order n instead");
  render->add_option("--index", render_index, "tiling index within --generate");
  render->add_option("--output,-o", render_output, "SVG file to write")
      ->required();
  render->add_flag("--overlay-paths", overlay, "draw the row paths on top");
  render->add_option("--max-enum-n", render_max, "enumeration cutoff override");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // usage problems exit 2
  }

  try {
    if (count->parsed()) return run_count(count_args);
    if (verify->parsed()) {
      if (verify_enum_n > 0) {
        vopts.tiling_cutoff = verify_enum_n;
        vopts.family_cutoff = verify_enum_n;
      }
      return run_verify(suite, vopts, verify_json);
    }
    if (enumerate->parsed()) {
      const int cutoff = enum_max > 0
                             ? enum_max
                             : (enum_target == "tilings"
                                    ? aztec::kDefaultTilingCutoff
                                    : aztec::kDefaultFamilyCutoff);
      return run_enumerate(enum_target, enum_n, enum_scheme, cutoff);
    }
    if (render->parsed())
      return run_render(render_input, render_n, render_index, render_output,
                        overlay, render_max);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
