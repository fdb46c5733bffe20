// Command-line front end: dimension tables, verification suites and single
// graph computations.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "fcg/fourterm.hpp"
#include "fcg/invariants.hpp"
#include "fcg/json_io.hpp"
#include "fcg/reduction.hpp"
#include "fcg/verify.hpp"

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kGuardMaxN = 6;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

nlohmann::json row_json(const fcg::DimensionRow& r) {
  return {{"n", r.n},
          {"red_classes", r.red_classes},
          {"connected_classes", r.connected_classes},
          {"rank_fc", r.rank_fc},
          {"dim_lando", r.dim_lando},
          {"dim_pn", r.dim_pn},
          {"dim_pbl", r.dim_pbl},
          {"dim_pwl", r.dim_pwl}};
}

int run_dims(int max_n, bool force, int workers, const std::string& format) {
  if (max_n < 0) throw UsageError("--max-n must be non-negative");
  if (max_n > kGuardMaxN && !force) {
    throw UsageError("--max-n " + std::to_string(max_n) + " exceeds the guard of " +
                     std::to_string(kGuardMaxN) + "; pass --force to override");
  }
  fcg::LandoWorkspace ws(max_n, workers);
  std::vector<fcg::DimensionRow> rows;
  for (int n = 0; n <= max_n; ++n) rows.push_back(ws.dimension_row(n));

  if (format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : rows) out.push_back(row_json(r));
    std::cout << out.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << "n,red_classes,connected_classes,rank_fc,dim_lando,dim_pn,dim_pbl,dim_pwl\n";
    for (const auto& r : rows) {
      std::cout << r.n << "," << r.red_classes << "," << r.connected_classes << "," << r.rank_fc
                << "," << r.dim_lando << "," << r.dim_pn << "," << r.dim_pbl << "," << r.dim_pwl
                << "\n";
    }
  } else {
    std::cout << "  n  classes  connected  rank F_C  dim L  dim PN  dim PBL  dim PWL\n";
    for (const auto& r : rows) {
      char line[128];
      std::snprintf(line, sizeof line, "%3d %8lld %10lld %9lld %6lld %7lld %8lld %8lld\n", r.n,
                    r.red_classes, r.connected_classes, r.rank_fc, r.dim_lando, r.dim_pn,
                    r.dim_pbl, r.dim_pwl);
      std::cout << line;
    }
  }
  return 0;
}

int run_verify(const std::string& suite, const fcg::VerifyConfig& cfg, const std::string& format,
               bool timings) {
  const auto report = fcg::run_suite(suite, cfg);
  if (format == "json") {
    std::cout << fcg::report_to_json(report, timings).dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << fcg::report_to_csv(report, timings);
  } else {
    std::cout << fcg::report_to_text(report, timings);
  }
  return report.passed() ? 0 : kExitFailure;
}

// "s0=A,s1=B" in either order.
std::pair<fcg::Scalar, fcg::Scalar> parse_eval(const std::string& text) {
  std::optional<fcg::Scalar> s0;
  std::optional<fcg::Scalar> s1;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos) throw UsageError("--eval expects s0=A,s1=B");
    const auto name = item.substr(0, eq);
    const auto value = fcg::parse_scalar(item.substr(eq + 1));
    if (name == "s0") {
      s0 = value;
    } else if (name == "s1") {
      s1 = value;
    } else {
      throw UsageError("--eval: unknown variable '" + name + "'");
    }
  }
  if (!s0 || !s1) throw UsageError("--eval needs values for both s0 and s1");
  return {*s0, *s1};
}

nlohmann::json invariants_json(const fcg::LinearCombination& x, bool w_plus_two) {
  const auto chrom = fcg::framed_chromatic(x);
  const auto base = w_plus_two ? fcg::WBase::PlusTwo : fcg::WBase::MinusTwo;
  return {{"chromatic", fcg::to_string(chrom)}, {"w", fcg::to_string(fcg::w_invariant(x, base))}};
}

int run_invariant(const std::string& path, const std::string& eval, bool w_plus_two) {
  const auto g = fcg::read_graph_file(path);
  auto out = invariants_json(fcg::from_graph(g), w_plus_two);
  if (!eval.empty()) {
    const auto [s0, s1] = parse_eval(eval);
    out["value"] = fcg::to_string(fcg::framed_chromatic(g).evaluate(s0, s1));
  }
  std::cout << out.dump() << "\n";
  return 0;
}

int run_reduce(const std::string& path, const std::string& to) {
  const auto g = fcg::read_graph_file(path);
  const auto x = to == "red" ? fcg::red_normal_form(g) : fcg::psi(g);
  std::cout << fcg::combination_to_json(x).dump(2) << "\n";
  return 0;
}

int run_act(int tree_size, const std::string& path) {
  if (tree_size < 1) throw UsageError("--tree must be at least 1");
  const auto g = fcg::read_graph_file(path);
  const auto x = fcg::tree_action(fcg::path_tree(tree_size), g);
  auto out = invariants_json(x, false);
  out["result"] = fcg::combination_to_json(x);
  std::cout << out.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Colored framed graph bialgebras: dimensions, verification and invariants"};
  app.require_subcommand(1);

  std::string format = "text";
  int max_n = 4;
  int workers = 1;

  auto* dims = app.add_subcommand("dims", "graded dimension table of the quotient N");
  bool force = false;
  dims->add_option("--max-n", max_n, "largest grading")->required();
  dims->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
  dims->add_option("--workers", workers)->check(CLI::PositiveNumber);
  dims->add_flag("--force", force, "allow --max-n above the default guard");

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  fcg::VerifyConfig cfg;
  bool timings = false;
  verify->add_option("suite", suite)->required()->check(CLI::IsMember(fcg::suite_names()));
  verify->add_option("--max-n", cfg.max_n)->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", cfg.seed);
  verify->add_option("--workers", cfg.workers)->check(CLI::PositiveNumber);
  verify->add_option("--format", format)->check(CLI::IsMember({"json", "csv", "text"}));
  verify->add_flag("--timings", timings, "include per-check wall-clock seconds");

  auto* inv = app.add_subcommand("invariant", "framed chromatic value and W of a red graph");
  std::string graph_path;
  std::string eval;
  bool w_plus_two = false;
  inv->add_option("--graph", graph_path)->required();
  inv->add_option("--eval", eval, "numeric values, e.g. s0=2,s1=-1/3");
  inv->add_flag("--w-plus-two", w_plus_two, "use 2^(-chi) instead of (-2)^(-chi) in W");

  auto* red = app.add_subcommand("reduce", "expand into the red-only or all-black basis");
  std::string to;
  red->add_option("--graph", graph_path)->required();
  red->add_option("--to", to)->required()->check(CLI::IsMember({"red", "black"}));

  auto* act = app.add_subcommand("act", "attach a framing-0 path tree to a connected red graph");
  int tree_size = 1;
  act->add_option("--tree", tree_size, "number of tree vertices")->required();
  act->add_option("--graph", graph_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*dims) return run_dims(max_n, force, workers, format);
    if (*verify) return run_verify(suite, cfg, format, timings);
    if (*inv) return run_invariant(graph_path, eval, w_plus_two);
    if (*red) return run_reduce(graph_path, to);
    if (*act) return run_act(tree_size, graph_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
