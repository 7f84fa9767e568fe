// Command-line driver: `cadec solve` runs scripts, `cadec bench` compares
// projection operators on generated families.

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "cadec/bench.hpp"
#include "cadec/driver.hpp"

namespace {

using namespace cadec;

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

struct Caps {
  std::size_t cell_cap = 1000000;
  double time_cap = 0;

  void add(CLI::App* app) {
    app->add_option("--cell-cap", cell_cap, "Abort after creating this many cells")->check(CLI::PositiveNumber);
    app->add_option("--time-cap", time_cap, "Abort after this many seconds of CAD work")->check(CLI::PositiveNumber);
  }
  void apply(EngineOptions& e) const {
    e.cell_cap = cell_cap;
    if (time_cap > 0) e.time_cap_seconds = time_cap;
  }
};

int solve(const std::string& file, const std::string& op, const std::string& order, const std::string& mode,
          const std::string& width, bool stats, bool json, bool product_ec, const Caps& caps) {
  std::string text;
  if (file.empty() || file == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(file);
    if (!in) {
      std::cerr << "error: cannot open " << file << "\n";
      return kExitError;
    }
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  DriverOptions options;
  options.engine.policy = *parse_operator(op);
  options.engine.product_ec = product_ec;
  caps.apply(options.engine);
  options.mode = mode == "sat" ? SolveMode::sat : mode == "decide" ? SolveMode::decide : SolveMode::auto_;
  options.stats = stats;
  options.json = json;
  if (!width.empty()) {
    auto w = parse_rational(width);
    if (!w || sgn(*w) <= 0) {
      std::cerr << "error: --model-width expects a positive number\n";
      return kExitError;
    }
    options.model_width = *w;
  }
  Script script;
  try {
    script = parse_script(text, split_commas(order));
  } catch (const ParseError& e) {
    std::cerr << "error: " << (file.empty() ? "<stdin>" : file) << ":" << e.what() << "\n";
    return kExitError;
  }
  return run_script(script, options, std::cout, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact cylindrical algebraic decomposition solver"};
  app.require_subcommand(1);

  auto* solve_cmd = app.add_subcommand("solve", "Run an SMT-LIB style script");
  std::string file, op = "ec-reduced", order, mode = "auto", width;
  bool stats = false, json = false, product_ec = false;
  Caps solve_caps;
  solve_cmd->add_option("file", file, "Script file (default: stdin)");
  solve_cmd->add_option("--operator", op, "Projection operator policy")
      ->check(CLI::IsMember({"collins", "mccallum", "ec-reduced"}));
  solve_cmd->add_option("--order", order, "Variable order, lowest first, as a comma list");
  solve_cmd->add_option("--mode", mode, "auto: decide when quantified, else check-sat")
      ->check(CLI::IsMember({"auto", "sat", "decide"}));
  solve_cmd->add_flag("--stats", stats, "Report statistics after each verdict");
  solve_cmd->add_flag("--json", json, "One JSON document per output command");
  solve_cmd->add_flag("--product-ec", product_ec, "Use the product of a disjunction of equations as EC");
  solve_cmd->add_option("--model-width", width, "Width of decimal enclosures in models (default 1e-6)");
  solve_caps.add(solve_cmd);

  auto* bench_cmd = app.add_subcommand("bench", "Compare projection operators on a random family");
  BenchFamily family;
  std::string ops = "collins,mccallum,ec-reduced";
  bool bench_json_out = false, timing = false, no_lift = false;
  Caps bench_caps;
  bench_cmd->add_option("--vars", family.vars, "Variables per instance")->check(CLI::Range(1, kMaxVars));
  bench_cmd->add_option("--degree", family.degree, "Total degree of each polynomial")->check(CLI::Range(1, 20));
  bench_cmd->add_option("--constraints", family.constraints, "Constraints per instance")->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--ecs", family.ecs, "Leading constraints that are equations")->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--seed", family.seed, "Random seed");
  bench_cmd->add_option("--instances", family.instances, "Instances in the family")->check(CLI::NonNegativeNumber);
  bench_cmd->add_option("--operators", ops, "Comma list of operators to compare");
  bench_cmd->add_flag("--json", bench_json_out, "Emit the table as JSON");
  bench_cmd->add_flag("--timing", timing, "Add wall-clock seconds (makes output nondeterministic)");
  bench_cmd->add_flag("--no-lift", no_lift, "Projection counts only; skip lifting");
  bench_caps.add(bench_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (solve_cmd->parsed()) return solve(file, op, order, mode, width, stats, json, product_ec, solve_caps);

    std::vector<Operator> operators;
    for (const auto& name : split_commas(ops)) {
      auto parsed = parse_operator(name);
      if (!parsed) {
        std::cerr << "error: unknown operator '" << name << "'\n";
        return kExitError;
      }
      operators.push_back(*parsed);
    }
    if (family.ecs > family.constraints) {
      std::cerr << "error: --ecs exceeds --constraints\n";
      return kExitError;
    }
    EngineOptions base;
    bench_caps.apply(base);
    auto rows = run_bench(family, operators, base, !no_lift);
    std::cout << (bench_json_out ? bench_json(family, rows, timing) : bench_table(family, rows, timing));
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
