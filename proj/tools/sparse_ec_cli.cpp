// sparse-ec: edge-color sparse graphs with Δ colors.
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "sparse_ec/bench.hpp"
#include "sparse_ec/errors.hpp"
#include "sparse_ec/generators.hpp"
#include "sparse_ec/graph_io.hpp"
#include "sparse_ec/oracle.hpp"
#include "sparse_ec/scheduler.hpp"
#include "sparse_ec/weak_edges.hpp"

using namespace sparse_ec;

namespace {

enum Exit { kOk = 0, kFailure = 1, kParse = 2, kPrecondition = 3, kInternal = 4 };

Mode parse_mode(const std::string& s) {
  if (s == "rand") return Mode::kRandomized;
  if (s == "det") return Mode::kDeterministic;
  throw InvalidInput("unknown mode '" + s + "'");
}

PalettePolicy parse_policy(const std::string& s) {
  if (s == "delta") return PalettePolicy::kExactDelta;
  if (s == "delta1") return PalettePolicy::kDeltaPlusOne;
  if (s == "auto") return PalettePolicy::kAuto;
  throw InvalidInput("unknown palette policy '" + s + "'");
}

void write_to(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write " + path);
  out << text;
}

struct ColorArgs {
  std::string input;
  std::string mode = "det";
  std::optional<std::uint64_t> seed;
  std::string colors = "auto";
  std::string stats;
  std::string out;
};

int cmd_color(const ColorArgs& a) {
  const Graph g = io::read_graph_file(a.input);
  RunConfig cfg;
  cfg.mode = parse_mode(a.mode);
  cfg.seed = a.seed;
  cfg.palette_policy = parse_policy(a.colors);
  if (cfg.mode == Mode::kRandomized && !cfg.seed) throw InvalidInput("--mode rand needs --seed");
  if (cfg.mode == Mode::kDeterministic && cfg.seed) throw InvalidInput("--seed only applies to --mode rand");
  const GraphColoring result = color_graph(g, cfg);
  const auto check = validate_coloring(g, result.colors, result.palette);
  if (!check.ok) {
    for (const auto& v : check.violations) std::cerr << describe(g, v) << '\n';
    throw InvariantViolation("produced coloring failed validation");
  }
  std::ostringstream coloring;
  io::write_coloring(coloring, g, result.colors, result.palette);
  write_to(a.out, coloring.str());
  if (!a.stats.empty()) write_to(a.stats, io::stats_json(result.report) + "\n");
  std::cerr << "colored " << g.edge_count() << " edges with " << result.palette << " colors (max degree "
            << g.max_degree() << ")\n";
  return kOk;
}

int cmd_validate(const std::string& graph_path, const std::string& coloring_path) {
  const Graph g = io::read_graph_file(graph_path);
  const auto file = io::read_coloring_file(coloring_path, g);
  const auto outcome = validate_coloring(g, file.colors, file.palette);
  for (const auto& v : outcome.violations) std::cout << describe(g, v) << '\n';
  std::cout << (outcome.ok ? "ok" : "invalid: " + std::to_string(outcome.violations.size()) + " violation(s)") << '\n';
  return outcome.ok ? kOk : kFailure;
}

void print_row(const bench::Row& r, const std::string& label) {
  std::cout << std::setw(10) << r.edges << std::setw(8) << r.max_degree << std::setw(8) << label << std::setw(14)
            << std::fixed << std::setprecision(2) << r.ms << std::setw(12) << r.sparsity_ms << std::setw(12)
            << r.coloring_ms << std::setw(18) << r.total_path_length << std::setw(8) << r.recursion_depth
            << std::setw(10) << r.cn_iterations << '\n';
}

int cmd_bench(const bench::Options& options) {
  const auto rows = bench::run(options);
  std::cout << "# family=" << bench::to_string(options.family) << " k=" << options.k
            << " mode=" << to_string(options.mode) << " repeats=" << options.repeats << '\n';
  std::cout << std::setw(10) << "m" << std::setw(8) << "maxdeg" << std::setw(8) << "run" << std::setw(14) << "ms"
            << std::setw(12) << "mad_ms" << std::setw(12) << "color_ms" << std::setw(18) << "path_length"
            << std::setw(8) << "depth" << std::setw(10) << "cn_iter" << '\n';
  const auto means = bench::summarize(rows);
  std::size_t next = 0;
  for (const auto& mean : means) {
    for (std::size_t r = 0; r < mean.runs; ++r) print_row(rows[next++], std::to_string(r + 1));
    if (mean.runs > 1) print_row(mean, "mean");
  }
  if (means.size() >= 2) std::cout << "alpha " << std::setprecision(3) << bench::growth_exponent(rows) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Edge coloring of sparse graphs with max-degree many colors"};
  app.require_subcommand(1);

  ColorArgs color;
  auto* color_cmd = app.add_subcommand("color", "Color a graph file");
  color_cmd->add_option("input", color.input, "Graph file (\"n m\" header, then \"u v\" lines)")->required();
  color_cmd->add_option("--mode", color.mode, "rand or det")->check(CLI::IsMember({"rand", "det"}));
  color_cmd->add_option("--seed", color.seed, "Seed for --mode rand");
  color_cmd->add_option("--colors", color.colors, "delta, delta1 or auto")
      ->check(CLI::IsMember({"delta", "delta1", "auto"}));
  color_cmd->add_option("--stats", color.stats, "Write run statistics as JSON ('-' for stdout)");
  color_cmd->add_option("--out", color.out, "Coloring output path (default stdout)");

  std::string graph_path, coloring_path;
  auto* validate_cmd = app.add_subcommand("validate", "Check a coloring file against a graph file");
  validate_cmd->add_option("graph", graph_path)->required();
  validate_cmd->add_option("coloring", coloring_path)->required();

  auto* gen_cmd = app.add_subcommand("gen", "Write a generated graph to stdout");
  gen_cmd->require_subcommand(1);
  std::size_t size = 0, k = 2;
  std::uint64_t gen_seed = 1;
  auto* gen_star = gen_cmd->add_subcommand("star", "K_{1,n}");
  gen_star->add_option("leaves", size)->required();
  auto* gen_cycle = gen_cmd->add_subcommand("cycle", "C_n");
  gen_cycle->add_option("n", size)->required();
  auto* gen_strong = gen_cmd->add_subcommand("strong", "Graph without weak edges, parameter d >= 3");
  gen_strong->add_option("d", size)->required();
  auto* gen_kforest = gen_cmd->add_subcommand("kforest", "Union of k random spanning trees");
  auto* gen_kdeg = gen_cmd->add_subcommand("kdegenerate", "Random k-degenerate graph");
  for (auto* sub : {gen_kforest, gen_kdeg}) {
    sub->add_option("--k", k)->required();
    sub->add_option("--n", size)->required();
    sub->add_option("--seed", gen_seed);
  }

  bench::Options bench_options;
  std::string family = "kdegenerate", bench_mode = "det";
  auto* bench_cmd = app.add_subcommand("bench", "Time the coloring over growing sizes and fit t ~ m^alpha");
  bench_cmd->add_option("--family", family)->check(CLI::IsMember({"kdegenerate", "kforest"}));
  bench_cmd->add_option("--k", bench_options.k);
  bench_cmd->add_option("--sizes", bench_options.sizes, "Target edge counts")->required()->delimiter(',');
  bench_cmd->add_option("--mode", bench_mode)->check(CLI::IsMember({"rand", "det"}));
  bench_cmd->add_option("--repeats", bench_options.repeats);
  bench_cmd->add_option("--seed", bench_options.seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kFailure;
  }

  try {
    if (*color_cmd) return cmd_color(color);
    if (*validate_cmd) return cmd_validate(graph_path, coloring_path);
    if (*gen_cmd) {
      Graph g;
      if (*gen_star) g = gen::star(size);
      if (*gen_cycle) g = gen::cycle(size);
      if (*gen_strong) g = strong_graph(size);
      if (*gen_kforest) g = gen::kforest(k, size, gen_seed);
      if (*gen_kdeg) g = gen::kdegenerate(k, size, gen_seed);
      io::write_graph(std::cout, g);
      return kOk;
    }
    if (*bench_cmd) {
      bench_options.family = bench::parse_family(family);
      bench_options.mode = parse_mode(bench_mode);
      return cmd_bench(bench_options);
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return kPrecondition;
  } catch (const InvariantViolation& e) {
    std::cerr << "internal invariant violated: " << e.what() << '\n';
    return kInternal;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFailure;
  }
  return kOk;
}
