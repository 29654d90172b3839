#include "sparse_ec/bench.hpp"

#include <cmath>

#include "sparse_ec/errors.hpp"
#include "sparse_ec/generators.hpp"
#include "sparse_ec/oracle.hpp"

namespace sparse_ec::bench {

Family parse_family(const std::string& name) {
  if (name == "kdegenerate") return Family::kDegenerate;
  if (name == "kforest") return Family::kForest;
  throw InvalidInput("unknown family '" + name + "' (kdegenerate, kforest)");
}

std::string to_string(Family family) {
  return family == Family::kDegenerate ? "kdegenerate" : "kforest";
}

Graph make_instance(Family family, std::size_t k, std::size_t edges, std::uint64_t seed) {
  if (k == 0) throw InvalidInput("k must be positive");
  // kdegenerate on n vertices has k*n - k(k+1)/2 edges; a k-forest union
  // about k*(n-1).
  const std::size_t n = edges / k + k + 1;
  return family == Family::kDegenerate ? gen::kdegenerate(k, n, seed) : gen::kforest(k, n, seed);
}

std::vector<Row> run(const Options& options) {
  if (options.repeats == 0) throw InvalidInput("repeats must be positive");
  std::vector<Row> rows;
  for (std::size_t size : options.sizes) {
    const Graph g = make_instance(options.family, options.k, size, options.seed + size);
    for (std::size_t r = 0; r < options.repeats; ++r) {
      RunConfig cfg;
      cfg.mode = options.mode;
      if (options.mode == Mode::kRandomized) cfg.seed = options.seed + r;
      cfg.instrumentation = false;
      const GraphColoring result = color_graph(g, cfg);
      if (!validate_coloring(g, result.colors, result.palette).ok)
        throw InvariantViolation("benchmark produced an improper coloring at m=" + std::to_string(g.edge_count()));
      Row row;
      row.edges = g.edge_count();
      row.max_degree = g.max_degree();
      row.ms = result.report.wall_ms;
      row.sparsity_ms = result.report.sparsity_ms;
      row.coloring_ms = result.report.coloring_ms;
      row.total_path_length = result.report.total_path_length;
      row.recursion_depth = result.report.max_recursion_depth;
      row.cn_iterations = result.report.cn_iterations;
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<Row> summarize(const std::vector<Row>& rows) {
  std::vector<Row> out;
  for (const Row& row : rows) {
    if (out.empty() || out.back().edges != row.edges) {
      out.push_back(row);
      continue;
    }
    Row& acc = out.back();
    const double k = static_cast<double>(acc.runs);
    acc.ms = (acc.ms * k + row.ms) / (k + 1);
    acc.sparsity_ms = (acc.sparsity_ms * k + row.sparsity_ms) / (k + 1);
    acc.coloring_ms = (acc.coloring_ms * k + row.coloring_ms) / (k + 1);
    acc.total_path_length = row.total_path_length;
    acc.recursion_depth = row.recursion_depth;
    acc.cn_iterations = row.cn_iterations;
    ++acc.runs;
  }
  return out;
}

double growth_exponent(const std::vector<Row>& rows) {
  const auto points = summarize(rows);
  if (points.size() < 2) return std::nan("");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& row : points) {
    const double x = std::log(static_cast<double>(row.edges));
    const double y = std::log(std::max(row.ms, 1e-3));
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double n = static_cast<double>(points.size());
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace sparse_ec::bench
