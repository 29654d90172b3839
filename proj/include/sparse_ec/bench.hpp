#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sparse_ec/graph.hpp"
#include "sparse_ec/scheduler.hpp"

namespace sparse_ec::bench {

enum class Family { kDegenerate, kForest };

Family parse_family(const std::string& name);
std::string to_string(Family family);

/// Generator instance with roughly `edges` edges.
Graph make_instance(Family family, std::size_t k, std::size_t edges, std::uint64_t seed);

/// One colored instance. In a summary row the times are means over `runs`.
struct Row {
  std::size_t edges = 0;
  std::size_t max_degree = 0;
  std::size_t runs = 1;
  double ms = 0;
  double sparsity_ms = 0;
  double coloring_ms = 0;
  std::size_t total_path_length = 0;
  std::size_t recursion_depth = 0;
  std::size_t cn_iterations = 0;
};

struct Options {
  Family family = Family::kDegenerate;
  std::size_t k = 2;
  std::vector<std::size_t> sizes;
  Mode mode = Mode::kDeterministic;
  std::size_t repeats = 1;
  std::uint64_t seed = 1;
};

/// One row per (size, repeat), sizes in the given order. Each repeat colors
/// the same instance (auto palette); randomized repeats use seeds seed,
/// seed+1, ... Throws InvariantViolation if an output fails validation.
std::vector<Row> run(const Options& options);

/// Consecutive rows of equal size merged into one row of means; counters are
/// taken from the last run.
std::vector<Row> summarize(const std::vector<Row>& rows);

/// Least-squares slope of log(ms) against log(edges) over summarize(rows).
double growth_exponent(const std::vector<Row>& rows);

}  // namespace sparse_ec::bench
