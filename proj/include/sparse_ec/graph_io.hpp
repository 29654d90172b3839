#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "sparse_ec/graph.hpp"
#include "sparse_ec/scheduler.hpp"

namespace sparse_ec::io {

/// Graph text: header "n m", then m lines "u v" (0-based). Lines starting
/// with '#' and blank lines are skipped. Throws ParseError with the line.
Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

struct ColoringFile {
  Color palette = 0;
  /// Indexed by edge id.
  std::vector<Color> colors;
};

/// Coloring text: header "m D", then m lines "edge_id u v color". Checked
/// against g: edge count, each id exactly once, endpoints matching. Color
/// range is left to the validator.
ColoringFile read_coloring(std::istream& in, const Graph& g);
void write_coloring(std::ostream& out, const Graph& g, std::span<const Color> colors, Color palette);

/// Flat JSON object; mad is the string "p/q".
std::string stats_json(const ColoringReport& report);

Graph read_graph_file(const std::string& path);
ColoringFile read_coloring_file(const std::string& path, const Graph& g);

}  // namespace sparse_ec::io
