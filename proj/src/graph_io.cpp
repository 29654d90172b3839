#include "sparse_ec/graph_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "json.hpp"
#include "sparse_ec/errors.hpp"

namespace sparse_ec::io {
namespace {

// Reads the next non-comment line split into unsigned integers.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<std::uint64_t>& fields) {
    std::string text;
    while (std::getline(in_, text)) {
      ++line_;
      if (!text.empty() && text.back() == '\r') text.pop_back();
      const auto start = text.find_first_not_of(" \t");
      if (start == std::string::npos || text[start] == '#') continue;
      fields.clear();
      const char* p = text.data() + start;
      const char* end = text.data() + text.size();
      while (p < end) {
        std::uint64_t value = 0;
        auto [stop, ec] = std::from_chars(p, end, value);
        if (ec != std::errc()) throw ParseError("expected a non-negative integer in \"" + text + "\"", line_);
        fields.push_back(value);
        p = stop;
        if (p < end && *p != ' ' && *p != '\t') throw ParseError("unexpected character in \"" + text + "\"", line_);
        while (p < end && (*p == ' ' || *p == '\t')) ++p;
      }
      return true;
    }
    return false;
  }

  std::size_t line() const { return line_; }

 private:
  std::istream& in_;
  std::size_t line_ = 0;
};

void expect_fields(const std::vector<std::uint64_t>& fields, std::size_t count, const char* shape, std::size_t line) {
  if (fields.size() != count)
    throw ParseError("expected \"" + std::string(shape) + "\", got " + std::to_string(fields.size()) + " fields", line);
}

}  // namespace

Graph read_graph(std::istream& in) {
  LineReader reader(in);
  std::vector<std::uint64_t> fields;
  if (!reader.next(fields)) throw ParseError("missing \"n m\" header");
  expect_fields(fields, 2, "n m", reader.line());
  const std::uint64_t n = fields[0], m = fields[1];
  if (n >= kNoVertex) throw ParseError("vertex count too large", reader.line());
  if (m >= kNoEdge) throw ParseError("edge count too large", reader.line());
  std::vector<Endpoints> edges;
  edges.reserve(m);
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(m);
  while (edges.size() < m) {
    if (!reader.next(fields))
      throw ParseError("header announced " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
    expect_fields(fields, 2, "u v", reader.line());
    const std::uint64_t u = fields[0], v = fields[1];
    if (u >= n || v >= n) throw ParseError("vertex out of range 0.." + std::to_string(n == 0 ? 0 : n - 1), reader.line());
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), reader.line());
    const std::uint64_t key = (std::min(u, v) << 32) | std::max(u, v);
    if (!seen.insert(key).second)
      throw ParseError("repeated edge " + std::to_string(u) + " " + std::to_string(v), reader.line());
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  if (reader.next(fields)) throw ParseError("more edge lines than the header announced", reader.line());
  return build_graph_trusted(n, std::move(edges));
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

ColoringFile read_coloring(std::istream& in, const Graph& g) {
  LineReader reader(in);
  std::vector<std::uint64_t> fields;
  if (!reader.next(fields)) throw ParseError("missing \"m D\" header");
  expect_fields(fields, 2, "m D", reader.line());
  if (fields[0] != g.edge_count())
    throw ParseError("coloring lists " + std::to_string(fields[0]) + " edges, graph has " +
                         std::to_string(g.edge_count()),
                     reader.line());
  if (fields[1] >= kNoEdge) throw ParseError("palette too large", reader.line());
  ColoringFile out;
  out.palette = static_cast<Color>(fields[1]);
  out.colors.assign(g.edge_count(), kUncolored);
  std::vector<char> present(g.edge_count(), 0);
  for (std::size_t i = 0; i < g.edge_count(); ++i) {
    if (!reader.next(fields)) throw ParseError("expected " + std::to_string(g.edge_count()) + " coloring lines");
    expect_fields(fields, 4, "edge_id u v color", reader.line());
    if (fields[0] >= g.edge_count()) throw ParseError("unknown edge id " + std::to_string(fields[0]), reader.line());
    const auto e = static_cast<EdgeId>(fields[0]);
    if (present[e]) throw ParseError("edge id " + std::to_string(e) + " listed twice", reader.line());
    present[e] = 1;
    const auto ends = g.endpoints(e);
    const bool same = (fields[1] == ends.u && fields[2] == ends.v) || (fields[1] == ends.v && fields[2] == ends.u);
    if (!same)
      throw ParseError("edge " + std::to_string(e) + " is " + std::to_string(ends.u) + " " + std::to_string(ends.v) +
                           " in the graph",
                       reader.line());
    if (fields[3] >= kNoEdge) throw ParseError("color too large", reader.line());
    out.colors[e] = static_cast<Color>(fields[3]);
  }
  if (reader.next(fields)) throw ParseError("more coloring lines than the header announced", reader.line());
  return out;
}

void write_coloring(std::ostream& out, const Graph& g, std::span<const Color> colors, Color palette) {
  out << g.edge_count() << ' ' << palette << '\n';
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto ends = g.endpoints(e);
    out << e << ' ' << ends.u << ' ' << ends.v << ' ' << colors[e] << '\n';
  }
}

std::string stats_json(const ColoringReport& r) {
  nlohmann::ordered_json j;
  j["mode"] = to_string(r.mode);
  j["seed"] = r.seed ? nlohmann::ordered_json(*r.seed) : nlohmann::ordered_json(nullptr);
  j["n"] = r.vertices;
  j["m"] = r.edges;
  j["max_degree"] = r.max_degree;
  j["mad"] = r.mad ? nlohmann::ordered_json(r.mad->str()) : nlohmann::ordered_json(nullptr);
  j["c"] = r.width;
  j["precondition_held"] = r.precondition_held;
  j["exact_palette"] = r.exact_palette;
  j["partition_clamped"] = r.partition_clamped;
  j["palette"] = r.palette;
  j["components"] = r.components.size();
  auto depths = nlohmann::ordered_json::array();
  auto degrees = nlohmann::ordered_json::array();
  auto offsets = nlohmann::ordered_json::array();
  for (const auto& c : r.components) {
    depths.push_back(c.recursion_depth);
    degrees.push_back(c.max_degree);
    offsets.push_back(c.offset);
  }
  j["recursion_depths"] = depths;
  j["component_max_degrees"] = degrees;
  j["component_offsets"] = offsets;
  j["max_recursion_depth"] = r.max_recursion_depth;
  j["cn_iterations"] = r.cn_iterations;
  j["total_path_length"] = r.total_path_length;
  j["sparsity_ms"] = r.sparsity_ms;
  j["coloring_ms"] = r.coloring_ms;
  j["wall_ms"] = r.wall_ms;
  return j.dump(2);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_graph(in);
}

ColoringFile read_coloring_file(const std::string& path, const Graph& g) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_coloring(in, g);
}

}  // namespace sparse_ec::io
