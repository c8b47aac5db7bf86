#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "domkern/graph.hpp"

namespace domkern {

// Malformed or unreadable input data.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Graph read from an edge list. Vertex i carries the external label
/// labels[i]; labels are ascending, so ids preserve the file's order.
struct LabeledGraph {
  ColoredGraph graph;
  std::vector<std::uint64_t> labels;
  std::size_t ignored_self_loops = 0;
  std::size_t ignored_duplicates = 0;

  std::optional<VertexId> find(std::uint64_t label) const;
  std::uint64_t label(VertexId v) const;
};

/// Edge-list text: one "u v" pair of non-negative integers per line. Blank
/// lines and lines starting with '#' or '%' are skipped, which covers the
/// optional "# n m" header. Self-loops and repeated edges are dropped and
/// counted. All vertices start black.
LabeledGraph read_edge_list(std::istream& in, const std::string& source = "<input>");
LabeledGraph read_edge_list_file(const std::filesystem::path& path);

// Sidecar listing white vertex labels, whitespace separated, '#' comments.
void apply_white_list(LabeledGraph& g, std::istream& in, const std::string& source = "<input>");
void apply_white_list_file(LabeledGraph& g, const std::filesystem::path& path);

// Writes "# n m" then one "u v" line per edge (u < v, sorted), using ids.
void write_edge_list(std::ostream& out, const ColoredGraph& g);
void write_edge_list_file(const std::filesystem::path& path, const ColoredGraph& g);

}  // namespace domkern
