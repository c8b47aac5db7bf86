#include "domkern/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <limits>
#include <string_view>

namespace domkern {

namespace {

std::string_view trim(std::string_view s) {
  auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::uint64_t> parse_label(std::string_view token) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) return std::nullopt;
  return value;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& what) {
  throw DataError(source + ":" + std::to_string(line) + ": " + what);
}

bool skippable(std::string_view line) {
  return line.empty() || line.front() == '#' || line.front() == '%';
}

}  // namespace

std::optional<VertexId> LabeledGraph::find(std::uint64_t label) const {
  auto it = std::lower_bound(labels.begin(), labels.end(), label);
  if (it == labels.end() || *it != label) return std::nullopt;
  return static_cast<VertexId>(it - labels.begin());
}

std::uint64_t LabeledGraph::label(VertexId v) const { return labels.at(v); }

LabeledGraph read_edge_list(std::istream& in, const std::string& source) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (skippable(view)) continue;
    auto parts = tokens(view);
    if (parts.size() != 2) {
      fail(source, line_no, "expected two vertex ids, got " + std::to_string(parts.size()) +
                                " fields");
    }
    auto u = parse_label(parts[0]);
    auto v = parse_label(parts[1]);
    if (!u || !v) fail(source, line_no, "vertex ids must be non-negative integers");
    raw.emplace_back(*u, *v);
  }
  if (in.bad()) throw DataError(source + ": read error");

  LabeledGraph out;
  for (auto [u, v] : raw) {
    out.labels.push_back(u);
    out.labels.push_back(v);
  }
  std::sort(out.labels.begin(), out.labels.end());
  out.labels.erase(std::unique(out.labels.begin(), out.labels.end()), out.labels.end());
  if (out.labels.size() > std::numeric_limits<VertexId>::max()) {
    throw DataError(source + ": too many vertices");
  }

  out.graph = ColoredGraph(out.labels.size(), Color::Black);
  for (auto [u, v] : raw) {
    if (u == v) {
      ++out.ignored_self_loops;
      continue;
    }
    if (!out.graph.add_edge(*out.find(u), *out.find(v))) ++out.ignored_duplicates;
  }
  return out;
}

LabeledGraph read_edge_list_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path.string() + ": cannot open file");
  return read_edge_list(in, path.string());
}

void apply_white_list(LabeledGraph& g, std::istream& in, const std::string& source) {
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (skippable(view)) continue;
    for (auto token : tokens(view)) {
      auto label = parse_label(token);
      if (!label) fail(source, line_no, "vertex ids must be non-negative integers");
      auto id = g.find(*label);
      if (!id) fail(source, line_no, "vertex " + std::string(token) + " is not in the graph");
      g.graph.set_color(*id, Color::White);
    }
  }
}

void apply_white_list_file(LabeledGraph& g, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path.string() + ": cannot open file");
  apply_white_list(g, in, path.string());
}

void write_edge_list(std::ostream& out, const ColoredGraph& g) {
  out << "# " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edge_list_file(const std::filesystem::path& path, const ColoredGraph& g) {
  std::ofstream out(path);
  if (!out) throw DataError(path.string() + ": cannot open for writing");
  write_edge_list(out, g);
  if (!out) throw DataError(path.string() + ": write failed");
}

}  // namespace domkern
