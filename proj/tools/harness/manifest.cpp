#include <charconv>
#include <fstream>

#include "harness.hpp"

namespace domkern::harness {

namespace {

constexpr const char* kHeader = "group\tseed\tpath";

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) return out;
    start = tab + 1;
  }
}

}  // namespace

std::filesystem::path Manifest::resolve(const ManifestEntry& e) const {
  return e.path.is_absolute() ? e.path : base / e.path;
}

Manifest read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError(path.string() + ": cannot open manifest");

  Manifest m;
  m.base = path.parent_path();
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      header_seen = true;
      if (line == kHeader) continue;
    }
    auto fields = split_tabs(line);
    auto where = path.string() + ":" + std::to_string(line_no) + ": ";
    if (fields.size() != 3) throw DataError(where + "expected group<TAB>seed<TAB>path");
    ManifestEntry e;
    e.group = fields[0];
    const auto& s = fields[1];
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), e.seed);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw DataError(where + "bad seed");
    if (fields[2].empty()) throw DataError(where + "empty path");
    e.path = fields[2];
    m.entries.push_back(std::move(e));
  }
  return m;
}

void write_manifest(const std::filesystem::path& path, const Manifest& manifest) {
  std::ofstream out(path);
  if (!out) throw DataError(path.string() + ": cannot open for writing");
  out << kHeader << '\n';
  for (const auto& e : manifest.entries) {
    out << e.group << '\t' << e.seed << '\t' << e.path.generic_string() << '\n';
  }
  if (!out) throw DataError(path.string() + ": write failed");
}

Manifest generate_dataset(const std::filesystem::path& out,
                          const std::vector<GroupSpec>& groups) {
  Manifest m;
  m.base = out;
  for (const auto& spec : groups) {
    std::filesystem::path dir = out / spec.name();
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw DataError(dir.string() + ": " + ec.message());
    for (std::size_t i = 0; i < spec.instances; ++i) {
      std::filesystem::path rel =
          std::filesystem::path(spec.name()) / (spec.name() + "_" + std::to_string(i) + ".txt");
      write_edge_list_file(out / rel, generate_instance(spec, i));
      m.entries.push_back({spec.name(), instance_seed(spec, i), rel});
    }
  }
  write_manifest(out / "manifest.tsv", m);
  return m;
}

LabeledGraph load_instance(const std::filesystem::path& path) {
  auto g = read_edge_list_file(path);
  auto white = path;
  white += ".white";
  if (std::filesystem::exists(white)) apply_white_list_file(g, white);
  return g;
}

}  // namespace domkern::harness
