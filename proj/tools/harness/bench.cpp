#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <map>
#include <ostream>
#include <thread>

#include "harness.hpp"

namespace domkern::harness {

namespace {

std::string alber_suffix(const ApproachConfig& c) {
  auto name = c.name();
  return name.substr(name.find('.') + 1);
}

}  // namespace

std::vector<BenchRecord> run_bench(const Manifest& manifest, const BenchOptions& options) {
  const auto& entries = manifest.entries;
  const std::size_t per_file = options.configs.size();
  std::vector<BenchRecord> records(entries.size() * per_file);
  std::vector<std::exception_ptr> failures(entries.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= entries.size()) return;
      const auto& e = entries[i];
      try {
        auto loaded = load_instance(manifest.resolve(e));
        for (std::size_t c = 0; c < per_file; ++c) {
          Instance inst(loaded.graph);
          auto& rec = records[i * per_file + c];
          rec.group = e.group;
          rec.dataset = e.path.generic_string();
          rec.config = options.configs[c];
          rec.report = kernelize(inst, options.configs[c], options.engine);
        }
      } catch (const std::exception& ex) {
        failures[i] = std::make_exception_ptr(
            DataError(manifest.resolve(e).string() + ": " + ex.what()));
      }
    }
  };

  std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, entries.size()));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return records;
}

std::vector<GroupMean> aggregate(const std::vector<BenchRecord>& records) {
  std::vector<GroupMean> out;
  std::map<std::pair<std::string, std::string>, std::size_t> index;
  for (const auto& r : records) {
    auto key = std::make_pair(r.group, r.config.name());
    auto [it, fresh] = index.try_emplace(key, out.size());
    if (fresh) out.push_back({r.group, r.config});
    auto& m = out[it->second];
    ++m.instances;
    m.fully_solved += r.report.fully_solved ? 1 : 0;
    m.vertex_fraction += r.report.remaining_vertex_fraction();
    m.edge_fraction += r.report.remaining_edge_fraction();
  }
  for (auto& m : out) {
    m.vertex_fraction /= static_cast<double>(m.instances);
    m.edge_fraction /= static_cast<double>(m.instances);
  }
  return out;
}

std::vector<Worsened> sparsity_worsened(const std::vector<BenchRecord>& records) {
  std::map<std::pair<std::string, std::string>, const BenchRecord*> off;
  for (const auto& r : records) {
    if (!r.config.sparsity) off[{r.dataset, alber_suffix(r.config)}] = &r;
  }
  std::vector<Worsened> out;
  for (const auto& r : records) {
    if (!r.config.sparsity) continue;
    auto it = off.find({r.dataset, alber_suffix(r.config)});
    if (it == off.end()) continue;
    const auto& a = it->second->report;
    const auto& b = r.report;
    bool worse = b.final_vertices > a.final_vertices ||
                 (b.final_vertices == a.final_vertices && b.final_edges > a.final_edges);
    if (worse) out.push_back({r.dataset, alber_suffix(r.config), *it->second, r});
  }
  return out;
}

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const std::vector<BenchRecord>& records) {
  out << "kind,group,dataset,config,instances,vertices,edges,final_vertices,final_edges,"
         "solution_size,fully_solved,remaining_vertex_fraction,remaining_edge_fraction\n";
  for (const auto& r : records) {
    const auto& k = r.report;
    out << "instance," << r.group << ',' << r.dataset << ',' << r.config.name() << ",1,"
        << k.initial_vertices << ',' << k.initial_edges << ',' << k.final_vertices << ','
        << k.final_edges << ',' << k.solution_size << ',' << (k.fully_solved ? 1 : 0) << ','
        << format_double(k.remaining_vertex_fraction()) << ','
        << format_double(k.remaining_edge_fraction()) << '\n';
  }
  // fully_solved counts instances on mean rows.
  for (const auto& m : aggregate(records)) {
    out << "mean," << m.group << ",," << m.config.name() << ',' << m.instances << ",,,,,,"
        << m.fully_solved << ',' << format_double(m.vertex_fraction) << ','
        << format_double(m.edge_fraction) << '\n';
  }
}

nlohmann::json report_json(const KernelReport& report) {
  nlohmann::json rules = nlohmann::json::object();
  for (std::size_t i = 0; i < kRuleCount; ++i) {
    rules[std::string(rule_name(static_cast<RuleId>(i)))] = report.stats.applied[i];
  }
  return {
      {"initial_vertices", report.initial_vertices},
      {"initial_edges", report.initial_edges},
      {"final_vertices", report.final_vertices},
      {"final_edges", report.final_edges},
      {"remaining_vertex_fraction", report.remaining_vertex_fraction()},
      {"remaining_edge_fraction", report.remaining_edge_fraction()},
      {"solution_size", report.solution_size},
      {"fully_solved", report.fully_solved},
      {"per_rule_applications", rules},
      {"attempts", report.stats.attempts},
      {"sparsity_passes", report.stats.sparsity_passes},
      {"scatter_calls", report.stats.scatter_calls},
      {"scatter_invalid", report.stats.scatter_invalid},
      {"elapsed_ns", report.elapsed.count()},
  };
}

nlohmann::json bench_json(const std::vector<BenchRecord>& records) {
  nlohmann::json means = nlohmann::json::array();
  for (const auto& m : aggregate(records)) {
    means.push_back({{"group", m.group},
                     {"config", m.config.name()},
                     {"instances", m.instances},
                     {"fully_solved", m.fully_solved},
                     {"remaining_vertex_fraction", m.vertex_fraction},
                     {"remaining_edge_fraction", m.edge_fraction}});
  }

  nlohmann::json worsened = nlohmann::json::array();
  for (const auto& w : sparsity_worsened(records)) {
    worsened.push_back({{"dataset", w.dataset},
                        {"alber", w.alber},
                        {"off_final_vertices", w.off.report.final_vertices},
                        {"on_final_vertices", w.on.report.final_vertices},
                        {"off_final_edges", w.off.report.final_edges},
                        {"on_final_edges", w.on.report.final_edges}});
  }

  std::uint64_t calls = 0, invalid = 0, max_attempts = 0;
  for (const auto& r : records) {
    calls += r.report.stats.scatter_calls;
    invalid += r.report.stats.scatter_invalid;
    max_attempts = std::max(max_attempts, r.report.stats.attempts);
  }

  return {
      {"runs", records.size()},
      {"means", means},
      {"sparsity_worsened", worsened},
      {"scatter_calls", calls},
      {"scatter_invalid", invalid},
      {"max_attempts", max_attempts},
      {"note",
       "Planar groups are random stacked triangulations (uniform face splitting) thinned to "
       "the target edge count. Remaining fractions depend on that distribution and are not "
       "directly comparable with other planar generators."},
  };
}

}  // namespace domkern::harness
