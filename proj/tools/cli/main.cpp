#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "domkern/exact.hpp"
#include "harness/harness.hpp"

using namespace domkern;

namespace {

enum Exit { kOk = 0, kUsage = 1, kData = 2, kOracle = 3, kInternal = 4 };

struct EngineFlags {
  std::size_t hub_threshold = 7;
  std::string escalation = "dominator";
  std::uint64_t max_attempts = 10'000'000;

  void add(CLI::App* cmd) {
    cmd->add_option("--hub-threshold", hub_threshold,
                    "Escalate a hub while the largest residual group key is at most this")
        ->capture_default_str();
    cmd->add_option("--escalation", escalation, "Hub choice: dominator or candidate")
        ->check(CLI::IsMember({"dominator", "candidate"}))
        ->capture_default_str();
    cmd->add_option("--max-attempts", max_attempts, "Attempt budget per kernelize call")
        ->capture_default_str();
  }

  EngineOptions options() const {
    EngineOptions o;
    o.sparsity.hub_threshold = hub_threshold;
    o.sparsity.escalation = escalation == "candidate" ? Escalation::CandidateNeighbors
                                                      : Escalation::DominatorNeighbors;
    o.max_attempts = max_attempts;
    return o;
  }
};

ApproachConfig parse_config(const std::string& name) {
  auto cfg = ApproachConfig::parse(name);
  if (!cfg) throw UsageError("unknown config '" + name + "' (expected off.none ... on.both)");
  return *cfg;
}

std::vector<ApproachConfig> parse_configs(const std::string& list) {
  if (list == "all") {
    auto all = ApproachConfig::all();
    return {all.begin(), all.end()};
  }
  std::vector<ApproachConfig> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    auto comma = list.find(',', start);
    if (comma == std::string::npos) comma = list.size();
    out.push_back(parse_config(list.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

LabeledGraph load(const std::string& input, const std::string& white) {
  auto g = read_edge_list_file(input);
  if (!white.empty()) apply_white_list_file(g, white);
  return g;
}

// Gadget vertices have no input label; they get fresh ones above the largest.
std::uint64_t output_label(const LabeledGraph& g, VertexId v) {
  if (v < g.labels.size()) return g.labels[v];
  std::uint64_t top = g.labels.empty() ? 0 : g.labels.back() + 1;
  return top + (v - g.labels.size());
}

void write_kernel(const std::string& path, const LabeledGraph& in, const ColoredGraph& k) {
  std::ofstream out(path);
  if (!out) throw DataError(path + ": cannot open for writing");
  out << "# " << k.vertex_count() << ' ' << k.edge_count() << '\n';
  for (auto [u, v] : k.edges()) out << output_label(in, u) << ' ' << output_label(in, v) << '\n';

  std::ofstream white(path + ".white");
  if (!white) throw DataError(path + ".white: cannot open for writing");
  for (VertexId v : k.white_vertices()) white << output_label(in, v) << '\n';
  if (!out || !white) throw DataError(path + ": write failed");
}

void print_means(std::ostream& out, const std::vector<harness::BenchRecord>& records) {
  out << std::left << std::setw(12) << "group" << std::setw(10) << "config" << std::right
      << std::setw(6) << "n" << std::setw(8) << "solved" << std::setw(14) << "vertices"
      << std::setw(14) << "edges" << '\n';
  for (const auto& m : harness::aggregate(records)) {
    out << std::left << std::setw(12) << m.group << std::setw(10) << m.config.name()
        << std::right << std::setw(6) << m.instances << std::setw(8) << m.fully_solved
        << std::setw(14) << std::setprecision(6) << m.vertex_fraction << std::setw(14)
        << m.edge_fraction << '\n';
  }
}

int cmd_gen(const std::string& out, std::uint64_t seed, std::size_t instances,
            const std::vector<std::string>& only) {
  auto groups = canonical_groups(instances, seed);
  if (!only.empty()) {
    for (const auto& name : only) {
      bool known = std::any_of(groups.begin(), groups.end(),
                               [&](const GroupSpec& g) { return g.name() == name; });
      if (!known) throw UsageError("unknown group '" + name + "'");
    }
    std::erase_if(groups, [&](const GroupSpec& g) {
      return std::find(only.begin(), only.end(), g.name()) == only.end();
    });
  }
  auto manifest = harness::generate_dataset(out, groups);
  std::cout << "wrote " << manifest.entries.size() << " graphs and "
            << (std::filesystem::path(out) / "manifest.tsv").string() << '\n';
  return kOk;
}

int cmd_kernelize(const std::string& input, const std::string& white, const std::string& config,
                  const std::string& report_path, const std::string& kernel_path,
                  const EngineFlags& flags) {
  auto cfg = parse_config(config);
  auto g = load(input, white);
  Instance inst(g.graph);
  auto report = kernelize(inst, cfg, flags.options());

  if (!report_path.empty()) {
    auto doc = harness::report_json(report);
    doc["input"] = input;
    doc["config"] = cfg.name();
    std::vector<std::uint64_t> solution;
    for (VertexId v : inst.solution) solution.push_back(output_label(g, v));
    std::sort(solution.begin(), solution.end());
    doc["solution"] = solution;
    std::ofstream out(report_path);
    if (!out) throw DataError(report_path + ": cannot open for writing");
    out << doc.dump(2) << '\n';
  }
  if (!kernel_path.empty()) write_kernel(kernel_path, g, inst.graph);

  std::cout << input << " [" << cfg.name() << "]\n"
            << "  vertices " << report.initial_vertices << " -> " << report.final_vertices
            << "  edges " << report.initial_edges << " -> " << report.final_edges << '\n'
            << "  solution " << report.solution_size
            << (report.fully_solved ? "  (fully solved)" : "") << '\n';
  for (std::size_t i = 0; i < kRuleCount; ++i) {
    if (report.stats.applied[i] == 0) continue;
    std::cout << "  " << std::left << std::setw(20) << rule_name(static_cast<RuleId>(i))
              << report.stats.applied[i] << '\n';
  }
  return kOk;
}

int cmd_bench(const std::string& manifest_path, const std::string& configs,
              const std::string& csv_path, const std::string& report_path, std::size_t jobs,
              const EngineFlags& flags) {
  harness::BenchOptions options;
  options.configs = parse_configs(configs);
  options.engine = flags.options();
  options.jobs = jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : jobs;

  auto manifest = harness::read_manifest(manifest_path);
  auto records = harness::run_bench(manifest, options);

  if (csv_path.empty() || csv_path == "-") {
    harness::write_csv(std::cout, records);
  } else {
    std::ofstream out(csv_path);
    if (!out) throw DataError(csv_path + ": cannot open for writing");
    harness::write_csv(out, records);
    print_means(std::cout, records);
  }
  if (!report_path.empty()) {
    std::ofstream out(report_path);
    if (!out) throw DataError(report_path + ": cannot open for writing");
    out << harness::bench_json(records).dump(2) << '\n';
  }
  auto worsened = harness::sparsity_worsened(records);
  if (!worsened.empty()) {
    std::cerr << worsened.size() << " run(s) where sparsity left a larger kernel\n";
  }
  return kOk;
}

int cmd_solve_exact(const std::string& input, const std::string& white,
                    std::size_t max_vertices) {
  auto g = load(input, white);
  auto result = exact_dom(g.graph, {max_vertices});
  std::cout << "size " << result.size << "\nwitness";
  for (VertexId v : result.witness) std::cout << ' ' << g.labels[v];
  std::cout << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dominating Set kernelization: data generation, reduction and benchmarks"};
  app.require_subcommand(1);

  auto* gen = app.add_subcommand("gen", "Generate the random planar benchmark groups");
  std::string gen_out;
  std::uint64_t seed = 1;
  std::size_t instances = 25;
  std::vector<std::string> only;
  gen->add_option("-o,--out", gen_out, "Output directory")->required();
  gen->add_option("--seed", seed, "Base seed")->capture_default_str();
  gen->add_option("-n,--instances", instances, "Graphs per group")->capture_default_str();
  gen->add_option("--group", only, "Only these groups, e.g. 302_900");

  auto* ker = app.add_subcommand("kernelize", "Reduce one edge list");
  std::string input, white, config = "on.both", report_path, kernel_path;
  EngineFlags flags;
  ker->add_option("input", input, "Edge list")->required();
  ker->add_option("--white", white, "File of white vertex ids");
  ker->add_option("-c,--config", config, "off.none ... on.both")->capture_default_str();
  ker->add_option("--report", report_path, "Write a JSON report here");
  ker->add_option("--kernel-out", kernel_path, "Write the kernel (and <path>.white) here");
  flags.add(ker);

  auto* bench = app.add_subcommand("bench", "Run configs over a dataset manifest");
  std::string manifest_path, configs = "all", csv_path, bench_report;
  std::size_t jobs = 0;
  bench->add_option("manifest", manifest_path, "manifest.tsv")->required();
  bench->add_option("-c,--configs", configs, "Comma separated configs, or all")
      ->capture_default_str();
  bench->add_option("--csv", csv_path, "CSV output (default stdout)");
  bench->add_option("--report", bench_report, "Write a JSON summary here");
  bench->add_option("-j,--jobs", jobs, "Worker threads (0: one per core)")
      ->envname("DOMKERN_JOBS");
  flags.add(bench);

  auto* exact = app.add_subcommand("solve-exact", "Optimal dominating set of a small graph");
  std::size_t max_vertices = ExactOptions{}.max_vertices;
  exact->add_option("input", input, "Edge list")->required();
  exact->add_option("--white", white, "File of white vertex ids");
  exact->add_option("--max-vertices", max_vertices, "Refuse larger inputs")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_out, seed, instances, only);
    if (*ker) return cmd_kernelize(input, white, config, report_path, kernel_path, flags);
    if (*bench) return cmd_bench(manifest_path, configs, csv_path, bench_report, jobs, flags);
    if (*exact) return cmd_solve_exact(input, white, max_vertices);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kData;
  } catch (const OracleSizeError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kOracle;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
