#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "domkern/edge_list.hpp"
#include "domkern/engine.hpp"
#include "domkern/plangen.hpp"

namespace domkern::harness {

// One dataset file. `path` is relative to the manifest's directory unless
// absolute.
struct ManifestEntry {
  std::string group;
  std::uint64_t seed = 0;
  std::filesystem::path path;
};

struct Manifest {
  std::filesystem::path base;
  std::vector<ManifestEntry> entries;

  std::filesystem::path resolve(const ManifestEntry& e) const;
};

// Tab separated "group seed path" lines after a header line; '#' comments
// and blank lines are skipped.
Manifest read_manifest(const std::filesystem::path& path);
void write_manifest(const std::filesystem::path& path, const Manifest& manifest);

// Writes <out>/<group>/<group>_<index>.txt for every instance of every
// group, plus <out>/manifest.tsv. Returns the manifest.
Manifest generate_dataset(const std::filesystem::path& out,
                          const std::vector<GroupSpec>& groups);

// Graph plus optional white sidecar "<file>.white" next to it.
LabeledGraph load_instance(const std::filesystem::path& path);

struct BenchOptions {
  std::vector<ApproachConfig> configs;
  EngineOptions engine;
  std::size_t jobs = 1;
};

struct BenchRecord {
  std::string group;
  std::string dataset;  // the manifest path, as written
  ApproachConfig config;
  KernelReport report;
};

/// Runs every (file, config) pair. Records come back in manifest order, then
/// config order, whatever the number of workers. The first failing file (in
/// manifest order) aborts the run with a DataError naming it.
std::vector<BenchRecord> run_bench(const Manifest& manifest, const BenchOptions& options);

struct GroupMean {
  std::string group;
  ApproachConfig config;
  std::size_t instances = 0;
  std::size_t fully_solved = 0;
  double vertex_fraction = 0;
  double edge_fraction = 0;
};

// Means of per-instance fractions, in first-seen (group, config) order.
std::vector<GroupMean> aggregate(const std::vector<BenchRecord>& records);

// An instance where on.X left a strictly larger kernel than off.X.
struct Worsened {
  std::string dataset;
  std::string alber;
  BenchRecord off;
  BenchRecord on;
};

std::vector<Worsened> sparsity_worsened(const std::vector<BenchRecord>& records);

// Shortest text that parses back to the same double.
std::string format_double(double x);

// One "instance" row per record, then one "mean" row per group and config.
void write_csv(std::ostream& out, const std::vector<BenchRecord>& records);

nlohmann::json report_json(const KernelReport& report);
nlohmann::json bench_json(const std::vector<BenchRecord>& records);

}  // namespace domkern::harness
