#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "aif/agent.hpp"

namespace aif::harness {

// Every metric table shares this header. Values that do not belong to one
// policy use policy_index -1.
inline constexpr const char* kMetricHeader = "run,episode,step,policy_index,value";

// Metric families written under metrics/.
inline constexpr const char* kMetricFamilies[] = {
    "policy_fe", "marginal_fe", "efe", "efe_risk", "efe_b_novelty", "q_pi", "success", "trajectory", "actions",
};

struct ManifestEntry {
  std::string path;  // relative to the run directory
  std::uintmax_t bytes = 0;
  std::string git_sha1;
};

struct Manifest {
  Config config;
  std::vector<ManifestEntry> files;
};

// <out_dir>/<exp_name>/<layout>
std::filesystem::path run_directory(const Config& cfg);

// Renders one metric family as CSV text. Runs and episodes are 0-based,
// steps 1-based.
std::string render_metric(const ExperimentResult& result, std::string_view family);

// Labeled matrix: header "row\col,<col labels>", one labeled row per line.
std::string render_matrix(const Matrix& m, const std::vector<std::string>& row_labels,
                          const std::vector<std::string>& col_labels);

// Writes metrics/, model/ and manifest.json under `dir` and returns the manifest.
Manifest write_metrics(const ExperimentResult& result, const std::filesystem::path& dir);

Manifest read_manifest(const std::filesystem::path& dir);

}  // namespace aif::harness
