#include "aif/harness/metrics.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>
#include <stdexcept>

#include "aif/harness/config_json.hpp"
#include "aif/harness/content_hash.hpp"

namespace aif::harness {
namespace fs = std::filesystem;
namespace {

constexpr const char* kActionNames[kNumActions] = {"right", "down", "left", "up"};

std::runtime_error io_error(const fs::path& path, const char* what) {
  return std::runtime_error(fmt::format("{} {}: {}", what, path.string(), std::strerror(errno)));
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw io_error(path, "cannot open");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw io_error(path, "cannot write");
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error(path, "cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Calls emit(run, episode, step, policy_index, value) for every value of a family.
template <typename Emit>
void for_each_value(const ExperimentResult& result, std::string_view family, Emit&& emit) {
  const bool per_policy = family == "policy_fe" || family == "efe" || family == "efe_risk" ||
                          family == "efe_b_novelty" || family == "q_pi";
  const bool known = per_policy || family == "marginal_fe" || family == "success" || family == "trajectory" ||
                     family == "actions";
  if (!known) throw std::invalid_argument(fmt::format("unknown metric family '{}'", family));

  for (std::size_t r = 0; r < result.runs.size(); ++r) {
    const auto& episodes = result.runs[r].episodes;
    for (std::size_t e = 0; e < episodes.size(); ++e) {
      const EpisodeTrace& ep = episodes[e];
      if (family == "success") {
        emit(r, e, static_cast<int>(ep.steps.size()), -1, ep.success ? 1.0 : 0.0);
        continue;
      }
      for (std::size_t s = 0; s < ep.steps.size(); ++s) {
        const StepRecord& rec = ep.steps[s];
        if (family == "marginal_fe") {
          emit(r, e, rec.step, -1, rec.fe.marginal);
        } else if (family == "trajectory") {
          emit(r, e, rec.step, -1, static_cast<double>(ep.tiles[s]));
        } else if (family == "actions") {
          emit(r, e, rec.step, -1, static_cast<double>(rec.action));
        } else {
          for (std::size_t k = 0; k < rec.fe.policy_fe.size(); ++k) {
            double v = 0.0;
            if (family == "policy_fe") v = rec.fe.policy_fe[k];
            else if (family == "efe") v = rec.efe[k].total();
            else if (family == "efe_risk") v = rec.efe[k].risk;
            else if (family == "efe_b_novelty") v = rec.efe[k].b_novelty;
            else v = rec.q_pi[static_cast<Index>(k)];
            emit(r, e, rec.step, static_cast<int>(k), v);
          }
        }
      }
    }
  }
}

std::vector<std::string> state_labels(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back(fmt::format("s{}", i + 1));
  return out;
}

}  // namespace

fs::path run_directory(const Config& cfg) {
  return fs::path(cfg.out_dir) / cfg.exp_name / std::string(to_string(cfg.env_layout));
}

std::string render_metric(const ExperimentResult& result, std::string_view family) {
  fmt::memory_buffer buf;
  fmt::format_to(std::back_inserter(buf), "{}\n", kMetricHeader);
  for_each_value(result, family, [&](std::size_t r, std::size_t e, int step, int k, double v) {
    fmt::format_to(std::back_inserter(buf), "{},{},{},{},{:.12g}\n", r, e, step, k, v);
  });
  return fmt::to_string(buf);
}

std::string render_matrix(const Matrix& m, const std::vector<std::string>& row_labels,
                          const std::vector<std::string>& col_labels) {
  if (static_cast<Index>(row_labels.size()) != m.rows() || static_cast<Index>(col_labels.size()) != m.cols()) {
    throw std::invalid_argument("render_matrix: label count does not match the matrix shape");
  }
  fmt::memory_buffer buf;
  fmt::format_to(std::back_inserter(buf), "next/current");
  for (const auto& c : col_labels) fmt::format_to(std::back_inserter(buf), ",{}", c);
  buf.push_back('\n');
  for (Index i = 0; i < m.rows(); ++i) {
    fmt::format_to(std::back_inserter(buf), "{}", row_labels[static_cast<std::size_t>(i)]);
    for (Index j = 0; j < m.cols(); ++j) fmt::format_to(std::back_inserter(buf), ",{:.12g}", m(i, j));
    buf.push_back('\n');
  }
  return fmt::to_string(buf);
}

Manifest write_metrics(const ExperimentResult& result, const fs::path& dir) {
  std::error_code ec;
  for (const char* sub : {"metrics", "model"}) {
    fs::create_directories(dir / sub, ec);
    if (ec) throw std::runtime_error(fmt::format("cannot create {}: {}", (dir / sub).string(), ec.message()));
  }

  Manifest manifest;
  manifest.config = result.config;
  auto put = [&](const fs::path& rel, const std::string& content) {
    fs::create_directories((dir / rel).parent_path(), ec);
    if (ec) throw std::runtime_error(fmt::format("cannot create {}: {}", (dir / rel).parent_path().string(), ec.message()));
    write_file(dir / rel, content);
    manifest.files.push_back({rel.generic_string(), content.size(), git_blob_sha1(content)});
  };

  for (const char* family : kMetricFamilies) put(fs::path("metrics") / (std::string(family) + ".csv"), render_metric(result, family));

  const int n = result.layout.num_tiles;
  const auto labels = state_labels(n);
  const GroundTruth truth = ground_truth(result.layout);
  for (int a = 0; a < kNumActions; ++a) {
    put(fs::path("model") / "truth" / fmt::format("B_{}.csv", kActionNames[a]),
        render_matrix(truth.transitions[static_cast<std::size_t>(a)], labels, labels));
  }
  for (std::size_t r = 0; r < result.runs.size(); ++r) {
    const Model& m = result.runs[r].final_model;
    const fs::path run_dir = fs::path("model") / fmt::format("run{}", r);
    for (int a = 0; a < kNumActions; ++a) {
      put(run_dir / fmt::format("B_{}.csv", kActionNames[a]), render_matrix(m.B[static_cast<std::size_t>(a)], labels, labels));
    }
    if (m.learn_A) put(run_dir / "A.csv", render_matrix(m.A, labels, labels));
  }

  std::sort(manifest.files.begin(), manifest.files.end(),
            [](const ManifestEntry& x, const ManifestEntry& y) { return x.path < y.path; });
  nlohmann::ordered_json j;
  j["config"] = nlohmann::ordered_json::parse(config_to_json(manifest.config));
  j["files"] = nlohmann::ordered_json::array();
  for (const auto& f : manifest.files) j["files"].push_back({{"path", f.path}, {"bytes", f.bytes}, {"git_sha1", f.git_sha1}});
  write_file(dir / "manifest.json", j.dump(2) + "\n");
  return manifest;
}

Manifest read_manifest(const fs::path& dir) {
  const fs::path path = dir / "manifest.json";
  if (!fs::exists(path)) throw std::runtime_error(fmt::format("missing manifest: {}", path.string()));
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(fmt::format("{}: {}", path.string(), e.what()));
  }
  Manifest m;
  m.config = config_from_json(j.at("config").dump());
  for (const auto& f : j.at("files")) {
    m.files.push_back({f.at("path").get<std::string>(), f.at("bytes").get<std::uintmax_t>(),
                       f.at("git_sha1").get<std::string>()});
  }
  return m;
}

}  // namespace aif::harness
