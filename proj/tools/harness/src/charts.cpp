#include "aif/harness/charts.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>

#include "aif/harness/metrics.hpp"
#include "aif/harness/svg.hpp"

namespace aif::harness {
namespace fs = std::filesystem;
namespace {

constexpr char kActionLetters[kNumActions] = {'R', 'D', 'L', 'U'};
constexpr const char* kActionNames[kNumActions] = {"right", "down", "left", "up"};

std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(fmt::format("missing metric file: {}", path.string()));
  return in;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == ',') {
      out.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

template <typename T>
T number(std::string_view s, const fs::path& path) {
  T v{};
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size()) {
    throw std::runtime_error(fmt::format("{}: bad number '{}'", path.string(), s));
  }
  return v;
}

// Per-episode means over runs, indexed by (policy_index + 1, step, episode).
class EpisodeMeans {
 public:
  EpisodeMeans(const fs::path& path, int policies, int steps, int episodes)
      : policies_(policies), steps_(steps), episodes_(episodes),
        sum_(static_cast<std::size_t>(policies + 1) * steps * episodes, 0.0), count_(sum_.size(), 0) {
    auto in = open_input(path);
    std::string line;
    if (!std::getline(in, line) || line != kMetricHeader) {
      throw std::runtime_error(fmt::format("{}: unexpected header", path.string()));
    }
    while (std::getline(in, line)) {
      const auto f = split(line);
      if (f.size() != 5) throw std::runtime_error(fmt::format("{}: expected 5 fields in '{}'", path.string(), line));
      const int e = number<int>(f[1], path), s = number<int>(f[2], path), k = number<int>(f[3], path);
      if (e < 0 || e >= episodes || s < 1 || s > steps || k < -1 || k >= policies) {
        throw std::runtime_error(fmt::format("{}: row out of range '{}'", path.string(), line));
      }
      const std::size_t i = index(k, s, e);
      sum_[i] += number<double>(f[4], path);
      ++count_[i];
    }
  }

  std::vector<double> series(int policy, int step) const {
    std::vector<double> out(static_cast<std::size_t>(episodes_));
    for (int e = 0; e < episodes_; ++e) {
      const std::size_t i = index(policy, step, e);
      out[static_cast<std::size_t>(e)] = count_[i] ? sum_[i] / count_[i] : std::numeric_limits<double>::quiet_NaN();
    }
    return out;
  }

  // Mean of the per-policy series over all policies.
  std::vector<double> policy_average(int step) const {
    std::vector<double> out(static_cast<std::size_t>(episodes_), 0.0);
    for (int k = 0; k < policies_; ++k) {
      const auto s = series(k, step);
      for (std::size_t e = 0; e < out.size(); ++e) out[e] += s[e] / policies_;
    }
    return out;
  }

 private:
  std::size_t index(int policy, int step, int episode) const {
    return (static_cast<std::size_t>(policy + 1) * steps_ + static_cast<std::size_t>(step - 1)) * episodes_ +
           static_cast<std::size_t>(episode);
  }

  int policies_, steps_, episodes_;
  std::vector<double> sum_;
  std::vector<int> count_;
};

Matrix read_matrix(const fs::path& path) {
  auto in = open_input(path);
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    const auto f = split(line);
    std::vector<double> row;
    for (std::size_t i = 1; i < f.size(); ++i) row.push_back(number<double>(f[i], path));
    rows.push_back(std::move(row));
  }
  Matrix m(static_cast<Index>(rows.size()), rows.empty() ? 0 : static_cast<Index>(rows.front().size()));
  for (Index i = 0; i < m.rows(); ++i) {
    if (static_cast<Index>(rows[static_cast<std::size_t>(i)].size()) != m.cols()) {
      throw std::runtime_error(fmt::format("{}: ragged matrix", path.string()));
    }
    for (Index j = 0; j < m.cols(); ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

std::vector<double> episode_axis(int episodes) {
  std::vector<double> x(static_cast<std::size_t>(episodes));
  for (int e = 0; e < episodes; ++e) x[static_cast<std::size_t>(e)] = e + 1;
  return x;
}

std::string policy_label(int k, const Policy& p, bool optimal) {
  std::string s = fmt::format("{} ", k);
  for (int a : p) s += kActionLetters[a];
  if (optimal) s += " *";
  return s;
}

}  // namespace

std::vector<int> optimal_policies(const Layout& layout, const std::vector<Policy>& policies) {
  std::vector<int> out;
  for (std::size_t k = 0; k < policies.size(); ++k) {
    int tile = layout.start_tile;
    for (int a : policies[k]) tile = layout.successor(tile, a);
    if (tile == layout.goal_tile) out.push_back(static_cast<int>(k));
  }
  return out;
}

std::vector<int> default_selection(const Layout& layout, const std::vector<Policy>& policies, std::size_t size) {
  std::set<int> chosen;
  for (int k : optimal_policies(layout, policies)) chosen.insert(k);
  const std::size_t n = policies.size();
  // Stride through the index range until the selection is full.
  for (std::size_t parts = size; chosen.size() < std::min(size, n); ++parts) {
    for (std::size_t i = 0; i < parts && chosen.size() < std::min(size, n); ++i) {
      chosen.insert(static_cast<int>(i * n / parts));
    }
  }
  return {chosen.begin(), chosen.end()};
}

std::vector<fs::path> emit_charts(const fs::path& dir, const std::optional<std::vector<int>>& selection) {
  const Manifest manifest = read_manifest(dir);
  const Config& cfg = manifest.config;
  const Layout layout = make_layout(cfg.env_layout);
  const std::vector<Policy> policies = enumerate_policies(
      kNumActions, cfg.horizon(), cfg.num_policies > 0 ? std::optional<long>(cfg.num_policies) : std::nullopt);
  const int n_pol = static_cast<int>(policies.size());
  const int steps = cfg.num_steps, episodes = cfg.num_episodes;

  const std::vector<int> picked = selection ? *selection : default_selection(layout, policies);
  for (int k : picked) {
    if (k < 0 || k >= n_pol) throw std::out_of_range(fmt::format("selection: policy {} out of range", k));
  }
  const auto optimal = optimal_policies(layout, policies);
  auto is_optimal = [&](int k) { return std::find(optimal.begin(), optimal.end(), k) != optimal.end(); };

  const fs::path metrics = dir / "metrics";
  const fs::path charts = dir / "charts";
  fs::create_directories(charts);
  std::vector<fs::path> written;
  auto save = [&](const std::string& name, const std::string& svg) {
    const fs::path path = charts / name;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << svg)) throw std::runtime_error(fmt::format("cannot write {}", path.string()));
    written.push_back(path);
  };
  const auto x = episode_axis(episodes);
  const std::string tag = fmt::format("{} {} agents", to_string(cfg.env_layout), to_string(cfg.agent_kind));

  {
    EpisodeMeans success(metrics / "success.csv", n_pol, steps, episodes);
    auto y = success.series(-1, steps);
    for (double& v : y) v *= 100.0;
    save("success_rate.svg", svg::render(svg::LineChart{"Agents reaching the goal, " + tag, "episode", "percent",
                                                        {{"success", x, y}}}));
  }
  {
    EpisodeMeans fe(metrics / "marginal_fe.csv", n_pol, steps, episodes);
    save("marginal_fe_final.svg",
         svg::render(svg::LineChart{fmt::format("Free energy at step {}, {}", steps, tag), "episode", "F",
                                    {{"marginal", x, fe.series(-1, steps)}}}));
  }
  auto per_policy = [&](const char* family, int step, const std::string& file, const std::string& title,
                        const std::string& y_label) {
    EpisodeMeans t(metrics / (std::string(family) + ".csv"), n_pol, steps, episodes);
    svg::LineChart chart{title + ", " + tag, "episode", y_label, {}};
    if (picked.empty()) {
      chart.series.push_back({"mean over policies", x, t.policy_average(step)});
    }
    for (int k : picked) {
      chart.series.push_back({policy_label(k, policies[static_cast<std::size_t>(k)], is_optimal(k)), x, t.series(k, step)});
    }
    save(file, svg::render(chart));
  };
  per_policy("policy_fe", steps, "policy_fe_final.svg", fmt::format("Policy free energy at step {}", steps), "F");
  per_policy("efe", 1, "efe_step1.svg", "Expected free energy at step 1", "G");
  per_policy("q_pi", 1, "q_pi_step1.svg", "Policy probabilities at step 1", "probability");

  std::vector<svg::Heatmap> panels;
  for (int a = 0; a < kNumActions; ++a) {
    panels.push_back({fmt::format("learned B {} (run 0)", kActionNames[a]),
                      read_matrix(dir / "model" / "run0" / fmt::format("B_{}.csv", kActionNames[a]))});
  }
  for (int a = 0; a < kNumActions; ++a) {
    panels.push_back({fmt::format("true B {}", kActionNames[a]),
                      read_matrix(dir / "model" / "truth" / fmt::format("B_{}.csv", kActionNames[a]))});
  }
  save("B_heatmaps.svg", svg::render(panels, kNumActions, "Transition matrices, " + tag));
  return written;
}

}  // namespace aif::harness
