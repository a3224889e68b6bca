#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "aif/environment.hpp"
#include "aif/model.hpp"

namespace aif::harness {

// Policies whose ground-truth trajectory from the start tile ends on the goal.
std::vector<int> optimal_policies(const Layout& layout, const std::vector<Policy>& policies);

// Every optimal policy plus evenly spaced fillers, sorted, at most `size` entries
// unless there are more optimal policies than that.
std::vector<int> default_selection(const Layout& layout, const std::vector<Policy>& policies, std::size_t size = 16);

// Reads the metric tables and manifest under `dir` and writes charts/*.svg.
// Returns the written files.
std::vector<std::filesystem::path> emit_charts(const std::filesystem::path& dir,
                                               const std::optional<std::vector<int>>& selection = std::nullopt);

}  // namespace aif::harness
