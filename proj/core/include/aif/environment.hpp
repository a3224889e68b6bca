#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <vector>

#include "aif/config.hpp"
#include "aif/math.hpp"

namespace aif {

// Action indices. A move into a wall or off the grid leaves the agent in place.
enum Move : int { kRight = 0, kDown = 1, kLeft = 2, kUp = 3 };
inline constexpr int kNumActions = 4;

// Tiles are numbered 0..num_tiles-1 internally; user-facing labels are tile + 1.
struct Layout {
  LayoutId id = LayoutId::tmaze4;
  int rows = 0;
  int cols = 0;
  std::vector<int> cell_tile;  // row-major; -1 marks a wall cell
  int num_tiles = 0;
  int start_tile = 0;
  int goal_tile = 0;
  int episode_length = 0;  // T: observations per episode, T - 1 actions

  int successor(int tile, int action) const;
};

Layout make_layout(LayoutId id);

struct GroundTruth {
  Matrix emission;                               // observations x states
  std::array<Matrix, kNumActions> transitions;   // next x current, one per action
};

// Identity emission and one-hot transition columns for the layout.
GroundTruth ground_truth(const Layout& layout);

struct StepResult {
  int observation = 0;
  bool done = false;
};

class Environment {
 public:
  Environment(Layout layout, std::uint64_t seed);

  // Places the agent on the start tile and returns the first observation.
  int reset();
  StepResult step(int action);

  const Layout& layout() const noexcept { return layout_; }
  int tile() const noexcept { return tile_; }
  // 1-based index of the current observation within the episode.
  int step_index() const noexcept { return step_index_; }
  bool done() const noexcept { return step_index_ >= layout_.episode_length; }

 private:
  int sample_column(const Matrix& m, int col);

  Layout layout_;
  GroundTruth truth_;
  std::mt19937_64 rng_;
  int tile_ = 0;
  int step_index_ = 0;
};

}  // namespace aif
