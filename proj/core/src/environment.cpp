#include "aif/environment.hpp"

#include <algorithm>
#include <stdexcept>

namespace aif {

int Layout::successor(int tile, int action) const {
  if (tile < 0 || tile >= num_tiles) throw std::out_of_range("layout: tile out of range");
  if (action < 0 || action >= kNumActions) throw std::out_of_range("layout: action out of range");
  const auto cell = static_cast<int>(std::find(cell_tile.begin(), cell_tile.end(), tile) - cell_tile.begin());
  int r = cell / cols;
  int c = cell % cols;
  switch (action) {
    case kRight: ++c; break;
    case kDown: ++r; break;
    case kLeft: --c; break;
    case kUp: --r; break;
  }
  if (r < 0 || r >= rows || c < 0 || c >= cols) return tile;
  const int next = cell_tile[static_cast<std::size_t>(r * cols + c)];
  return next < 0 ? tile : next;
}

Layout make_layout(LayoutId id) {
  Layout l;
  l.id = id;
  switch (id) {
    case LayoutId::tmaze4:
      // 1 2 3
      // # 4 #
      // # 5 #
      l.rows = 3;
      l.cols = 3;
      l.cell_tile = {0, 1, 2, -1, 3, -1, -1, 4, -1};
      l.num_tiles = 5;
      l.start_tile = 4;
      l.goal_tile = 0;
      l.episode_length = 4;
      break;
    case LayoutId::gridw9:
      l.rows = 3;
      l.cols = 3;
      l.cell_tile = {0, 1, 2, 3, 4, 5, 6, 7, 8};
      l.num_tiles = 9;
      l.start_tile = 0;
      l.goal_tile = 8;
      l.episode_length = 5;
      break;
  }
  return l;
}

GroundTruth ground_truth(const Layout& layout) {
  const int n = layout.num_tiles;
  GroundTruth g;
  g.emission = Matrix::Identity(n, n);
  for (int a = 0; a < kNumActions; ++a) {
    Matrix b = Matrix::Zero(n, n);
    for (int s = 0; s < n; ++s) b(layout.successor(s, a), s) = 1.0;
    g.transitions[static_cast<std::size_t>(a)] = std::move(b);
  }
  return g;
}

Environment::Environment(Layout layout, std::uint64_t seed)
    : layout_(std::move(layout)), truth_(ground_truth(layout_)), rng_(seed) {}

int Environment::sample_column(const Matrix& m, int col) {
  const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
  double cum = 0.0;
  for (Index i = 0; i < m.rows(); ++i) {
    cum += m(i, col);
    if (cum > u) return static_cast<int>(i);
  }
  return static_cast<int>(m.rows() - 1);
}

int Environment::reset() {
  tile_ = layout_.start_tile;
  step_index_ = 1;
  return sample_column(truth_.emission, tile_);
}

StepResult Environment::step(int action) {
  if (step_index_ < 1) throw std::logic_error("environment: step before reset");
  if (done()) throw std::logic_error("environment: episode already finished");
  if (action < 0 || action >= kNumActions) throw std::out_of_range("environment: invalid action");
  tile_ = sample_column(truth_.transitions[static_cast<std::size_t>(action)], tile_);
  ++step_index_;
  return {sample_column(truth_.emission, tile_), done()};
}

}  // namespace aif
