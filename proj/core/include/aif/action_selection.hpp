#pragma once

#include <random>
#include <span>

#include "aif/config.hpp"
#include "aif/math.hpp"
#include "aif/model.hpp"

namespace aif {

// Probability mass each action receives at position `step` of the policies.
Vector action_marginal(const SimplexVector& q_pi, std::span<const Policy> policies, int step, int num_actions);

// Index of the largest entry; ties go to the lowest index.
Index argmax_lowest(const Vector& v);

// Chooses the action for position `step` (0-based) of the policies.
int select_action(const SimplexVector& q_pi, std::span<const Policy> policies, int step, int num_actions,
                  ActionSelection rule, std::mt19937_64& rng);

}  // namespace aif
