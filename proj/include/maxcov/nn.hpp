#pragma once

#include "maxcov/model.hpp"
#include "maxcov/tsplib.hpp"

namespace maxcov {

// Equidistant candidates are broken by lowest node index, which makes the
// construction fully deterministic.
enum class TieRule { LowestIndex };

// Greedy baseline: each UAV in turn repeatedly moves to the nearest unvisited
// target it can still reach with enough range left for the return leg, then
// flies home when nothing fits. Every UAV gets a route, possibly the empty
// [base, base] one.
RoutePlan nn_construct(const Instance& inst, const DistanceMatrix& dm, const ProblemConfig& cfg,
                       TieRule tie = TieRule::LowestIndex);

// Cost of the greedy plan; seeds the pheromone initialization.
double initial_cost(const Instance& inst, const DistanceMatrix& dm, const ProblemConfig& cfg);

} // namespace maxcov
