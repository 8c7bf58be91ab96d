#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "maxcov/tsplib.hpp"

namespace maxcov {

// Absolute tolerance for range comparisons at the flight-range boundary, so
// floating-point summation order cannot flip feasibility.
inline constexpr double kRangeEps = 1e-9;

struct ProblemConfig {
    double flight_range = 0; // maximum distance one UAV may fly
    std::uint32_t num_uavs = 1;
};

// One UAV's flight: starts and ends at the base, visits each interior target
// once. A route [base, base] means the UAV never left.
struct Route {
    std::vector<std::uint32_t> nodes;
    double length = 0;
};

struct RoutePlan {
    std::vector<Route> routes;
    std::vector<std::uint32_t> visited; // sorted target indices, each in exactly one route
    double cost = 1.0;                  // 1 - visited/total, in [0,1]; lower is better
    double total_distance = 0;
};

// Sum of consecutive pair distances; a single-node route has length 0.
// Throws std::out_of_range on a bad index.
double route_length(std::span<const std::uint32_t> nodes, const DistanceMatrix& dm);

// 1 - visited/total. Throws std::domain_error when total_targets is 0.
double plan_cost(std::uint64_t visited_count, std::uint64_t total_targets);

// 100 * visited/total, the headline metric. Same domain as plan_cost.
double target_coverage(std::uint64_t visited_count, std::uint64_t total_targets);

// Derives the visited set, cost, and total distance from finished routes.
RoutePlan finalize_plan(std::vector<Route> routes, std::uint32_t total_targets);

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Checks every plan invariant: routes start/end at the base, no target is
// visited twice, each route length is consistent and within the flight range,
// the fleet size is respected, and the derived fields match the routes.
// Violations are reported as data, never thrown.
ValidationReport validate_plan(const RoutePlan& plan, const Instance& inst,
                               const DistanceMatrix& dm, const ProblemConfig& cfg);

// Canonical text form: one header line with the derived metrics, then one
// line of space-separated node indices per route.
std::string serialize_plan(const RoutePlan& plan, std::uint32_t total_targets);

} // namespace maxcov
