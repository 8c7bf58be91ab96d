#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "maxcov/model.hpp"
#include "maxcov/rng.hpp"
#include "maxcov/tsplib.hpp"

namespace maxcov {

// Where the pheromone update happens. PerAnt follows the reference loop shape
// (evaporate + deposit after every single ant); IterationBest is the
// canonical Max-Min variant updating once per iteration with the iteration's
// best plan.
enum class UpdateRule { PerAnt, IterationBest };

// Static keeps tau_min fixed from the configured iteration budget; Dynamic
// recomputes it from the current (1-based) iteration index.
enum class TauMinSchedule { Static, Dynamic };

struct MmasParams {
    double beta = 7.0;    // heuristic exponent
    double rho = 0.01;    // evaporation rate, in (0,1)
    std::uint32_t num_ants = 151;
    std::uint32_t iterations = 1000;
    std::uint64_t seed = 1;
    UpdateRule update_rule = UpdateRule::PerAnt;
    TauMinSchedule tau_min_schedule = TauMinSchedule::Static;
};

struct SquareMatrix {
    std::uint32_t n = 0;
    std::vector<double> v;

    static SquareMatrix filled(std::uint32_t n, double value) {
        return SquareMatrix{n, std::vector<double>(static_cast<std::size_t>(n) * n, value)};
    }
    double at(std::uint32_t i, std::uint32_t j) const { return v[static_cast<std::size_t>(i) * n + j]; }
    double& at(std::uint32_t i, std::uint32_t j) { return v[static_cast<std::size_t>(i) * n + j]; }
};

// Pheromone matrix with its bounds. Every entry stays inside
// [tau_min, tau_max] after each evaporate/deposit cycle: evaporation clamps
// from below, deposits clamp from above. cost_floor substitutes for a plan
// cost of zero wherever 1/cost is needed, keeping full-coverage deposits
// finite while still larger than any partial-coverage deposit.
struct PheromoneState {
    SquareMatrix tau;
    double tau_max = 0;
    double tau_min = 0;
    double rho = 0;
    double cost_floor = 0;
};

// One ant mid-construction. memory holds the targets already visited by this
// ant's plan; targets that are unreachable with the remaining range are
// excluded per step by the candidate guard rather than stored.
struct AntState {
    std::uint32_t current = 0;
    double flight_range = 0;
    double route_length_so_far = 0; // distance flown by the active UAV
    std::uint32_t uavs_used = 0;
    std::vector<std::uint8_t> memory; // per-node visited flags
    std::uint32_t visited_count = 0;
    std::vector<Route> finished_routes;
    std::vector<std::uint32_t> active_route;

    double remaining_range() const { return flight_range - route_length_so_far; }
};

// All entries set to tau_max = 1 / (rho * max(c_init, cost_floor)), with
// cost_floor = 1 / (2 * (n - 1)). tau_min starts at tau_max; callers lower it
// via compute_tau_min before the first update.
PheromoneState init_pheromone(double rho, double c_init, std::uint32_t n);

// (1 - rho)^(iterations / 10) * tau_max: the floor equals tau_max decayed by
// a tenth of the configured iterations.
double compute_tau_min(double rho, std::uint32_t iterations, double tau_max);

// eta[i][j] = 1 / d[i][j], diagonal 0. Distinct nodes at distance zero get a
// finite cap of 2 / (smallest positive distance) so no infinity propagates.
SquareMatrix heuristic_matrix(const DistanceMatrix& dm);

// Element-wise eta^beta, precomputed once per run.
SquareMatrix heuristic_weights(const SquareMatrix& eta, double beta);

// Probability vector over all nodes for the ant's next move. Candidates are
// the targets outside the ant's memory that can be reached and still allow
// the return leg; each gets tau * eta^beta normalized over the candidate set,
// everything else gets 0. An all-zero vector means the UAV must head home.
std::vector<double> selection_probabilities(const AntState& ant, const PheromoneState& ps,
                                            const SquareMatrix& eta_pow, const DistanceMatrix& dm,
                                            std::uint32_t base);
void selection_probabilities_into(const AntState& ant, const PheromoneState& ps,
                                  const SquareMatrix& eta_pow, const DistanceMatrix& dm,
                                  std::uint32_t base, std::vector<double>& out);

// Roulette-wheel draw; nullopt iff every entry is zero (return to base).
std::optional<std::uint32_t> sample_next(std::span<const double> probs, Rng& rng);

// Builds one complete plan: per UAV, sample moves until nothing is reachable,
// close the route at the base, refresh the range, and continue until the
// fleet is exhausted.
RoutePlan construct_plan(const Instance& inst, const DistanceMatrix& dm, const ProblemConfig& cfg,
                         const PheromoneState& ps, const SquareMatrix& eta_pow, Rng& rng);

// tau *= (1 - rho) on every edge, clamped to at least tau_min.
void evaporate(PheromoneState& ps);

// Adds 1 / max(cost, cost_floor) to every edge the plan traverses (return
// legs included), symmetrically, clamped to at most tau_max.
void deposit(PheromoneState& ps, const RoutePlan& plan);

struct IterationStats {
    std::uint32_t iteration = 0; // 1-based
    double best_cost = 0;        // best-so-far, monotone nonincreasing
    double mean_cost = 0;        // mean over this iteration's ants
    double best_coverage = 0;
    double best_total_distance = 0;
};

struct MmasResult {
    RoutePlan best;
    std::vector<IterationStats> stats;
    double c_init = 0;
    double tau_max = 0;
    double tau_min = 0;
};

// Called after every evaporate/deposit cycle; used by instrumented runs to
// watch the pheromone bounds.
using PheromoneObserver = std::function<void(const PheromoneState&)>;

// Full solver run: greedy initial cost, pheromone setup, then
// iterations x num_ants constructions with updates per the configured rule.
// The best plan is the lowest-cost one, ties broken by lower total distance,
// then by earlier discovery. Fully determined by (inst, cfg, params).
MmasResult run_mmas(const Instance& inst, const DistanceMatrix& dm, const ProblemConfig& cfg,
                    const MmasParams& params, const PheromoneObserver& on_update = {});

// CSV with one row per iteration.
std::string serialize_stats_csv(std::span<const IterationStats> stats);

} // namespace maxcov
