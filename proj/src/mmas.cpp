#include "maxcov/mmas.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include "maxcov/format.hpp"
#include "maxcov/nn.hpp"

namespace maxcov {

namespace {

double cost_floor_for(std::uint32_t num_nodes) {
    return 1.0 / (2.0 * static_cast<double>(num_nodes - 1));
}

// Lower cost wins; equal cost prefers the shorter plan. Equal on both keeps
// the incumbent (earlier discovery).
bool improves(const RoutePlan& candidate, const RoutePlan& incumbent) {
    if (candidate.cost != incumbent.cost) return candidate.cost < incumbent.cost;
    return candidate.total_distance < incumbent.total_distance;
}

#ifndef NDEBUG
void assert_bounds(const PheromoneState& ps) {
    for (double t : ps.tau.v) {
        assert(t >= ps.tau_min - 1e-12 && t <= ps.tau_max + 1e-12);
    }
}
#endif

} // namespace

PheromoneState init_pheromone(double rho, double c_init, std::uint32_t n) {
    if (!(rho > 0.0 && rho < 1.0)) {
        throw std::invalid_argument("init_pheromone: rho must be in (0,1)");
    }
    if (!(c_init >= 0.0 && c_init <= 1.0)) {
        throw std::invalid_argument("init_pheromone: c_init must be in [0,1]");
    }
    if (n < 2) {
        throw std::invalid_argument("init_pheromone: need at least 2 nodes");
    }
    PheromoneState ps;
    ps.rho = rho;
    ps.cost_floor = cost_floor_for(n);
    ps.tau_max = 1.0 / (rho * std::max(c_init, ps.cost_floor));
    ps.tau_min = ps.tau_max;
    ps.tau = SquareMatrix::filled(n, ps.tau_max);
    return ps;
}

double compute_tau_min(double rho, std::uint32_t iterations, double tau_max) {
    return std::pow(1.0 - rho, static_cast<double>(iterations) / 10.0) * tau_max;
}

SquareMatrix heuristic_matrix(const DistanceMatrix& dm) {
    const std::uint32_t n = dm.n;
    double min_positive = std::numeric_limits<double>::infinity();
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = i + 1; j < n; ++j) {
            double d = dm.at(i, j);
            if (d > 0 && d < min_positive) min_positive = d;
        }
    }
    // Cap for coincident nodes: twice as attractive as the closest real pair.
    double cap = std::isfinite(min_positive) ? 2.0 / min_positive : 1.0;

    SquareMatrix eta = SquareMatrix::filled(n, 0.0);
    for (std::uint32_t i = 0; i < n; ++i) {
        for (std::uint32_t j = 0; j < n; ++j) {
            if (i == j) continue;
            double d = dm.at(i, j);
            eta.at(i, j) = d > 0 ? 1.0 / d : cap;
        }
    }
    return eta;
}

SquareMatrix heuristic_weights(const SquareMatrix& eta, double beta) {
    SquareMatrix w = eta;
    for (auto& value : w.v) value = std::pow(value, beta);
    return w;
}

void selection_probabilities_into(const AntState& ant, const PheromoneState& ps,
                                  const SquareMatrix& eta_pow, const DistanceMatrix& dm,
                                  std::uint32_t base, std::vector<double>& out) {
    const std::uint32_t n = dm.n;
    out.assign(n, 0.0);
    const std::uint32_t current = ant.current;
    double total = 0;
    for (std::uint32_t j = 0; j < n; ++j) {
        if (j == base || ant.memory[j]) continue;
        double move = dm.at(current, j);
        if ((ant.route_length_so_far + move) + dm.at(j, base) >
            ant.flight_range + kRangeEps) {
            continue;
        }
        double product = ps.tau.at(current, j) * eta_pow.at(current, j);
        out[j] = product;
        total += product;
    }
    if (total > 0) {
        for (auto& p : out) p /= total;
    }
}

std::vector<double> selection_probabilities(const AntState& ant, const PheromoneState& ps,
                                            const SquareMatrix& eta_pow, const DistanceMatrix& dm,
                                            std::uint32_t base) {
    std::vector<double> probs;
    selection_probabilities_into(ant, ps, eta_pow, dm, base, probs);
    return probs;
}

std::optional<std::uint32_t> sample_next(std::span<const double> probs, Rng& rng) {
    double total = 0;
    for (double p : probs) total += p;
    if (!(total > 0)) return std::nullopt;

    double r = rng.uniform01() * total;
    double acc = 0;
    std::uint32_t last = 0;
    bool any = false;
    for (std::uint32_t j = 0; j < probs.size(); ++j) {
        if (probs[j] <= 0) continue;
        acc += probs[j];
        last = j;
        any = true;
        if (r < acc) return j;
    }
    // Rounding can leave r a hair past the running sum; take the last entry.
    return any ? std::optional<std::uint32_t>(last) : std::nullopt;
}

RoutePlan construct_plan(const Instance& inst, const DistanceMatrix& dm, const ProblemConfig& cfg,
                         const PheromoneState& ps, const SquareMatrix& eta_pow, Rng& rng) {
    const std::uint32_t n = inst.num_nodes();
    const std::uint32_t base = inst.base_index;

    AntState ant;
    ant.current = base;
    ant.flight_range = cfg.flight_range;
    ant.memory.assign(n, 0);
    ant.active_route.push_back(base);
    ant.finished_routes.reserve(cfg.num_uavs);

    std::vector<double> probs;
    while (ant.uavs_used < cfg.num_uavs) {
        selection_probabilities_into(ant, ps, eta_pow, dm, base, probs);
        auto next = sample_next(probs, rng);
        if (next) {
            ant.active_route.push_back(*next);
            ant.route_length_so_far += dm.at(ant.current, *next);
            ant.memory[*next] = 1;
            ++ant.visited_count;
            ant.current = *next;
        } else {
            double length = ant.route_length_so_far + dm.at(ant.current, base);
            ant.active_route.push_back(base);
            ant.finished_routes.push_back(Route{std::move(ant.active_route), length});
            ant.active_route = {base};
            ant.route_length_so_far = 0;
            ant.current = base;
            ++ant.uavs_used;
        }
    }

    return finalize_plan(std::move(ant.finished_routes), inst.num_targets());
}

void evaporate(PheromoneState& ps) {
    const double keep = 1.0 - ps.rho;
    const double lo = ps.tau_min;
    for (auto& t : ps.tau.v) {
        t = std::max(t * keep, lo);
    }
}

void deposit(PheromoneState& ps, const RoutePlan& plan) {
    const double gain = 1.0 / std::max(plan.cost, ps.cost_floor);
    const double hi = ps.tau_max;
    for (const auto& route : plan.routes) {
        for (std::size_t k = 0; k + 1 < route.nodes.size(); ++k) {
            std::uint32_t a = route.nodes[k];
            std::uint32_t b = route.nodes[k + 1];
            if (a == b) continue;
            double value = std::min(ps.tau.at(a, b) + gain, hi);
            ps.tau.at(a, b) = value;
            ps.tau.at(b, a) = value;
        }
    }
}

MmasResult run_mmas(const Instance& inst, const DistanceMatrix& dm, const ProblemConfig& cfg,
                    const MmasParams& params, const PheromoneObserver& on_update) {
    if (!(params.rho > 0.0 && params.rho < 1.0)) {
        throw std::invalid_argument("run_mmas: rho must be in (0,1)");
    }
    if (params.beta < 0) throw std::invalid_argument("run_mmas: beta must be >= 0");
    if (params.num_ants < 1) throw std::invalid_argument("run_mmas: need at least one ant");
    if (params.iterations < 1) throw std::invalid_argument("run_mmas: need at least one iteration");

    const std::uint32_t total_targets = inst.num_targets();

    const double c_init = initial_cost(inst, dm, cfg);
    PheromoneState ps = init_pheromone(params.rho, c_init, inst.num_nodes());
    ps.tau_min = compute_tau_min(params.rho, params.iterations, ps.tau_max);

    const SquareMatrix eta = heuristic_matrix(dm);
    const SquareMatrix eta_pow = heuristic_weights(eta, params.beta);
    Rng rng(params.seed);

    MmasResult result;
    result.c_init = c_init;
    result.tau_max = ps.tau_max;
    result.stats.reserve(params.iterations);

    bool have_best = false;

    for (std::uint32_t iter = 1; iter <= params.iterations; ++iter) {
        if (params.tau_min_schedule == TauMinSchedule::Dynamic) {
            ps.tau_min = compute_tau_min(params.rho, iter, ps.tau_max);
        }

        double cost_sum = 0;
        RoutePlan iteration_best;
        bool have_iteration_best = false;

        for (std::uint32_t a = 0; a < params.num_ants; ++a) {
            RoutePlan plan = construct_plan(inst, dm, cfg, ps, eta_pow, rng);
            cost_sum += plan.cost;

            if (params.update_rule == UpdateRule::PerAnt) {
                evaporate(ps);
                deposit(ps, plan);
                if (on_update) on_update(ps);
            } else if (!have_iteration_best || improves(plan, iteration_best)) {
                iteration_best = plan;
                have_iteration_best = true;
            }

            if (!have_best || improves(plan, result.best)) {
                result.best = std::move(plan);
                have_best = true;
            }
        }

        if (params.update_rule == UpdateRule::IterationBest) {
            evaporate(ps);
            deposit(ps, iteration_best);
            if (on_update) on_update(ps);
        }

#ifndef NDEBUG
        assert_bounds(ps);
#endif

        result.stats.push_back(IterationStats{
            iter,
            result.best.cost,
            cost_sum / static_cast<double>(params.num_ants),
            target_coverage(result.best.visited.size(), total_targets),
            result.best.total_distance,
        });
    }

    result.tau_min = ps.tau_min;
    return result;
}

std::string serialize_stats_csv(std::span<const IterationStats> stats) {
    std::string out = "iteration,best_cost,mean_cost,best_coverage,best_total_distance\n";
    for (const auto& s : stats) {
        out += std::to_string(s.iteration) + ',' + double_to_string(s.best_cost) + ',' +
               double_to_string(s.mean_cost) + ',' + double_to_string(s.best_coverage) + ',' +
               double_to_string(s.best_total_distance) + '\n';
    }
    return out;
}

} // namespace maxcov
