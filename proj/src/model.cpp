#include "maxcov/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "maxcov/format.hpp"

namespace maxcov {

double route_length(std::span<const std::uint32_t> nodes, const DistanceMatrix& dm) {
    double len = 0;
    for (std::size_t k = 0; k + 1 < nodes.size(); ++k) {
        if (nodes[k] >= dm.n || nodes[k + 1] >= dm.n) {
            throw std::out_of_range("route node index out of range");
        }
        len += dm.at(nodes[k], nodes[k + 1]);
    }
    return len;
}

double plan_cost(std::uint64_t visited_count, std::uint64_t total_targets) {
    if (total_targets == 0) {
        throw std::domain_error("plan_cost: total target count must be positive");
    }
    if (visited_count > total_targets) {
        throw std::domain_error("plan_cost: visited count exceeds total targets");
    }
    return 1.0 - static_cast<double>(visited_count) / static_cast<double>(total_targets);
}

double target_coverage(std::uint64_t visited_count, std::uint64_t total_targets) {
    if (total_targets == 0) {
        throw std::domain_error("target_coverage: total target count must be positive");
    }
    if (visited_count > total_targets) {
        throw std::domain_error("target_coverage: visited count exceeds total targets");
    }
    return 100.0 * static_cast<double>(visited_count) / static_cast<double>(total_targets);
}

RoutePlan finalize_plan(std::vector<Route> routes, std::uint32_t total_targets) {
    RoutePlan plan;
    plan.routes = std::move(routes);
    for (const auto& r : plan.routes) {
        for (std::size_t k = 1; k + 1 < r.nodes.size(); ++k) {
            plan.visited.push_back(r.nodes[k]);
        }
        plan.total_distance += r.length;
    }
    std::sort(plan.visited.begin(), plan.visited.end());
    plan.cost = plan_cost(plan.visited.size(), total_targets);
    return plan;
}

ValidationReport validate_plan(const RoutePlan& plan, const Instance& inst,
                               const DistanceMatrix& dm, const ProblemConfig& cfg) {
    ValidationReport report;
    auto fail = [&report](std::string msg) { report.violations.push_back(std::move(msg)); };

    const std::uint32_t n = inst.num_nodes();
    const std::uint32_t base = inst.base_index;
    if (dm.n != n) {
        fail("distance matrix size " + std::to_string(dm.n) + " does not match instance size " +
             std::to_string(n));
        return report;
    }

    if (plan.routes.size() > cfg.num_uavs) {
        fail("fleet size exceeded: " + std::to_string(plan.routes.size()) + " routes > " +
             std::to_string(cfg.num_uavs) + " UAVs");
    }

    std::vector<std::uint32_t> seen_targets;
    double distance_sum = 0;

    for (std::size_t ri = 0; ri < plan.routes.size(); ++ri) {
        const Route& r = plan.routes[ri];
        const std::string tag = "route " + std::to_string(ri) + ": ";

        if (r.nodes.empty()) {
            fail(tag + "empty node list");
            continue;
        }
        bool index_ok = true;
        for (auto node : r.nodes) {
            if (node >= n) {
                fail(tag + "node index " + std::to_string(node) + " out of range");
                index_ok = false;
            }
        }
        if (!index_ok) continue;

        if (r.nodes.front() != base || r.nodes.back() != base) {
            fail(tag + "does not start and end at base " + std::to_string(base));
        }
        for (std::size_t k = 1; k + 1 < r.nodes.size(); ++k) {
            std::uint32_t node = r.nodes[k];
            if (node == base) {
                fail(tag + "base appears inside the route");
            } else {
                seen_targets.push_back(node);
            }
        }

        double recomputed = route_length(r.nodes, dm);
        distance_sum += r.length;
        if (std::abs(recomputed - r.length) > kRangeEps * std::max(1.0, std::abs(recomputed))) {
            fail(tag + "stored length " + double_to_string(r.length) +
                 " does not match recomputed " + double_to_string(recomputed));
        }
        if (recomputed > cfg.flight_range + kRangeEps) {
            fail(tag + "range exceeded: length " + double_to_string(recomputed) +
                 " > flight range " + double_to_string(cfg.flight_range));
        }
    }

    std::sort(seen_targets.begin(), seen_targets.end());
    for (std::size_t k = 0; k + 1 < seen_targets.size(); ++k) {
        if (seen_targets[k] == seen_targets[k + 1]) {
            fail("duplicate target " + std::to_string(seen_targets[k]));
        }
    }

    if (seen_targets != plan.visited) {
        fail("visited set does not match route contents");
    }

    double expected_cost = plan_cost(std::min<std::uint64_t>(plan.visited.size(), inst.num_targets()),
                                     inst.num_targets());
    if (std::abs(plan.cost - expected_cost) > 1e-12) {
        fail("cost " + double_to_string(plan.cost) + " does not match visited count (expected " +
             double_to_string(expected_cost) + ")");
    }
    if (std::abs(plan.total_distance - distance_sum) >
        kRangeEps * std::max(1.0, std::abs(distance_sum))) {
        fail("total distance " + double_to_string(plan.total_distance) +
             " does not match route sum " + double_to_string(distance_sum));
    }

    return report;
}

std::string serialize_plan(const RoutePlan& plan, std::uint32_t total_targets) {
    std::string out = "cost=" + double_to_string(plan.cost) +
                      " coverage=" + double_to_string(target_coverage(
                                         std::min<std::uint64_t>(plan.visited.size(), total_targets),
                                         total_targets)) +
                      " distance=" + double_to_string(plan.total_distance) +
                      " routes=" + std::to_string(plan.routes.size()) + "\n";
    for (const auto& r : plan.routes) {
        for (std::size_t k = 0; k < r.nodes.size(); ++k) {
            if (k > 0) out += ' ';
            out += std::to_string(r.nodes[k]);
        }
        out += '\n';
    }
    return out;
}

} // namespace maxcov
