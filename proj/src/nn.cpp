#include "maxcov/nn.hpp"

#include <limits>

namespace maxcov {

RoutePlan nn_construct(const Instance& inst, const DistanceMatrix& dm, const ProblemConfig& cfg,
                       TieRule tie) {
    (void)tie; // LowestIndex is the only rule; the scan below keeps the first minimum.
    const std::uint32_t n = inst.num_nodes();
    const std::uint32_t base = inst.base_index;
    constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

    std::vector<std::uint8_t> visited(n, 0);
    std::vector<Route> routes;
    routes.reserve(cfg.num_uavs);

    for (std::uint32_t uav = 0; uav < cfg.num_uavs; ++uav) {
        std::vector<std::uint32_t> nodes{base};
        double length = 0;
        std::uint32_t current = base;

        for (;;) {
            std::uint32_t next = kNone;
            double next_dist = std::numeric_limits<double>::infinity();
            for (std::uint32_t j = 0; j < n; ++j) {
                if (j == base || visited[j]) continue;
                double move = dm.at(current, j);
                // The move is only allowed if the return leg stays feasible.
                if ((length + move) + dm.at(j, base) > cfg.flight_range + kRangeEps) continue;
                if (move < next_dist) {
                    next_dist = move;
                    next = j;
                }
            }
            if (next == kNone) break;
            nodes.push_back(next);
            length += dm.at(current, next);
            visited[next] = 1;
            current = next;
        }

        length += dm.at(current, base);
        nodes.push_back(base);
        routes.push_back(Route{std::move(nodes), length});
    }

    return finalize_plan(std::move(routes), inst.num_targets());
}

double initial_cost(const Instance& inst, const DistanceMatrix& dm, const ProblemConfig& cfg) {
    return nn_construct(inst, dm, cfg).cost;
}

} // namespace maxcov
