#include <doctest.h>

#include <cmath>

#include "maxcov/model.hpp"
#include "maxcov/nn.hpp"
#include "oracle.hpp"

using namespace maxcov;

namespace {

Instance fixture3() {
    Instance inst;
    inst.name = "fixture3";
    inst.coords = {{0, 0}, {3, 4}, {6, 8}};
    return inst;
}

} // namespace

TEST_CASE("route_length basics") {
    Instance inst = fixture3();
    DistanceMatrix dm = build_distance_matrix(inst);

    std::vector<std::uint32_t> single{0};
    CHECK(route_length(single, dm) == 0.0);

    std::vector<std::uint32_t> out_and_back{0, 1, 0};
    CHECK(route_length(out_and_back, dm) == 10.0);

    std::vector<std::uint32_t> bad{0, 7};
    CHECK_THROWS_AS(route_length(bad, dm), std::out_of_range);
}

TEST_CASE("route_length equals naive pairwise summation on random paths") {
    Rng rng(31);
    for (int round = 0; round < 50; ++round) {
        Instance inst = testing::random_instance(rng, 6, 12);
        DistanceMatrix dm = build_distance_matrix(inst);
        std::vector<std::uint32_t> path;
        for (int k = 0; k < 6; ++k) {
            path.push_back(static_cast<std::uint32_t>(rng.uniform_int(0, dm.n - 1)));
        }
        double naive = 0;
        for (std::size_t k = 0; k + 1 < path.size(); ++k) naive += dm.at(path[k], path[k + 1]);
        CHECK(route_length(path, dm) == doctest::Approx(naive).epsilon(1e-12));
    }
}

TEST_CASE("plan_cost endpoints and arithmetic") {
    CHECK(plan_cost(149, 149) == 0.0);
    CHECK(plan_cost(0, 149) == 1.0);
    CHECK(plan_cost(75, 149) == doctest::Approx(1.0 - 75.0 / 149.0).epsilon(1e-15));
    CHECK_THROWS_AS(plan_cost(0, 0), std::domain_error);
    CHECK_THROWS_AS(plan_cost(5, 4), std::domain_error);
}

TEST_CASE("target_coverage and its relation to plan_cost") {
    CHECK(target_coverage(149, 149) == 100.0);
    CHECK(target_coverage(134, 149) == doctest::Approx(89.93).epsilon(1e-4));
    CHECK_THROWS_AS(target_coverage(1, 0), std::domain_error);

    for (std::uint64_t total : {1ULL, 7ULL, 149ULL, 1000ULL}) {
        for (std::uint64_t v = 0; v <= total; v += std::max<std::uint64_t>(1, total / 13)) {
            CHECK(target_coverage(v, total) / 100.0 + plan_cost(v, total) ==
                  doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("plan_cost is monotone nonincreasing in visited count") {
    double prev = 2.0;
    for (std::uint64_t v = 0; v <= 57; ++v) {
        double c = plan_cost(v, 57);
        CHECK(c <= prev);
        prev = c;
    }
}

TEST_CASE("validate_plan flags a range violation") {
    Instance inst = fixture3();
    DistanceMatrix dm = build_distance_matrix(inst);

    RoutePlan plan = finalize_plan({Route{{0, 1, 0}, 10.0}}, inst.num_targets());
    ProblemConfig tight{10.0 - 1e-6, 1};

    auto report = validate_plan(plan, inst, dm, tight);
    REQUIRE_FALSE(report.ok());
    CHECK(report.violations.front().find("range exceeded") != std::string::npos);

    // exactly at the boundary (and within the epsilon band) is fine
    ProblemConfig exact_fit{10.0, 1};
    CHECK(validate_plan(plan, inst, dm, exact_fit).ok());
}

TEST_CASE("validate_plan flags duplicate targets across routes") {
    Instance inst = fixture3();
    DistanceMatrix dm = build_distance_matrix(inst);
    ProblemConfig cfg{100.0, 2};

    std::vector<Route> routes;
    routes.push_back(Route{{0, 1, 0}, 10.0});
    routes.push_back(Route{{0, 1, 0}, 10.0});
    RoutePlan plan = finalize_plan(std::move(routes), inst.num_targets());
    plan.visited = {1}; // what a correct plan would claim

    auto report = validate_plan(plan, inst, dm, cfg);
    REQUIRE_FALSE(report.ok());
    bool found = false;
    for (const auto& v : report.violations) {
        if (v.find("duplicate target") != std::string::npos) found = true;
    }
    CHECK(found);
}

TEST_CASE("validate_plan flags fleet, base, and bookkeeping violations") {
    Instance inst = fixture3();
    DistanceMatrix dm = build_distance_matrix(inst);
    ProblemConfig cfg{100.0, 1};

    SUBCASE("too many routes") {
        RoutePlan plan =
            finalize_plan({Route{{0, 1, 0}, 10.0}, Route{{0, 2, 0}, 20.0}}, inst.num_targets());
        CHECK_FALSE(validate_plan(plan, inst, dm, cfg).ok());
    }
    SUBCASE("route not anchored at base") {
        RoutePlan plan = finalize_plan({Route{{1, 2, 1}, 10.0}}, inst.num_targets());
        CHECK_FALSE(validate_plan(plan, inst, dm, cfg).ok());
    }
    SUBCASE("stored length lies") {
        RoutePlan plan = finalize_plan({Route{{0, 1, 0}, 3.0}}, inst.num_targets());
        CHECK_FALSE(validate_plan(plan, inst, dm, cfg).ok());
    }
    SUBCASE("cost field lies") {
        RoutePlan plan = finalize_plan({Route{{0, 1, 0}, 10.0}}, inst.num_targets());
        plan.cost = 0.0;
        CHECK_FALSE(validate_plan(plan, inst, dm, cfg).ok());
    }
}

TEST_CASE("validator agrees with an independently written checker") {
    Rng rng(424242);
    int checked = 0;
    for (int round = 0; round < 1000; ++round) {
        Instance inst = testing::random_instance(rng, 4, 12);
        DistanceMatrix dm = build_distance_matrix(inst);
        double cd = critical_distance(dm, 0);
        ProblemConfig cfg{cd * (0.5 + rng.uniform01() * 2.0),
                          static_cast<std::uint32_t>(rng.uniform_int(1, 3))};

        RoutePlan plan = nn_construct(inst, dm, cfg);

        // half the time, corrupt the plan somehow
        switch (rng.uniform_int(0, 5)) {
        case 0:
            if (!plan.routes.empty()) plan.routes[0].length += 1.0;
            break;
        case 1:
            if (!plan.visited.empty()) plan.visited.pop_back();
            break;
        case 2:
            plan.cost = plan.cost - 0.25;
            break;
        case 3:
            if (!plan.routes.empty() && plan.routes[0].nodes.size() > 2) {
                plan.routes[0].nodes.back() = plan.routes[0].nodes[1];
            }
            break;
        default:
            break; // leave it valid
        }

        bool ours = validate_plan(plan, inst, dm, cfg).ok();
        bool theirs = testing::naive_plan_ok(plan, inst, dm, cfg);
        CHECK(ours == theirs);
        ++checked;
    }
    CHECK(checked == 1000);
}

TEST_CASE("plan serialization shape") {
    Instance inst = fixture3();
    RoutePlan plan = finalize_plan({Route{{0, 1, 2, 0}, 20.0}, Route{{0, 0}, 0.0}},
                                   inst.num_targets());
    std::string text = serialize_plan(plan, inst.num_targets());
    CHECK(text == "cost=0 coverage=100 distance=20 routes=2\n0 1 2 0\n0 0\n");
}
