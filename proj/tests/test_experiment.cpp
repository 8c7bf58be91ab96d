#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "maxcov/experiment.hpp"
#include "maxcov/plot.hpp"
#include "oracle.hpp"

using namespace maxcov;
namespace fs = std::filesystem;

namespace {

// Writes a small instance to a temp file and cleans it up afterwards.
struct TempInstance {
    fs::path path;

    explicit TempInstance(const Instance& inst) {
        path = fs::temp_directory_path() /
               ("maxcov_test_" + std::to_string(::getpid()) + "_" + inst.name + ".tsp");
        std::ofstream out(path);
        out << write_tsplib(inst);
    }
    ~TempInstance() {
        std::error_code ec;
        fs::remove(path, ec);
    }
};

Instance small_instance() {
    Instance inst;
    inst.name = "small9";
    inst.coords = {{0, 0}, {4, 1}, {7, 3}, {2, 6}, {8, 8}, {1, 9}, {9, 1}, {5, 5}, {3, 2}};
    return inst;
}

std::string sweep_spec_json(const fs::path& instance) {
    return std::string("{") + "\"instance\": \"" + instance.string() +
           "\", \"fr_mode\": \"cd\", \"uav_counts\": [1, 2], "
           "\"algorithms\": [\"nn\", \"mmas\"], \"runs_per_cell\": 3, "
           "\"mmas\": {\"ants\": 5, \"iterations\": 20}, \"seed\": 99}";
}

} // namespace

TEST_CASE("resolve_flight_range maps every mode") {
    CHECK(resolve_flight_range(FrMode::CD, 10.0) == 10.0);
    CHECK(resolve_flight_range(FrMode::CD_HALF, 10.0) == 5.0);
    CHECK(resolve_flight_range(FrMode::CD_DOUBLE, 10.0) == 20.0);
    CHECK(resolve_flight_range(FrMode::ABSOLUTE, 10.0, 7.5) == 7.5);
    CHECK_THROWS_AS(resolve_flight_range(FrMode::ABSOLUTE, 10.0, 0.0), ConfigError);
    CHECK_THROWS_AS(resolve_flight_range(FrMode::ABSOLUTE, 10.0, -3.0), ConfigError);
}

TEST_CASE("experiment spec parses with defaults") {
    ExperimentSpec spec = parse_experiment_spec(
        "{\"instance\": \"foo.tsp\", \"uav_counts\": [1, 3, 5]}");
    CHECK(spec.instance_path == "foo.tsp");
    CHECK(spec.metric == Metric::Euc2dExact);
    CHECK(spec.fr_mode == FrMode::CD);
    CHECK(spec.runs_per_cell == 10);
    CHECK(spec.algorithms.size() == 2);
    CHECK(spec.mmas.num_ants == 151);
    CHECK(spec.mmas.iterations == 1000);
    CHECK(spec.mmas.beta == 7.0);
    CHECK(spec.mmas.rho == 0.01);
}

TEST_CASE("experiment spec rejects bad input") {
    CHECK_THROWS_AS(parse_experiment_spec("not json"), ConfigError);
    CHECK_THROWS_AS(parse_experiment_spec("{\"uav_counts\": [1]}"), ConfigError); // no instance
    CHECK_THROWS_AS(parse_experiment_spec("{\"instance\": \"a\", \"uav_counts\": []}"),
                    ConfigError);
    CHECK_THROWS_AS(parse_experiment_spec("{\"instance\": \"a\", \"uav_counts\": [3, 2]}"),
                    ConfigError); // not increasing
    CHECK_THROWS_AS(parse_experiment_spec("{\"instance\": \"a\", \"uav_counts\": [1], "
                                          "\"algorithms\": []}"),
                    ConfigError);
    CHECK_THROWS_AS(parse_experiment_spec("{\"instance\": \"a\", \"uav_counts\": [1], "
                                          "\"runs_per_cell\": 0}"),
                    ConfigError);
    CHECK_THROWS_AS(parse_experiment_spec("{\"instance\": \"a\", \"uav_counts\": [1], "
                                          "\"oops\": 1}"),
                    ConfigError); // unknown key
    CHECK_THROWS_AS(parse_experiment_spec("{\"instance\": \"a\", \"uav_counts\": [1], "
                                          "\"fr_mode\": \"absolute\"}"),
                    ConfigError); // absolute without a positive value
    CHECK_THROWS_AS(parse_experiment_spec("{\"instance\": \"a\", \"uav_counts\": [1], "
                                          "\"mmas\": {\"rho\": 1.5}}"),
                    ConfigError);
}

TEST_CASE("run_sweep: nn cells repeat the same coverage; reruns are identical") {
    TempInstance tmp(small_instance());
    ExperimentSpec spec = parse_experiment_spec(sweep_spec_json(tmp.path));

    auto records = run_sweep(spec);
    REQUIRE(records.size() == 4); // 2 algorithms x 2 uav counts

    for (const auto& rec : records) {
        CHECK(rec.per_run_tc.size() == spec.runs_per_cell);
        CHECK(rec.runs == spec.runs_per_cell);
        if (rec.algorithm == Algorithm::NN) {
            for (double tc : rec.per_run_tc) CHECK(tc == rec.per_run_tc.front());
        }
    }

    // deterministic reproduction, byte for byte
    auto again = run_sweep(spec);
    CHECK(emit_report(records, ReportFormat::CSV) == emit_report(again, ReportFormat::CSV));
    CHECK(emit_report(records, ReportFormat::JSON) == emit_report(again, ReportFormat::JSON));
}

TEST_CASE("run_sweep: a single run equals its own mean") {
    TempInstance tmp(small_instance());
    ExperimentSpec spec = parse_experiment_spec(sweep_spec_json(tmp.path));
    spec.runs_per_cell = 1;
    spec.algorithms = {Algorithm::MMAS};
    spec.uav_counts = {2};

    auto records = run_sweep(spec);
    REQUIRE(records.size() == 1);
    REQUIRE(records[0].per_run_tc.size() == 1);
    CHECK(records[0].mean_tc == records[0].per_run_tc[0]);
}

TEST_CASE("emit_report: csv golden row and parse-back round trip") {
    ResultRecord rec;
    rec.algorithm = Algorithm::NN;
    rec.uav_count = 3;
    rec.fr = 12.5;
    rec.mean_tc = 45.25;
    rec.mean_distance = 101.5;
    rec.runs = 10;
    rec.seed = 42;

    std::vector<ResultRecord> records{rec};
    std::string csv = emit_report(records, ReportFormat::CSV);
    CHECK(csv ==
          "algorithm,uavs,fr,mean_tc,mean_distance,runs,seed\n"
          "nn,3,12.5,45.25,101.5,10,42\n");

    auto back = parse_report_csv(csv);
    REQUIRE(back.size() == 1);
    CHECK(back[0].algorithm == rec.algorithm);
    CHECK(back[0].uav_count == rec.uav_count);
    CHECK(back[0].fr == rec.fr);
    CHECK(back[0].mean_tc == rec.mean_tc);
    CHECK(back[0].mean_distance == rec.mean_distance);
    CHECK(back[0].runs == rec.runs);
    CHECK(back[0].seed == rec.seed);
}

TEST_CASE("emit_report csv round-trips full-precision doubles") {
    ResultRecord rec;
    rec.algorithm = Algorithm::MMAS;
    rec.uav_count = 7;
    rec.fr = 123.456789012345678;
    rec.mean_tc = 100.0 * 134.0 / 149.0;
    rec.mean_distance = 1.0 / 3.0;
    rec.runs = 10;
    rec.seed = 31337;

    auto back = parse_report_csv(emit_report(std::vector<ResultRecord>{rec}, ReportFormat::CSV));
    REQUIRE(back.size() == 1);
    CHECK(back[0].fr == rec.fr);
    CHECK(back[0].mean_tc == rec.mean_tc);
    CHECK(back[0].mean_distance == rec.mean_distance);
}

TEST_CASE("emit_report: table pivots to one row per uav count") {
    std::vector<ResultRecord> records;
    for (auto [alg, uavs, tc] : {std::tuple{Algorithm::NN, 1u, 22.0},
                                 std::tuple{Algorithm::NN, 3u, 45.0},
                                 std::tuple{Algorithm::MMAS, 1u, 28.0},
                                 std::tuple{Algorithm::MMAS, 3u, 63.0}}) {
        ResultRecord rec;
        rec.algorithm = alg;
        rec.uav_count = uavs;
        rec.fr = 10.0;
        rec.mean_tc = tc;
        rec.runs = 10;
        rec.seed = 1;
        records.push_back(rec);
    }

    std::string table = emit_report(records, ReportFormat::TABLE);
    CHECK(table.find("UAV") != std::string::npos);
    CHECK(table.find("TC_NN") != std::string::npos);
    CHECK(table.find("TC_MMAS") != std::string::npos);
    CHECK(table.find("63.0%") != std::string::npos);

    // one data row per distinct uav count
    std::istringstream lines(table);
    std::string line;
    int data_rows = 0;
    while (std::getline(lines, line)) {
        if (!line.empty() && line.find('%') != std::string::npos) ++data_rows;
    }
    CHECK(data_rows == 2);
}

TEST_CASE("emit_report: json mirrors the csv fields") {
    ResultRecord rec;
    rec.algorithm = Algorithm::MMAS;
    rec.uav_count = 5;
    rec.fr = 20.0;
    rec.mean_tc = 85.5;
    rec.mean_distance = 77.0;
    rec.runs = 10;
    rec.seed = 7;

    auto parsed = nlohmann::json::parse(emit_report(std::vector<ResultRecord>{rec},
                                                    ReportFormat::JSON));
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 1);
    CHECK(parsed[0]["algorithm"] == "mmas");
    CHECK(parsed[0]["uavs"] == 5);
    CHECK(parsed[0]["fr"] == 20.0);
    CHECK(parsed[0]["mean_tc"] == 85.5);
    CHECK(parsed[0]["runs"] == 10);
    CHECK(parsed[0]["seed"] == 7);
}

TEST_CASE("route plot: empty plan has points but no polylines") {
    Instance inst = small_instance();
    RoutePlan plan = finalize_plan({Route{{0, 0}, 0.0}}, inst.num_targets());
    std::string svg = emit_route_plot(inst, plan);
    CHECK(svg.find("<polyline") == std::string::npos);
    CHECK(svg.find("<circle") != std::string::npos);
}

TEST_CASE("route plot: one 3-target route gives one polyline with 5 vertices") {
    Instance inst = small_instance();
    DistanceMatrix dm = build_distance_matrix(inst);
    std::vector<std::uint32_t> nodes{0, 1, 2, 3, 0};
    RoutePlan plan = finalize_plan({Route{nodes, route_length(nodes, dm)}}, inst.num_targets());

    std::string svg = emit_route_plot(inst, plan);
    auto first = svg.find("<polyline");
    REQUIRE(first != std::string::npos);
    CHECK(svg.find("<polyline", first + 1) == std::string::npos);

    auto points_at = svg.find("points=\"", first);
    REQUIRE(points_at != std::string::npos);
    auto end = svg.find('"', points_at + 8);
    std::string points = svg.substr(points_at + 8, end - points_at - 8);
    CHECK(std::count(points.begin(), points.end(), ',') == 5);
}

TEST_CASE("route plot vertices invert back to instance coordinates") {
    Instance inst = small_instance();
    DistanceMatrix dm = build_distance_matrix(inst);
    std::vector<std::uint32_t> nodes{0, 4, 5, 0};
    RoutePlan plan = finalize_plan({Route{nodes, route_length(nodes, dm)}}, inst.num_targets());

    std::string svg = emit_route_plot(inst, plan);
    auto points_at = svg.find("points=\"");
    REQUIRE(points_at != std::string::npos);
    auto end = svg.find('"', points_at + 8);
    std::istringstream points(svg.substr(points_at + 8, end - points_at - 8));

    CanvasMap map = make_canvas_map(inst);
    std::string pair;
    std::size_t k = 0;
    double span = 10.0; // coordinate extent of small_instance
    while (points >> pair) {
        auto comma = pair.find(',');
        REQUIRE(comma != std::string::npos);
        Point canvas{std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1))};
        Point inverted = map.to_instance(canvas);
        REQUIRE(k < nodes.size());
        Point expected = inst.coords[nodes[k]];
        CHECK(std::abs(inverted.x - expected.x) <= 0.001 * span);
        CHECK(std::abs(inverted.y - expected.y) <= 0.001 * span);
        ++k;
    }
    CHECK(k == nodes.size());
}

TEST_CASE("seed mixing is a pure function with distinct outputs") {
    CHECK(mix_seed(1, 2, 3, 4) == mix_seed(1, 2, 3, 4));
    CHECK(mix_seed(1, 2, 3, 4) != mix_seed(1, 2, 3, 5));
    CHECK(mix_seed(1, 2, 3, 4) != mix_seed(1, 2, 4, 4));
    CHECK(mix_seed(1, 2, 3, 4) != mix_seed(1, 1, 3, 4));
    CHECK(mix_seed(1, 2, 3, 4) != mix_seed(2, 2, 3, 4));
}
