#include "maxcov/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "maxcov/format.hpp"
#include "maxcov/nn.hpp"
#include "maxcov/rng.hpp"

namespace maxcov {

namespace {

using json = nlohmann::ordered_json;

std::uint64_t algorithm_id(Algorithm a) {
    return a == Algorithm::NN ? 1 : 2;
}

Algorithm algorithm_from_name(const std::string& name) {
    if (name == "nn") return Algorithm::NN;
    if (name == "mmas") return Algorithm::MMAS;
    throw ConfigError("unknown algorithm \"" + name + "\" (expected \"nn\" or \"mmas\")");
}

FrMode fr_mode_from_name(const std::string& name) {
    if (name == "cd") return FrMode::CD;
    if (name == "cd-half") return FrMode::CD_HALF;
    if (name == "cd-double") return FrMode::CD_DOUBLE;
    if (name == "absolute") return FrMode::ABSOLUTE;
    throw ConfigError("unknown fr_mode \"" + name + "\"");
}

Metric metric_from_name(const std::string& name) {
    if (name == "exact") return Metric::Euc2dExact;
    if (name == "rounded") return Metric::Euc2dRounded;
    throw ConfigError("unknown metric \"" + name + "\" (expected \"exact\" or \"rounded\")");
}

void check_known_keys(const json& obj, std::initializer_list<const char*> keys,
                      const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (std::find_if(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; }) ==
            keys.end()) {
            throw ConfigError("unknown key \"" + it.key() + "\" in " + where);
        }
    }
}

double mean_of(const std::vector<double>& values) {
    double sum = 0;
    for (double v : values) sum += v;
    return values.empty() ? 0.0 : sum / static_cast<double>(values.size());
}

} // namespace

const char* algorithm_name(Algorithm a) {
    return a == Algorithm::NN ? "nn" : "mmas";
}

ExperimentSpec parse_experiment_spec(const std::string& json_text) {
    json root;
    try {
        root = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("invalid JSON in experiment spec: ") + e.what());
    }
    if (!root.is_object()) throw ConfigError("experiment spec must be a JSON object");

    check_known_keys(root,
                     {"instance", "metric", "base_index", "fr_mode", "fr_value", "uav_counts",
                      "algorithms", "runs_per_cell", "mmas", "seed"},
                     "experiment spec");

    ExperimentSpec spec;
    try {
        spec.instance_path = root.at("instance").get<std::string>();
        if (root.contains("metric")) spec.metric = metric_from_name(root["metric"]);
        if (root.contains("base_index")) spec.base_index = root["base_index"].get<std::uint32_t>();
        if (root.contains("fr_mode")) spec.fr_mode = fr_mode_from_name(root["fr_mode"]);
        if (root.contains("fr_value")) spec.fr_value = root["fr_value"].get<double>();
        for (const auto& u : root.at("uav_counts")) {
            spec.uav_counts.push_back(u.get<std::uint32_t>());
        }
        if (root.contains("algorithms")) {
            spec.algorithms.clear();
            for (const auto& a : root["algorithms"]) {
                spec.algorithms.push_back(algorithm_from_name(a.get<std::string>()));
            }
        } else {
            spec.algorithms = {Algorithm::NN, Algorithm::MMAS};
        }
        if (root.contains("runs_per_cell")) {
            spec.runs_per_cell = root["runs_per_cell"].get<std::uint32_t>();
        }
        if (root.contains("seed")) spec.base_seed = root["seed"].get<std::uint64_t>();
        if (root.contains("mmas")) {
            const json& m = root["mmas"];
            // per-run seeds come from the top-level seed, so none is accepted here
            check_known_keys(
                m, {"beta", "rho", "ants", "iterations", "update_rule", "tau_min_schedule"},
                "mmas parameters");
            if (m.contains("beta")) spec.mmas.beta = m["beta"].get<double>();
            if (m.contains("rho")) spec.mmas.rho = m["rho"].get<double>();
            if (m.contains("ants")) spec.mmas.num_ants = m["ants"].get<std::uint32_t>();
            if (m.contains("iterations")) spec.mmas.iterations = m["iterations"].get<std::uint32_t>();
            if (m.contains("update_rule")) {
                const std::string rule = m["update_rule"].get<std::string>();
                if (rule == "per-ant") {
                    spec.mmas.update_rule = UpdateRule::PerAnt;
                } else if (rule == "iteration-best") {
                    spec.mmas.update_rule = UpdateRule::IterationBest;
                } else {
                    throw ConfigError("unknown update_rule \"" + rule + "\"");
                }
            }
            if (m.contains("tau_min_schedule")) {
                const std::string sched = m["tau_min_schedule"].get<std::string>();
                if (sched == "static") {
                    spec.mmas.tau_min_schedule = TauMinSchedule::Static;
                } else if (sched == "dynamic") {
                    spec.mmas.tau_min_schedule = TauMinSchedule::Dynamic;
                } else {
                    throw ConfigError("unknown tau_min_schedule \"" + sched + "\"");
                }
            }
        }
    } catch (const json::exception& e) {
        throw ConfigError(std::string("invalid experiment spec: ") + e.what());
    }

    validate_spec(spec);
    return spec;
}

ExperimentSpec load_experiment_spec(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open experiment spec: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_experiment_spec(buf.str());
}

void validate_spec(const ExperimentSpec& spec) {
    if (spec.instance_path.empty()) throw ConfigError("experiment spec needs an instance path");
    if (spec.uav_counts.empty()) throw ConfigError("uav_counts must be nonempty");
    for (std::size_t k = 0; k < spec.uav_counts.size(); ++k) {
        if (spec.uav_counts[k] == 0) throw ConfigError("uav_counts entries must be positive");
        if (k > 0 && spec.uav_counts[k] <= spec.uav_counts[k - 1]) {
            throw ConfigError("uav_counts must be strictly increasing");
        }
    }
    if (spec.algorithms.empty()) throw ConfigError("algorithms must be nonempty");
    if (spec.runs_per_cell < 1) throw ConfigError("runs_per_cell must be at least 1");
    if (spec.fr_mode == FrMode::ABSOLUTE && !(spec.fr_value > 0)) {
        throw ConfigError("absolute flight range must be positive");
    }
    if (!(spec.mmas.rho > 0 && spec.mmas.rho < 1)) throw ConfigError("rho must be in (0,1)");
    if (spec.mmas.beta < 0) throw ConfigError("beta must be >= 0");
    if (spec.mmas.num_ants < 1) throw ConfigError("ants must be at least 1");
    if (spec.mmas.iterations < 1) throw ConfigError("iterations must be at least 1");
}

double resolve_flight_range(FrMode mode, double cd, double absolute_value) {
    switch (mode) {
    case FrMode::CD:
        return cd;
    case FrMode::CD_HALF:
        return cd / 2.0;
    case FrMode::CD_DOUBLE:
        return 2.0 * cd;
    case FrMode::ABSOLUTE:
        if (!(absolute_value > 0)) {
            throw ConfigError("absolute flight range must be positive");
        }
        return absolute_value;
    }
    throw ConfigError("unhandled flight-range mode");
}

std::vector<ResultRecord> run_sweep(const ExperimentSpec& spec, std::ostream* log) {
    validate_spec(spec);

    Instance inst = parse_tsplib_file(spec.instance_path);
    inst.metric = spec.metric;
    if (spec.base_index) {
        if (*spec.base_index >= inst.num_nodes()) {
            throw ConfigError("base index " + std::to_string(*spec.base_index) +
                              " out of range for " + std::to_string(inst.num_nodes()) + " nodes");
        }
        inst.base_index = *spec.base_index;
    }

    const DistanceMatrix dm = build_distance_matrix(inst);
    const double cd = critical_distance(dm, inst.base_index);
    const double fr = resolve_flight_range(spec.fr_mode, cd, spec.fr_value);
    const std::uint32_t total_targets = inst.num_targets();

    std::vector<ResultRecord> records;
    records.reserve(spec.algorithms.size() * spec.uav_counts.size());

    for (Algorithm alg : spec.algorithms) {
        for (std::uint32_t uavs : spec.uav_counts) {
            ProblemConfig cfg{fr, uavs};
            ResultRecord rec;
            rec.algorithm = alg;
            rec.uav_count = uavs;
            rec.fr = fr;
            rec.runs = spec.runs_per_cell;
            rec.seed = spec.base_seed;

            std::vector<double> distances;
            for (std::uint32_t run = 0; run < spec.runs_per_cell; ++run) {
                const auto start = std::chrono::steady_clock::now();
                RoutePlan plan;
                if (alg == Algorithm::NN) {
                    plan = nn_construct(inst, dm, cfg);
                } else {
                    MmasParams params = spec.mmas;
                    params.seed = mix_seed(spec.base_seed, algorithm_id(alg), uavs, run);
                    plan = run_mmas(inst, dm, cfg, params).best;
                }
                const auto elapsed = std::chrono::duration<double, std::milli>(
                                         std::chrono::steady_clock::now() - start)
                                         .count();

                auto report = validate_plan(plan, inst, dm, cfg);
                if (!report.ok()) {
                    throw std::runtime_error("solver produced an invalid plan (" +
                                             std::string(algorithm_name(alg)) + ", " +
                                             std::to_string(uavs) + " UAVs, run " +
                                             std::to_string(run) + "): " + report.violations.front());
                }

                double tc = target_coverage(plan.visited.size(), total_targets);
                rec.per_run_tc.push_back(tc);
                rec.wall_ms.push_back(elapsed);
                distances.push_back(plan.total_distance);

                if (log) {
                    *log << algorithm_name(alg) << " uavs=" << uavs << " run=" << (run + 1) << "/"
                         << spec.runs_per_cell << " tc=" << tc << "% (" << elapsed << " ms)\n";
                }
            }

            rec.mean_tc = mean_of(rec.per_run_tc);
            rec.mean_distance = mean_of(distances);
            records.push_back(std::move(rec));
        }
    }

    return records;
}

std::string emit_report(std::span<const ResultRecord> records, ReportFormat format) {
    if (format == ReportFormat::CSV) {
        std::string out = "algorithm,uavs,fr,mean_tc,mean_distance,runs,seed\n";
        for (const auto& r : records) {
            out += std::string(algorithm_name(r.algorithm)) + ',' + std::to_string(r.uav_count) +
                   ',' + double_to_string(r.fr) + ',' + double_to_string(r.mean_tc) + ',' +
                   double_to_string(r.mean_distance) + ',' + std::to_string(r.runs) + ',' +
                   std::to_string(r.seed) + '\n';
        }
        return out;
    }

    if (format == ReportFormat::JSON) {
        json arr = json::array();
        for (const auto& r : records) {
            json row;
            row["algorithm"] = algorithm_name(r.algorithm);
            row["uavs"] = r.uav_count;
            row["fr"] = r.fr;
            row["mean_tc"] = r.mean_tc;
            row["mean_distance"] = r.mean_distance;
            row["runs"] = r.runs;
            row["seed"] = r.seed;
            arr.push_back(std::move(row));
        }
        return arr.dump(2) + "\n";
    }

    // TABLE: one row per UAV count, one TC column per algorithm.
    std::vector<Algorithm> algs;
    std::vector<std::uint32_t> uav_counts;
    for (const auto& r : records) {
        if (std::find(algs.begin(), algs.end(), r.algorithm) == algs.end()) {
            algs.push_back(r.algorithm);
        }
        if (std::find(uav_counts.begin(), uav_counts.end(), r.uav_count) == uav_counts.end()) {
            uav_counts.push_back(r.uav_count);
        }
    }
    std::sort(uav_counts.begin(), uav_counts.end());

    auto cell = [&](Algorithm a, std::uint32_t u) -> std::string {
        for (const auto& r : records) {
            if (r.algorithm == a && r.uav_count == u) {
                char buf[32];
                std::snprintf(buf, sizeof buf, "%.1f%%", r.mean_tc);
                return buf;
            }
        }
        return "-";
    };

    std::ostringstream out;
    if (!records.empty()) {
        out << "FR = " << double_to_string(records[0].fr) << "  runs/cell = " << records[0].runs
            << "  seed = " << records[0].seed << "\n\n";
    }
    out << "  UAV";
    for (Algorithm a : algs) {
        std::string header = std::string("TC_") + (a == Algorithm::NN ? "NN" : "MMAS");
        out << "  " << std::setw(8) << header;
    }
    out << '\n';
    for (std::uint32_t u : uav_counts) {
        out << std::setw(5) << u;
        for (Algorithm a : algs) {
            out << "  " << std::setw(8) << cell(a, u);
        }
        out << '\n';
    }
    return out.str();
}

std::vector<ResultRecord> parse_report_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "algorithm,uavs,fr,mean_tc,mean_distance,runs,seed") {
        throw ConfigError("unrecognized report CSV header");
    }
    std::vector<ResultRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::string field;
        std::istringstream fs(line);
        while (std::getline(fs, field, ',')) fields.push_back(field);
        if (fields.size() != 7) throw ConfigError("malformed report CSV row: " + line);
        ResultRecord r;
        r.algorithm = algorithm_from_name(fields[0]);
        r.uav_count = static_cast<std::uint32_t>(std::stoul(fields[1]));
        r.fr = std::stod(fields[2]);
        r.mean_tc = std::stod(fields[3]);
        r.mean_distance = std::stod(fields[4]);
        r.runs = static_cast<std::uint32_t>(std::stoul(fields[5]));
        r.seed = std::stoull(fields[6]);
        records.push_back(std::move(r));
    }
    return records;
}

} // namespace maxcov
