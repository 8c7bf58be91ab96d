#include <algorithm>
#include <fstream>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "maxcov/experiment.hpp"
#include "maxcov/format.hpp"
#include "maxcov/mmas.hpp"
#include "maxcov/model.hpp"
#include "maxcov/nn.hpp"
#include "maxcov/plot.hpp"
#include "maxcov/tsplib.hpp"

namespace {

using namespace maxcov;

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
    if (!out) throw std::runtime_error("failed writing output file: " + path);
}

struct SolveOptions {
    std::string instance_path;
    std::string metric = "exact";
    std::uint32_t base = 0;
    bool base_set = false;
    std::string algorithm;
    std::string fr_mode;
    double fr_value = 0;
    std::uint32_t uavs = 1;
    MmasParams mmas;
    std::string update_rule = "per-ant";
    std::string tau_min_schedule = "static";
    std::string out_path;
    std::string plot_path;
    std::string stats_path;
};

Instance load_instance(const std::string& path, const std::string& metric_name,
                       const std::uint32_t* base, bool base_set) {
    Instance inst = parse_tsplib_file(path);
    inst.metric = metric_name == "rounded" ? Metric::Euc2dRounded : Metric::Euc2dExact;
    if (base_set) {
        if (*base >= inst.num_nodes()) {
            throw ConfigError("base index " + std::to_string(*base) + " out of range for " +
                              std::to_string(inst.num_nodes()) + " nodes");
        }
        inst.base_index = *base;
    }
    return inst;
}

int run_solve(const SolveOptions& opt) {
    Instance inst = load_instance(opt.instance_path, opt.metric, &opt.base, opt.base_set);
    DistanceMatrix dm = build_distance_matrix(inst);
    double cd = critical_distance(dm, inst.base_index);

    FrMode mode;
    if (opt.fr_mode == "cd") {
        mode = FrMode::CD;
    } else if (opt.fr_mode == "cd-half") {
        mode = FrMode::CD_HALF;
    } else if (opt.fr_mode == "cd-double") {
        mode = FrMode::CD_DOUBLE;
    } else {
        mode = FrMode::ABSOLUTE;
    }
    double fr = resolve_flight_range(mode, cd, opt.fr_value);
    ProblemConfig cfg{fr, opt.uavs};

    RoutePlan plan;
    MmasResult mmas_result;
    if (opt.algorithm == "nn") {
        if (!opt.stats_path.empty()) {
            throw ConfigError("--stats requires --algorithm mmas");
        }
        plan = nn_construct(inst, dm, cfg);
    } else {
        MmasParams params = opt.mmas;
        params.update_rule =
            opt.update_rule == "iteration-best" ? UpdateRule::IterationBest : UpdateRule::PerAnt;
        params.tau_min_schedule =
            opt.tau_min_schedule == "dynamic" ? TauMinSchedule::Dynamic : TauMinSchedule::Static;
        mmas_result = run_mmas(inst, dm, cfg, params);
        plan = mmas_result.best;
    }

    auto report = validate_plan(plan, inst, dm, cfg);
    if (!report.ok()) {
        throw std::runtime_error("solver produced an invalid plan: " + report.violations.front());
    }

    const std::uint32_t total = inst.num_targets();
    std::cout << "instance=" << inst.name << " n=" << inst.num_nodes() << " targets=" << total
              << "\n";
    std::cout << "base=" << inst.base_index << " cd=" << double_to_string(cd)
              << " fr=" << double_to_string(fr) << " uavs=" << opt.uavs << "\n";
    std::cout << "algorithm=" << opt.algorithm
              << " coverage=" << double_to_string(target_coverage(plan.visited.size(), total))
              << "% visited=" << plan.visited.size() << "/" << total
              << " cost=" << double_to_string(plan.cost)
              << " distance=" << double_to_string(plan.total_distance) << "\n";

    if (!opt.out_path.empty()) write_file(opt.out_path, serialize_plan(plan, total));
    if (!opt.plot_path.empty()) write_file(opt.plot_path, emit_route_plot(inst, plan));
    if (!opt.stats_path.empty()) write_file(opt.stats_path, serialize_stats_csv(mmas_result.stats));
    return 0;
}

int run_sweep_cmd(const std::string& spec_path, const std::string& out_path,
                  const std::string& format_name, bool quiet) {
    ExperimentSpec spec = load_experiment_spec(spec_path);
    ReportFormat format = ReportFormat::CSV;
    if (format_name == "json") format = ReportFormat::JSON;
    if (format_name == "table") format = ReportFormat::TABLE;

    auto records = run_sweep(spec, quiet ? nullptr : &std::cerr);
    std::string report = emit_report(records, format);
    if (out_path.empty()) {
        std::cout << report;
    } else {
        write_file(out_path, report);
    }
    return 0;
}

int run_info(const std::string& instance_path, const std::string& metric_name) {
    Instance inst = load_instance(instance_path, metric_name, nullptr, false);
    DistanceMatrix dm = build_distance_matrix(inst);
    double cd = critical_distance(dm, inst.base_index);

    double min_d = 0, max_d = 0, sum_d = 0;
    bool first = true;
    std::size_t pairs = 0;
    for (std::uint32_t i = 0; i < dm.n; ++i) {
        for (std::uint32_t j = i + 1; j < dm.n; ++j) {
            double d = dm.at(i, j);
            if (first) {
                min_d = max_d = d;
                first = false;
            }
            min_d = std::min(min_d, d);
            max_d = std::max(max_d, d);
            sum_d += d;
            ++pairs;
        }
    }

    std::cout << "name=" << inst.name << "\n";
    std::cout << "nodes=" << inst.num_nodes() << " targets=" << inst.num_targets()
              << " base=" << inst.base_index << "\n";
    std::cout << "critical_distance=" << double_to_string(cd) << "\n";
    std::cout << "pairwise_min=" << double_to_string(min_d)
              << " pairwise_mean=" << double_to_string(sum_d / static_cast<double>(pairs))
              << " pairwise_max=" << double_to_string(max_d) << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"maxcov: route planning for a range-limited UAV fleet"};
    app.require_subcommand(1);

    SolveOptions solve_opt;
    CLI::App* solve = app.add_subcommand("solve", "Plan routes for one configuration");
    solve->add_option("--instance", solve_opt.instance_path, "TSPLIB instance file")->required();
    solve->add_option("--metric", solve_opt.metric, "Distance metric")
        ->check(CLI::IsMember({"exact", "rounded"}));
    solve->add_option("--base", solve_opt.base, "Base node index (default: node 0)")
        ->each([&solve_opt](const std::string&) { solve_opt.base_set = true; });
    solve->add_option("--algorithm", solve_opt.algorithm, "Solver")
        ->required()
        ->check(CLI::IsMember({"nn", "mmas"}));
    solve->add_option("--fr-mode", solve_opt.fr_mode, "Flight-range mode")
        ->required()
        ->check(CLI::IsMember({"cd", "cd-half", "cd-double", "absolute"}));
    solve->add_option("--fr", solve_opt.fr_value, "Flight range for --fr-mode absolute");
    solve->add_option("--uavs", solve_opt.uavs, "Fleet size")->required();
    solve->add_option("--ants", solve_opt.mmas.num_ants, "Ant count");
    solve->add_option("--iters", solve_opt.mmas.iterations, "Iteration budget");
    solve->add_option("--beta", solve_opt.mmas.beta, "Heuristic exponent");
    solve->add_option("--rho", solve_opt.mmas.rho, "Evaporation rate");
    solve->add_option("--update-rule", solve_opt.update_rule, "Pheromone update rule")
        ->check(CLI::IsMember({"per-ant", "iteration-best"}));
    solve->add_option("--tau-min-schedule", solve_opt.tau_min_schedule, "tau_min schedule")
        ->check(CLI::IsMember({"static", "dynamic"}));
    solve->add_option("--seed", solve_opt.mmas.seed, "RNG seed");
    solve->add_option("--out", solve_opt.out_path, "Write the plan to this file");
    solve->add_option("--plot", solve_opt.plot_path, "Write an SVG of the plan");
    solve->add_option("--stats", solve_opt.stats_path, "Write per-iteration CSV (mmas only)");

    std::string sweep_spec, sweep_out, sweep_format = "csv";
    bool sweep_quiet = false;
    CLI::App* sweep = app.add_subcommand("sweep", "Run an experiment sweep from a JSON spec");
    sweep->add_option("--spec", sweep_spec, "Experiment spec (JSON)")->required();
    sweep->add_option("--out", sweep_out, "Output file (default: stdout)");
    sweep->add_option("--format", sweep_format, "Report format")
        ->check(CLI::IsMember({"csv", "json", "table"}));
    sweep->add_flag("--quiet", sweep_quiet, "Suppress progress output on stderr");

    std::string info_instance, info_metric = "exact";
    CLI::App* info = app.add_subcommand("info", "Print instance facts");
    info->add_option("--instance", info_instance, "TSPLIB instance file")->required();
    info->add_option("--metric", info_metric, "Distance metric")
        ->check(CLI::IsMember({"exact", "rounded"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (solve->parsed()) return run_solve(solve_opt);
        if (sweep->parsed()) return run_sweep_cmd(sweep_spec, sweep_out, sweep_format, sweep_quiet);
        if (info->parsed()) return run_info(info_instance, info_metric);
        return 1;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
