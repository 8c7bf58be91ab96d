#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "maxcov/mmas.hpp"
#include "maxcov/model.hpp"
#include "maxcov/tsplib.hpp"

namespace maxcov {

enum class Algorithm { NN, MMAS };

// Flight range expressed relative to the critical distance (the base's
// farthest target), or as an absolute value.
enum class FrMode { CD, CD_HALF, CD_DOUBLE, ABSOLUTE };

class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(const std::string& message) : std::runtime_error(message) {}
};

struct ExperimentSpec {
    std::filesystem::path instance_path;
    Metric metric = Metric::Euc2dExact;
    std::optional<std::uint32_t> base_index; // default: node 0
    FrMode fr_mode = FrMode::CD;
    double fr_value = 0; // only read when fr_mode == ABSOLUTE
    std::vector<std::uint32_t> uav_counts;   // nonempty, strictly increasing
    std::vector<Algorithm> algorithms;       // nonempty subset of {NN, MMAS}
    std::uint32_t runs_per_cell = 10;
    MmasParams mmas;
    std::uint64_t base_seed = 1;
};

// JSON spec format, e.g.:
//   {
//     "instance": "data/ch150.tsp",
//     "metric": "exact",
//     "fr_mode": "cd",
//     "uav_counts": [1, 3, 5],
//     "algorithms": ["nn", "mmas"],
//     "runs_per_cell": 10,
//     "mmas": {"beta": 7, "rho": 0.01, "ants": 151, "iterations": 1000},
//     "seed": 42
//   }
// Unknown keys are rejected. Throws ConfigError on any invalid field.
ExperimentSpec parse_experiment_spec(const std::string& json_text);
ExperimentSpec load_experiment_spec(const std::filesystem::path& path);

void validate_spec(const ExperimentSpec& spec);

// CD -> cd, CD_HALF -> cd/2, CD_DOUBLE -> 2*cd, ABSOLUTE -> absolute_value.
// Throws ConfigError for a nonpositive absolute value.
double resolve_flight_range(FrMode mode, double cd, double absolute_value = 0);

struct ResultRecord {
    Algorithm algorithm = Algorithm::NN;
    std::uint32_t uav_count = 0;
    double fr = 0;
    std::vector<double> per_run_tc;
    double mean_tc = 0;
    double mean_distance = 0;
    std::uint32_t runs = 0;
    std::uint64_t seed = 0;      // the sweep's base seed
    std::vector<double> wall_ms; // diagnostics only, never serialized
};

// Runs every (algorithm, uav_count) cell runs_per_cell times with seeds
// mix_seed(base, algorithm, uavs, run). Each plan is validated before its
// coverage is recorded; a violation aborts the sweep. Records come back
// ordered by (algorithm, uav_count, run index). Progress lines go to *log
// when given.
std::vector<ResultRecord> run_sweep(const ExperimentSpec& spec, std::ostream* log = nullptr);

enum class ReportFormat { CSV, JSON, TABLE };

// CSV columns: algorithm,uavs,fr,mean_tc,mean_distance,runs,seed. JSON
// mirrors the same fields; TABLE pivots to one row per UAV count with a
// TC column per algorithm.
std::string emit_report(std::span<const ResultRecord> records, ReportFormat format);

// Inverse of the CSV form (per-run lists are not part of the CSV).
std::vector<ResultRecord> parse_report_csv(const std::string& text);

const char* algorithm_name(Algorithm a);

} // namespace maxcov
