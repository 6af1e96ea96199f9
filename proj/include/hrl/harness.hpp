#pragma once

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace hrl::harness {

inline constexpr const char * version = "0.1.0";
inline constexpr int csv_schema = 1;

/// Kinds: mc-random (H^(k)(n,p) under r-colorings from `coloring`, lower
/// bound (1-α)n), mc-near-complete (same on near-complete graphs with ε
/// missing edges), component-extremal and cycle-extremal (upper bounds met
/// by the extremal colorings).
struct ExperimentConfig {
    std::string kind = "mc-random";
    std::size_t k = 3;
    std::vector<std::size_t> n{60};
    std::size_t r = 3;
    std::vector<double> p{0.3};
    double eps = 0;
    double alpha = 0.1;
    std::size_t trials = 10;
    std::uint64_t seed = 1;
    std::size_t shards = 1;
    /// random | localsearch
    std::string coloring = "random";
    std::size_t restarts = 10;
    std::string csv_out;
    std::string json_out;
};

/// Throws std::invalid_argument naming the offending field.
void validate(const ExperimentConfig & config);

nlohmann::json to_json(const ExperimentConfig & config);
ExperimentConfig config_from_json(const nlohmann::json & j);
ExperimentConfig read_config(const std::filesystem::path & path);

enum class Direction { lower, upper };

struct TrialRecord {
    std::string kind;
    std::size_t k = 0, n = 0, r = 0;
    double p = 0, eps = 0, alpha = 0;
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    double measured = 0;
    double threshold = 0;
    Direction direction = Direction::lower;
    bool pass = false;
    double wall_ms = 0;

    bool recompute_pass() const;
};

struct Summary {
    std::size_t trials = 0;
    std::size_t passed = 0;
    double pass_fraction = 0;
    /// min, 10%, 50%, 90%, max of the measured values
    std::vector<double> quantiles;
};

struct ExperimentResult {
    std::vector<TrialRecord> records;
    Summary summary;
};

/// Deterministic given the config: trial i of grid point g uses
/// derive_seed(seed, g * trials + i), whatever the shard count.
ExperimentResult run_experiment(const ExperimentConfig & config);

/// Wall-clock is left out so runs compare byte for byte.
std::string to_csv(const ExperimentResult & result);
nlohmann::json to_json(const ExperimentResult & result);

struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct SuiteReport {
    std::string name;
    std::vector<Check> checks;
    bool pass() const;
};

const std::vector<std::string> & suite_names();
/// Throws std::invalid_argument for an unknown name.
SuiteReport verify_suite(const std::string & name, std::size_t shards = 1);
nlohmann::json to_json(const SuiteReport & report);

} // namespace hrl::harness
