#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

namespace ldpclab {

// Shared configuration for the named experiments. Fields that an experiment
// does not use are ignored by it but still echoed into config.json.
struct ExperimentConfig {
    std::string experiment;
    int d = 3;
    int k = 4;
    int n = 3000;
    std::vector<int> d_list; // growth-curve runs emit one file per d
    int r = 1;
    double eps = 0.05;
    double delta = 0.0; // 0 means experiment-specific default
    double eta = 0.0;
    int trials = 20;
    std::uint64_t seed = 1;
    int threads = 0; // 0 means hardware concurrency
    bool bits = false;
    std::string out_dir; // empty: $LDPCLAB_OUT or ./runs
    double pass_threshold = 0.0; // 0 means experiment default
    bool emit_graphs = false;    // write each trial's factor graph json
    std::string graph_file;      // analyze one serialized graph instead of sampling

    void validate() const;
    nlohmann::json to_json() const;
    static ExperimentConfig from_json(const nlohmann::json& j);
    std::string hash() const; // FNV-1a of the canonical json dump
};

struct ExperimentResult {
    nlohmann::json summary;
    bool thresholds_ok = true;
    std::string run_dir;
};

// Fans independent trials out over a thread pool; results are ordered by
// trial index and each trial draws from the stream (seed, trial), so the
// output never depends on scheduling.
std::vector<std::vector<double>> run_trials(
    int trials, int threads, std::uint64_t master_seed,
    const std::function<std::vector<double>(int trial, class RngStream& rng)>& body);

ExperimentResult run_entropy_value(const ExperimentConfig& cfg);
ExperimentResult run_growth_curve(const ExperimentConfig& cfg);
ExperimentResult run_shattering(const ExperimentConfig& cfg);
ExperimentResult run_proper_fraction(const ExperimentConfig& cfg);
ExperimentResult run_property_m(const ExperimentConfig& cfg);
ExperimentResult run_contiguity(const ExperimentConfig& cfg);
ExperimentResult run_expected_count(const ExperimentConfig& cfg);
ExperimentResult run_near_cancellation(const ExperimentConfig& cfg);

// Dispatch by config.experiment name.
ExperimentResult run_experiment(const ExperimentConfig& cfg);

} // namespace ldpclab
