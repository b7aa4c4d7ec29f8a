#pragma once

#include "canonlab/graph.hpp"

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace canonlab {

// One batch of identically-distributed trials. Trial t uses seed0 + t, so
// a batch is reproducible from (model, n, lambda, seed0) alone.
struct TrialConfig {
    std::string model = "gnp";  // gnp | contiguous
    int n = 0;
    double lambda = 0.0;
    int trials = 0;
    std::uint64_t seed0 = 0;
    bool run_canon = true;
    // Re-canonize a seeded relabeling and compare certificates.
    bool check_canonical = false;
};

// Per-trial measurements. Generator counts are taken on the 2-core of the
// complex part twice: typed (attached-tree types must match, so each swap
// extends to the whole graph) and bare (types ignored). Fields after
// `regime` are zero / vacuously true when the complex part is empty.
struct TrialRecord {
    std::uint64_t seed = 0;
    int n = 0;
    double lambda = 0.0;
    std::string regime;
    int complex_size = 0;
    int core_size = 0;
    int kernel_size = 0;
    int duplex_count = 0;
    int max_core_class = 0;
    int a1 = 0, a2 = 0, a3 = 0;
    int a1_bare = 0, a2_bare = 0, a3_bare = 0;
    bool covered = true;        // every duplex class is an interchangeable pair
    bool conditions_ok = true;  // covered and max_core_class <= 2
    std::string canon_status;   // empty when canon was skipped
    bool canonical_ok = true;
    double wall_ms = 0.0;
};

// delta = lambda - 1 classifies G(n, lambda/n): inside the critical window
// when |delta| n^{1/3} <= 3, otherwise subcritical (delta < 0),
// strictly-supercritical (delta >= 0.2), or near-critical between.
std::string regime_tag(int n, double lambda);

// Runs config.trials independent trials (concurrently; records land in
// trial order, so aggregation is deterministic). GraphError on an unknown
// model or nonpositive n with trials > 0.
std::vector<TrialRecord> run_trials(const TrialConfig& config);

// Named aggregates: rates are over all records (an empty complex part
// passes vacuously), medians over all records except wall_ms_median and
// canon_success_rate, which cover only records where canon ran. Empty
// input yields the full key set with zeroes.
std::map<std::string, double> summarize(const std::vector<TrialRecord>& records);

// Bound on a summary metric; violated when the value falls outside
// [min_value, max_value] or the metric is missing.
struct Threshold {
    std::string metric;
    double min_value = -1e300;
    double max_value = 1e300;
};

std::vector<std::string> check_thresholds(const std::map<std::string, double>& summary,
                                          const std::vector<Threshold>& thresholds,
                                          const std::string& label = {});

struct ExperimentConfig {
    std::vector<TrialConfig> runs;
    std::vector<Threshold> thresholds;  // applied to every run's summary
};

// JSON: either a top-level array of run objects {model, n, lambda, trials,
// seed0, run_canon?, check_canonical?} or {"runs": [...], "thresholds":
// [{"metric", "min"?, "max"?}]}. ParseError on malformed input.
ExperimentConfig parse_experiment_config(std::istream& in);

struct ExperimentResult {
    std::vector<std::vector<TrialRecord>> records;  // parallel to config.runs
    std::vector<std::map<std::string, double>> summaries;
    std::vector<std::string> violations;
};

ExperimentResult run_experiment(const ExperimentConfig& config);

void write_stats_json(const ExperimentConfig& config, const ExperimentResult& result,
                      std::ostream& out);
// One row per trial, prefixed with its run index.
void write_stats_csv(const ExperimentConfig& config, const ExperimentResult& result,
                     std::ostream& out);

// Canonization wall times on G(n, lambda/n). For each size, `trials`
// timed runs; ratios[i] = median_ms[i+1] / median_ms[i]. GraphError unless
// sizes is nonempty and strictly increasing.
struct ScalingTable {
    std::vector<int> sizes;
    std::vector<double> median_ms;
    std::vector<double> ratios;
};

ScalingTable scaling_probe(double lambda, const std::vector<int>& sizes, int trials,
                           std::uint64_t seed0 = 1);

}  // namespace canonlab
