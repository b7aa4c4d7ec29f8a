#include "canonlab/experiment.hpp"

#include "canonlab/decomposition.hpp"
#include "canonlab/errors.hpp"
#include "canonlab/pipeline.hpp"
#include "canonlab/random_models.hpp"
#include "canonlab/symmetry.hpp"
#include "canonlab/tree_canon.hpp"

#include "json.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

namespace canonlab {

namespace {

using clock_type = std::chrono::steady_clock;

double ms_since(clock_type::time_point t0) {
    return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

Graph sample_graph(const TrialConfig& cfg, std::uint64_t seed) {
    if (cfg.model == "gnp") return gnp(cfg.n, cfg.lambda / cfg.n, seed);
    return sample_contiguous(contiguous_params(cfg.n, cfg.lambda), seed).graph;
}

TrialRecord run_one(const TrialConfig& cfg, std::uint64_t seed) {
    TrialRecord r;
    r.seed = seed;
    r.n = cfg.n;
    r.lambda = cfg.lambda;
    r.regime = regime_tag(cfg.n, cfg.lambda);
    Graph g = sample_graph(cfg, seed);

    std::vector<int> complex_vertices;
    for (const ComponentClass& c : components(g))
        if (c.excess() >= 1)
            complex_vertices.insert(complex_vertices.end(), c.vertices.begin(),
                                    c.vertices.end());
    std::sort(complex_vertices.begin(), complex_vertices.end());
    r.complex_size = static_cast<int>(complex_vertices.size());

    if (r.complex_size > 0) {
        Graph h = induced_subgraph(g, complex_vertices);
        ComplexConditions cc = complex_part_conditions(h);
        r.core_size = cc.core_size;
        r.max_core_class = cc.max_core_class;
        r.duplex_count = cc.duplex_count;
        r.covered = cc.uncovered_duplex == 0;
        r.conditions_ok = cc.ok;
        r.a1 = cc.a1;
        r.a2 = cc.a2;
        r.a3 = cc.a3;
        CoreDecomposition d = two_core(h);
        r.kernel_size = kernel(d.core).kernel.n;
        SymmetryReport bare =
            detect_symmetries(d.core, std::vector<TreeCode>(d.core.n, TreeCode("()")));
        r.a1_bare = static_cast<int>(bare.a1.size());
        r.a2_bare = static_cast<int>(bare.a2.size());
        r.a3_bare = static_cast<int>(bare.a3.size());
        assert(2 * r.duplex_count <= r.core_size);
    }

    if (cfg.run_canon) {
        auto t0 = clock_type::now();
        CanonicalForm f = canon(g);
        r.wall_ms = ms_since(t0);
        r.canon_status = to_string(f.status);
        if (cfg.check_canonical) {
            std::vector<int> perm(g.n);
            std::iota(perm.begin(), perm.end(), 0);
            std::mt19937_64 eng(seed ^ 0x9e3779b97f4a7c15ULL);
            std::shuffle(perm.begin(), perm.end(), eng);
            CanonicalForm f2 = canon(apply_permutation(g, perm));
            r.canonical_ok = f.status == f2.status &&
                             (f.status == Status::not_canonizable ||
                              f.certificate == f2.certificate);
        }
    }
    return r;
}

double median(std::vector<double> v) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    std::size_t k = v.size();
    return (v[(k - 1) / 2] + v[k / 2]) / 2.0;
}

std::string format_double(double x) {
    std::ostringstream s;
    s << x;
    return s.str();
}

}  // namespace

std::string regime_tag(int n, double lambda) {
    double delta = lambda - 1.0;
    if (std::abs(delta) * std::cbrt(static_cast<double>(n)) <= 3.0)
        return "critical-window";
    if (delta < 0.0) return "subcritical";
    if (delta >= 0.2) return "strictly-supercritical";
    return "near-critical";
}

std::vector<TrialRecord> run_trials(const TrialConfig& config) {
    if (config.trials <= 0) return {};
    if (config.model != "gnp" && config.model != "contiguous")
        throw GraphError("unknown model: " + config.model);
    if (config.n <= 0) throw GraphError("trial n must be positive");
    if (config.model == "contiguous") contiguous_params(config.n, config.lambda);

    std::vector<TrialRecord> records(config.trials);
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (int i; (i = next.fetch_add(1)) < config.trials;) {
            try {
                records[i] = run_one(config, config.seed0 + static_cast<std::uint64_t>(i));
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    unsigned workers = std::min<unsigned>(hw, static_cast<unsigned>(config.trials));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
    worker();
    for (std::thread& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
    return records;
}

std::map<std::string, double> summarize(const std::vector<TrialRecord>& records) {
    std::map<std::string, double> s;
    double n = static_cast<double>(records.size());
    auto rate = [&](auto pred) {
        if (records.empty()) return 0.0;
        int hits = 0;
        for (const TrialRecord& r : records) hits += pred(r) ? 1 : 0;
        return hits / n;
    };
    auto med = [&](auto field) {
        std::vector<double> v;
        for (const TrialRecord& r : records) v.push_back(field(r));
        return median(std::move(v));
    };
    s["trials"] = n;
    s["complex_nonempty_rate"] = rate([](const TrialRecord& r) { return r.complex_size > 0; });
    s["complex_size_median"] = med([](const TrialRecord& r) { return r.complex_size; });
    s["core_size_median"] = med([](const TrialRecord& r) { return r.core_size; });
    s["kernel_size_median"] = med([](const TrialRecord& r) { return r.kernel_size; });
    s["duplex_median"] = med([](const TrialRecord& r) { return r.duplex_count; });
    s["max_class_le2_rate"] = rate([](const TrialRecord& r) { return r.max_core_class <= 2; });
    s["covered_rate"] = rate([](const TrialRecord& r) { return r.covered; });
    s["conditions_ok_rate"] = rate([](const TrialRecord& r) { return r.conditions_ok; });
    s["a1_typed_rate"] = rate([](const TrialRecord& r) { return r.a1 > 0; });
    s["a2_typed_rate"] = rate([](const TrialRecord& r) { return r.a2 > 0; });
    s["a3_typed_rate"] = rate([](const TrialRecord& r) { return r.a3 > 0; });
    s["a1_bare_rate"] = rate([](const TrialRecord& r) { return r.a1_bare > 0; });
    s["a2_bare_rate"] = rate([](const TrialRecord& r) { return r.a2_bare > 0; });
    s["a3_bare_rate"] = rate([](const TrialRecord& r) { return r.a3_bare > 0; });

    std::vector<double> walls;
    int ran = 0, ok = 0, checked = 0, canonical = 0;
    for (const TrialRecord& r : records) {
        if (r.canon_status.empty()) continue;
        ++ran;
        walls.push_back(r.wall_ms);
        if (r.canon_status != "not_canonizable") ++ok;
        ++checked;
        canonical += r.canonical_ok ? 1 : 0;
    }
    s["canon_success_rate"] = ran ? static_cast<double>(ok) / ran : 0.0;
    s["canonical_ok_rate"] = checked ? static_cast<double>(canonical) / checked : 0.0;
    s["wall_ms_median"] = median(std::move(walls));
    return s;
}

std::vector<std::string> check_thresholds(const std::map<std::string, double>& summary,
                                          const std::vector<Threshold>& thresholds,
                                          const std::string& label) {
    std::vector<std::string> out;
    std::string prefix = label.empty() ? std::string() : label + ": ";
    for (const Threshold& t : thresholds) {
        auto it = summary.find(t.metric);
        if (it == summary.end()) {
            out.push_back(prefix + "unknown metric '" + t.metric + "'");
            continue;
        }
        if (it->second < t.min_value || it->second > t.max_value)
            out.push_back(prefix + t.metric + "=" + format_double(it->second) +
                          " outside [" + format_double(t.min_value) + ", " +
                          format_double(t.max_value) + "]");
    }
    return out;
}

ExperimentConfig parse_experiment_config(std::istream& in) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const std::exception& e) {
        throw ParseError(0, e.what());
    }
    ExperimentConfig cfg;
    try {
        const nlohmann::json& runs = doc.is_array() ? doc : doc.at("runs");
        for (const nlohmann::json& j : runs) {
            TrialConfig t;
            t.model = j.at("model").get<std::string>();
            t.n = j.at("n").get<int>();
            t.lambda = j.at("lambda").get<double>();
            t.trials = j.at("trials").get<int>();
            t.seed0 = j.at("seed0").get<std::uint64_t>();
            t.run_canon = j.value("run_canon", true);
            t.check_canonical = j.value("check_canonical", false);
            cfg.runs.push_back(std::move(t));
        }
        if (doc.is_object() && doc.contains("thresholds")) {
            for (const nlohmann::json& j : doc.at("thresholds")) {
                Threshold t;
                t.metric = j.at("metric").get<std::string>();
                t.min_value = j.value("min", -1e300);
                t.max_value = j.value("max", 1e300);
                cfg.thresholds.push_back(std::move(t));
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, e.what());
    }
    return cfg;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
    ExperimentResult result;
    for (std::size_t i = 0; i < config.runs.size(); ++i) {
        result.records.push_back(run_trials(config.runs[i]));
        result.summaries.push_back(summarize(result.records.back()));
        std::string label = "run " + std::to_string(i) + " (" + config.runs[i].model +
                            " n=" + std::to_string(config.runs[i].n) +
                            " lambda=" + format_double(config.runs[i].lambda) + ")";
        auto bad = check_thresholds(result.summaries.back(), config.thresholds, label);
        result.violations.insert(result.violations.end(), bad.begin(), bad.end());
    }
    return result;
}

namespace {

nlohmann::json record_json(const TrialRecord& r) {
    return {{"seed", r.seed},
            {"n", r.n},
            {"lambda", r.lambda},
            {"regime", r.regime},
            {"complex_size", r.complex_size},
            {"core_size", r.core_size},
            {"kernel_size", r.kernel_size},
            {"duplex_count", r.duplex_count},
            {"max_core_class", r.max_core_class},
            {"a1", r.a1},
            {"a2", r.a2},
            {"a3", r.a3},
            {"a1_bare", r.a1_bare},
            {"a2_bare", r.a2_bare},
            {"a3_bare", r.a3_bare},
            {"covered", r.covered},
            {"conditions_ok", r.conditions_ok},
            {"canon_status", r.canon_status},
            {"canonical_ok", r.canonical_ok},
            {"wall_ms", r.wall_ms}};
}

}  // namespace

void write_stats_json(const ExperimentConfig& config, const ExperimentResult& result,
                      std::ostream& out) {
    nlohmann::json runs = nlohmann::json::array();
    for (std::size_t i = 0; i < config.runs.size(); ++i) {
        const TrialConfig& c = config.runs[i];
        nlohmann::json records = nlohmann::json::array();
        for (const TrialRecord& r : result.records[i]) records.push_back(record_json(r));
        runs.push_back({{"config",
                         {{"model", c.model},
                          {"n", c.n},
                          {"lambda", c.lambda},
                          {"trials", c.trials},
                          {"seed0", c.seed0},
                          {"run_canon", c.run_canon},
                          {"check_canonical", c.check_canonical}}},
                        {"summary", result.summaries[i]},
                        {"records", std::move(records)}});
    }
    nlohmann::json doc = {{"runs", std::move(runs)}, {"violations", result.violations}};
    out << doc.dump(2) << '\n';
}

void write_stats_csv(const ExperimentConfig& config, const ExperimentResult& result,
                     std::ostream& out) {
    out << "run,model,seed,n,lambda,regime,complex_size,core_size,kernel_size,"
           "duplex_count,max_core_class,a1,a2,a3,a1_bare,a2_bare,a3_bare,covered,"
           "conditions_ok,canon_status,canonical_ok,wall_ms\n";
    for (std::size_t i = 0; i < result.records.size(); ++i)
        for (const TrialRecord& r : result.records[i])
            out << i << ',' << config.runs[i].model << ',' << r.seed << ',' << r.n << ','
                << r.lambda << ',' << r.regime << ',' << r.complex_size << ','
                << r.core_size << ',' << r.kernel_size << ',' << r.duplex_count << ','
                << r.max_core_class << ',' << r.a1 << ',' << r.a2 << ',' << r.a3 << ','
                << r.a1_bare << ',' << r.a2_bare << ',' << r.a3_bare << ','
                << int(r.covered) << ',' << int(r.conditions_ok) << ',' << r.canon_status
                << ',' << int(r.canonical_ok) << ',' << r.wall_ms << '\n';
}

ScalingTable scaling_probe(double lambda, const std::vector<int>& sizes, int trials,
                           std::uint64_t seed0) {
    if (sizes.empty()) throw GraphError("scaling_probe needs at least one size");
    for (std::size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] <= sizes[i - 1])
            throw GraphError("scaling_probe sizes must be strictly increasing");
    ScalingTable table;
    table.sizes = sizes;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        int n = sizes[i];
        std::vector<double> walls;
        for (int t = 0; t < std::max(1, trials); ++t) {
            Graph g = gnp(n, lambda / n, seed0 + 1000 * i + static_cast<std::uint64_t>(t));
            auto t0 = clock_type::now();
            canon(g);
            walls.push_back(ms_since(t0));
        }
        table.median_ms.push_back(median(std::move(walls)));
    }
    for (std::size_t i = 1; i < table.median_ms.size(); ++i)
        table.ratios.push_back(table.median_ms[i] / std::max(1e-9, table.median_ms[i - 1]));
    return table;
}

}  // namespace canonlab
