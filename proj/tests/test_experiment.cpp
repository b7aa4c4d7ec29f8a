#include "canonlab/experiment.hpp"

#include "canonlab/errors.hpp"
#include "doctest.h"

#include <cmath>
#include <sstream>

using namespace canonlab;

namespace {

bool same_but_time(const TrialRecord& a, const TrialRecord& b) {
    return a.seed == b.seed && a.n == b.n && a.lambda == b.lambda &&
           a.regime == b.regime && a.complex_size == b.complex_size &&
           a.core_size == b.core_size && a.kernel_size == b.kernel_size &&
           a.duplex_count == b.duplex_count && a.max_core_class == b.max_core_class &&
           a.a1 == b.a1 && a.a2 == b.a2 && a.a3 == b.a3 && a.a1_bare == b.a1_bare &&
           a.a2_bare == b.a2_bare && a.a3_bare == b.a3_bare && a.covered == b.covered &&
           a.conditions_ok == b.conditions_ok && a.canon_status == b.canon_status &&
           a.canonical_ok == b.canonical_ok;
}

}  // namespace

TEST_CASE("regime_tag classifies by delta and the critical window") {
    CHECK(regime_tag(100000, 1.5) == "strictly-supercritical");
    CHECK(regime_tag(100000, 1.0) == "critical-window");
    CHECK(regime_tag(100000, 1.05) == "critical-window");  // 0.05 * 46.4 = 2.3
    CHECK(regime_tag(100000, 1.1) == "near-critical");
    CHECK(regime_tag(100000, 0.9) == "subcritical");
    CHECK(regime_tag(100000, 0.95) == "critical-window");
    CHECK(regime_tag(1000, 1.17) == "critical-window");  // window widens at small n
}

TEST_CASE("run_trials: empty config and summary skeleton") {
    TrialConfig cfg;
    cfg.trials = 0;
    auto records = run_trials(cfg);
    CHECK(records.empty());
    auto s = summarize(records);
    CHECK(s.at("trials") == 0.0);
    CHECK(s.count("duplex_median") == 1);
    CHECK(s.count("covered_rate") == 1);
    CHECK(s.count("canon_success_rate") == 1);
    CHECK(s.count("wall_ms_median") == 1);

    TrialConfig bad;
    bad.model = "smallworld";
    bad.trials = 1;
    bad.n = 10;
    CHECK_THROWS_AS(run_trials(bad), GraphError);
}

TEST_CASE("subcritical trials have empty complex parts") {
    TrialConfig cfg;
    cfg.model = "gnp";
    cfg.n = 5000;
    cfg.lambda = 0.5;
    cfg.trials = 20;
    cfg.seed0 = 400;
    cfg.run_canon = false;
    auto records = run_trials(cfg);
    auto s = summarize(records);
    CHECK(s.at("complex_nonempty_rate") <= 0.1);
    for (const auto& r : records) CHECK(r.regime == "subcritical");
}

TEST_CASE("supercritical gnp trials: consistency, reproducibility, canon checks") {
    TrialConfig cfg;
    cfg.model = "gnp";
    cfg.n = 3000;
    cfg.lambda = 1.5;
    cfg.trials = 25;
    cfg.seed0 = 900;
    cfg.check_canonical = true;
    auto records = run_trials(cfg);
    REQUIRE(records.size() == 25);
    for (const auto& r : records) {
        CHECK(r.regime == "strictly-supercritical");
        CHECK(r.complex_size > 0);
        CHECK(r.core_size <= r.complex_size);
        CHECK(r.kernel_size <= r.core_size);
        CHECK(r.kernel_size > 0);
        CHECK(2 * r.duplex_count <= r.core_size);
        CHECK(!r.canon_status.empty());
        CHECK(r.canonical_ok);
    }
    auto s = summarize(records);
    CHECK(s.at("complex_nonempty_rate") == 1.0);
    CHECK(s.at("canonical_ok_rate") == 1.0);
    CHECK(s.at("canon_success_rate") >= 0.9);
    CHECK(s.at("wall_ms_median") > 0.0);

    auto again = run_trials(cfg);
    REQUIRE(again.size() == records.size());
    for (std::size_t i = 0; i < records.size(); ++i)
        CHECK(same_but_time(records[i], again[i]));
}

TEST_CASE("contiguous trials are entirely complex") {
    TrialConfig cfg;
    cfg.model = "contiguous";
    cfg.n = 3000;
    cfg.lambda = 1.5;
    cfg.trials = 10;
    cfg.seed0 = 50;
    cfg.run_canon = false;
    auto records = run_trials(cfg);
    for (const auto& r : records) {
        CHECK(r.complex_size > 0);
        CHECK(r.kernel_size > 0);
        CHECK(r.core_size >= r.kernel_size);
    }
    CHECK(summarize(records).at("complex_nonempty_rate") == 1.0);

    TrialConfig sub = cfg;
    sub.lambda = 0.9;
    CHECK_THROWS_AS(run_trials(sub), BadLambda);
}

TEST_CASE("gnp and contiguous duplex statistics live on the same scale") {
    TrialConfig cfg;
    cfg.n = 4000;
    cfg.lambda = 1.5;
    cfg.trials = 20;
    cfg.seed0 = 7000;
    cfg.run_canon = false;
    cfg.model = "gnp";
    auto sg = summarize(run_trials(cfg));
    cfg.model = "contiguous";
    auto sc = summarize(run_trials(cfg));
    CHECK(std::abs(sg.at("duplex_median") - sc.at("duplex_median")) <= 8.0);
    CHECK(sg.at("covered_rate") >= 0.5);
    CHECK(sc.at("covered_rate") >= 0.5);
}

TEST_CASE("check_thresholds flags out-of-range and unknown metrics") {
    std::map<std::string, double> s{{"covered_rate", 0.5}, {"duplex_median", 3.0}};
    CHECK(check_thresholds(s, {{"covered_rate", 0.4, 1.0}}).empty());
    auto low = check_thresholds(s, {{"covered_rate", 0.9, 1.0}}, "runA");
    REQUIRE(low.size() == 1);
    CHECK(low[0].find("runA") != std::string::npos);
    CHECK(low[0].find("covered_rate") != std::string::npos);
    auto high = check_thresholds(s, {{"duplex_median", -1e300, 2.0}});
    CHECK(high.size() == 1);
    auto missing = check_thresholds(s, {{"no_such_metric", 0.0, 1.0}});
    REQUIRE(missing.size() == 1);
    CHECK(missing[0].find("no_such_metric") != std::string::npos);
}

TEST_CASE("parse_experiment_config accepts both layouts") {
    std::istringstream arr(
        R"([{"model":"gnp","n":100,"lambda":1.2,"trials":3,"seed0":5}])");
    ExperimentConfig a = parse_experiment_config(arr);
    REQUIRE(a.runs.size() == 1);
    CHECK(a.runs[0].model == "gnp");
    CHECK(a.runs[0].n == 100);
    CHECK(a.runs[0].run_canon);
    CHECK(!a.runs[0].check_canonical);
    CHECK(a.thresholds.empty());

    std::istringstream obj(R"({
      "runs": [{"model":"contiguous","n":200,"lambda":1.5,"trials":2,"seed0":9,
                "run_canon":false,"check_canonical":false}],
      "thresholds": [{"metric":"covered_rate","min":0.5},
                     {"metric":"duplex_median","max":10}]
    })");
    ExperimentConfig b = parse_experiment_config(obj);
    REQUIRE(b.runs.size() == 1);
    CHECK(!b.runs[0].run_canon);
    REQUIRE(b.thresholds.size() == 2);
    CHECK(b.thresholds[0].min_value == 0.5);
    CHECK(b.thresholds[1].max_value == 10.0);

    std::istringstream bad("{nope");
    CHECK_THROWS_AS(parse_experiment_config(bad), ParseError);
    std::istringstream incomplete(R"([{"model":"gnp","n":100}])");
    CHECK_THROWS_AS(parse_experiment_config(incomplete), ParseError);
}

TEST_CASE("run_experiment wires thresholds into violations and stats files") {
    std::istringstream in(R"({
      "runs": [{"model":"gnp","n":150,"lambda":1.2,"trials":3,"seed0":5}],
      "thresholds": [{"metric":"complex_nonempty_rate","min":2.0}]
    })");
    ExperimentConfig cfg = parse_experiment_config(in);
    ExperimentResult res = run_experiment(cfg);
    REQUIRE(res.records.size() == 1);
    CHECK(res.records[0].size() == 3);
    REQUIRE(res.summaries.size() == 1);
    REQUIRE(res.violations.size() == 1);
    CHECK(res.violations[0].find("complex_nonempty_rate") != std::string::npos);

    std::ostringstream js;
    write_stats_json(cfg, res, js);
    std::string j = js.str();
    CHECK(j.find("\"violations\"") != std::string::npos);
    CHECK(j.find("\"summary\"") != std::string::npos);
    CHECK(j.find("\"duplex_median\"") != std::string::npos);

    std::ostringstream cs;
    write_stats_csv(cfg, res, cs);
    std::string csv = cs.str();
    CHECK(csv.rfind("run,model,seed", 0) == 0);
    int lines = 0;
    for (char ch : csv) lines += ch == '\n';
    CHECK(lines == 4);  // header + one row per trial
}

TEST_CASE("scaling_probe validates sizes and reports doubling ratios") {
    CHECK_THROWS_AS(scaling_probe(1.5, {}, 3), GraphError);
    CHECK_THROWS_AS(scaling_probe(1.5, {400, 400}, 3), GraphError);
    CHECK_THROWS_AS(scaling_probe(1.5, {800, 400}, 3), GraphError);
    ScalingTable one = scaling_probe(1.5, {500}, 2);
    CHECK(one.median_ms.size() == 1);
    CHECK(one.ratios.empty());
    ScalingTable two = scaling_probe(1.5, {500, 1000}, 3);
    REQUIRE(two.median_ms.size() == 2);
    CHECK(two.median_ms[0] > 0.0);
    CHECK(two.median_ms[1] > 0.0);
    REQUIRE(two.ratios.size() == 1);
    CHECK(two.ratios[0] > 0.0);
}
