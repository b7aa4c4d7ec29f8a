#include "canonlab/decomposition.hpp"
#include "canonlab/errors.hpp"
#include "canonlab/experiment.hpp"
#include "canonlab/graph.hpp"
#include "canonlab/identifiability.hpp"
#include "canonlab/pipeline.hpp"
#include "canonlab/random_models.hpp"
#include "canonlab/refinement.hpp"
#include "canonlab/symmetry.hpp"
#include "canonlab/tree_canon.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

namespace {

using namespace canonlab;

Graph load_graph(const std::string& path) {
    if (path == "-") return read_edgelist(std::cin);
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open " + path);
    return read_edgelist(in);
}

void run_cr(const std::string& input) {
    Graph g = load_graph(input);
    Coloring col = cr_stable(g);
    std::map<int, int> histogram;  // class size -> number of classes
    for (const auto& cls : col.classes) histogram[static_cast<int>(cls.size())] += 1;
    std::cout << "classes " << col.class_count() << "\nrounds " << col.rounds
              << "\nhistogram\n";
    for (auto [size, count] : histogram) std::cout << size << ' ' << count << '\n';
    std::cout << "vertices\n";
    for (int v = 0; v < g.n; ++v) std::cout << v << ' ' << col.class_of[v] << '\n';
}

void run_core(const std::string& input) {
    Graph g = load_graph(input);
    write_edgelist(two_core(g).core, std::cout);
}

void run_kernel(const std::string& input) {
    Graph g = load_graph(input);
    KernelDecomposition k = kernel(two_core(g).core);
    for (const auto& e : k.kernel.edges)
        std::cout << e.u << ' ' << e.v << ' ' << e.length << '\n';
}

const char* witness_name(IdentifiabilityVerdict::Witness w) {
    switch (w) {
        case IdentifiabilityVerdict::Witness::none: return "none";
        case IdentifiabilityVerdict::Witness::unicyclic_component:
            return "unicyclic_component";
        case IdentifiabilityVerdict::Witness::uc_equivalent_pair:
            return "uc_equivalent_pair";
        default: return "undetermined_complex";
    }
}

void run_identifiable(const std::string& input) {
    IdentifiabilityVerdict v = graph_identifiable(load_graph(input));
    nlohmann::json out = {{"ok", v.ok},
                          {"witness", witness_name(v.witness)},
                          {"witness_components", v.witness_components}};
    std::cout << out.dump(2) << '\n';
}

nlohmann::json swaps_json(const SwapList& swaps, const std::vector<int>& to_orig) {
    nlohmann::json arr = nlohmann::json::array();
    for (auto [u, v] : swaps) arr.push_back({to_orig[u], to_orig[v]});
    return arr;
}

nlohmann::json ids_json(const std::vector<int>& ids, const std::vector<int>& to_orig) {
    nlohmann::json arr = nlohmann::json::array();
    for (int v : ids) arr.push_back(to_orig[v]);
    return arr;
}

// Reports on the 2-core with attached-tree types; ids are translated back
// to the input graph's vertex ids.
void run_symmetries(const std::string& input) {
    Graph g = load_graph(input);
    CoreDecomposition d = two_core(g);
    std::vector<TreeCode> types(d.core.n);
    for (int i = 0; i < d.core.n; ++i)
        types[i] = ahu_code(rooted_from_parents(d.attached[i].parent));
    SymmetryReport rep = detect_symmetries(d.core, types);
    const std::vector<int>& orig = d.core_vertices;

    nlohmann::json a1 = nlohmann::json::array();
    for (const auto& r : rep.a1)
        a1.push_back({{"anchor", orig[r.anchor]},
                      {"cycle", ids_json(r.cycle, orig)},
                      {"swaps", swaps_json(r.swaps, orig)}});
    nlohmann::json a2 = nlohmann::json::array();
    for (const auto& r : rep.a2)
        a2.push_back({{"s", orig[r.s]},
                      {"t", orig[r.t]},
                      {"path1", ids_json(r.path1, orig)},
                      {"path2", ids_json(r.path2, orig)},
                      {"swaps", swaps_json(r.swaps, orig)}});
    nlohmann::json a3 = nlohmann::json::array();
    for (const auto& r : rep.a3) {
        nlohmann::json paths = nlohmann::json::array();
        for (const auto& p : r.paths) paths.push_back(ids_json(p, orig));
        a3.push_back({{"s", orig[r.s]},
                      {"t", orig[r.t]},
                      {"paths", std::move(paths)},
                      {"swaps", swaps_json(r.swaps, orig)}});
    }
    nlohmann::json out = {
        {"core_size", d.core.n},
        {"a1", std::move(a1)},
        {"a2", std::move(a2)},
        {"a3", std::move(a3)},
        {"interchangeable_pairs", swaps_json(rep.interchangeable_pairs, orig)},
        {"duplex_classes", swaps_json(rep.duplex_classes, orig)}};
    std::cout << out.dump(2) << '\n';
}

int run_canon(const std::string& input, bool complement, int fallback_bound,
              const std::string& emit) {
    Graph g = load_graph(input);
    CanonOptions opts;
    opts.complement = complement;
    opts.fallback_vertex_bound = fallback_bound;
    CanonicalForm f = canon(g, opts);
    std::cerr << "status: " << to_string(f.status) << '\n';
    if (emit == "labeling") {
        for (int v = 0; v < g.n; ++v) std::cout << v << ' ' << f.labeling[v] << '\n';
    } else if (emit == "edges") {
        std::cout << g.n << ' ' << f.canonical_edges.size() << '\n';
        for (auto [u, v] : f.canonical_edges) std::cout << u << ' ' << v << '\n';
    } else {
        std::cout << f.certificate_hex() << '\n';
    }
    return f.status == Status::not_canonizable ? 2 : 0;
}

void run_sample(const std::string& model, int n, double lambda, double p,
                std::uint64_t seed) {
    Graph g;
    if (model == "gnp") {
        if (p < 0 && lambda < 0) throw GraphError("gnp needs --lambda or --p");
        g = gnp(n, p >= 0 ? p : lambda / n, seed);
    } else {
        if (lambda < 0) throw GraphError("contiguous needs --lambda");
        g = sample_contiguous(contiguous_params(n, lambda), seed).graph;
    }
    write_edgelist(g, std::cout);
}

int run_experiment_cmd(const std::string& config_path, const std::string& out_dir) {
    std::ifstream in(config_path);
    if (!in) throw GraphError("cannot open " + config_path);
    ExperimentConfig cfg = parse_experiment_config(in);
    ExperimentResult res = run_experiment(cfg);
    std::filesystem::path dir(out_dir);
    std::ofstream js(dir / "stats.json");
    write_stats_json(cfg, res, js);
    std::ofstream cs(dir / "stats.csv");
    write_stats_csv(cfg, res, cs);
    for (const std::string& v : res.violations) std::cerr << "violation: " << v << '\n';
    std::cout << "wrote " << (dir / "stats.json").string() << " and "
              << (dir / "stats.csv").string() << '\n';
    return res.violations.empty() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"canonical labeling toolkit for sparse graphs"};
    app.require_subcommand(1);
    int rc = 0;

    std::string input = "-";

    auto* cr = app.add_subcommand("cr", "color refinement: class histogram and classes");
    cr->add_option("--input,-i", input, "edge-list file, - for stdin");
    cr->callback([&] { run_cr(input); });

    auto* core = app.add_subcommand("core", "emit the 2-core as an edge list");
    core->add_option("--input,-i", input, "edge-list file, - for stdin");
    core->callback([&] { run_core(input); });

    auto* kern = app.add_subcommand("kernel", "emit kernel edges as 'u v length'");
    kern->add_option("--input,-i", input, "edge-list file, - for stdin");
    kern->callback([&] { run_kernel(input); });

    auto* ident = app.add_subcommand("identifiable", "identifiability verdict as JSON");
    ident->add_option("--input,-i", input, "edge-list file, - for stdin");
    ident->callback([&] { run_identifiable(input); });

    auto* sym = app.add_subcommand("symmetries", "core symmetry report as JSON");
    sym->add_option("--input,-i", input, "edge-list file, - for stdin");
    sym->callback([&] { run_symmetries(input); });

    auto* can = app.add_subcommand("canon", "canonical labeling");
    bool complement = false;
    int fallback_bound = 64;
    std::string emit = "cert";
    can->add_option("--input,-i", input, "edge-list file, - for stdin");
    can->add_flag("--complement", complement, "canonize the complement instead");
    can->add_option("--fallback-bound", fallback_bound,
                    "vertex bound for the exact fallback search");
    can->add_option("--emit", emit, "labeling | edges | cert")
        ->check(CLI::IsMember({"labeling", "edges", "cert"}));
    can->callback([&] { rc = run_canon(input, complement, fallback_bound, emit); });

    auto* smp = app.add_subcommand("sample", "draw a random graph");
    std::string model = "gnp";
    int n = 0;
    double lambda = -1.0, p = -1.0;
    std::uint64_t seed = 1;
    smp->add_option("--model", model, "gnp | contiguous")
        ->check(CLI::IsMember({"gnp", "contiguous"}));
    smp->add_option("--n", n, "vertex count")->required();
    smp->add_option("--lambda", lambda, "mean degree, p = lambda/n");
    smp->add_option("--p", p, "edge probability (gnp only)");
    smp->add_option("--seed", seed, "rng seed");
    smp->callback([&] { run_sample(model, n, lambda, p, seed); });

    auto* exp = app.add_subcommand("experiment", "run trial batches from a JSON config");
    std::string config_path;
    std::string out_dir = ".";
    exp->add_option("--config", config_path, "JSON config file")->required();
    exp->add_option("--out-dir", out_dir, "directory for stats.json / stats.csv");
    exp->callback([&] { rc = run_experiment_cmd(config_path, out_dir); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
