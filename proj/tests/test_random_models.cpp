#include "canonlab/random_models.hpp"

#include "canonlab/decomposition.hpp"
#include "canonlab/errors.hpp"
#include "doctest.h"
#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <set>

using namespace canonlab;

TEST_CASE("gnp edge cases and determinism") {
    CHECK(gnp(10, 0.0, 1).m() == 0);
    Graph k3 = gnp(3, 1.0, 1);
    CHECK(k3.m() == 3);
    Graph a = gnp(500, 0.01, 42);
    Graph b = gnp(500, 0.01, 42);
    Graph c = gnp(500, 0.01, 43);
    CHECK(a.edges == b.edges);
    CHECK(a.edges != c.edges);
    // Edges are valid, sorted, distinct.
    CHECK(std::is_sorted(a.edges.begin(), a.edges.end()));
    CHECK(std::adjacent_find(a.edges.begin(), a.edges.end()) == a.edges.end());
    for (auto [u, v] : a.edges) {
        CHECK(u < v);
        CHECK(v < 500);
    }
}

TEST_CASE("gnp matches binomial edge moments") {
    int n = 3000;
    double p = 1.5 / n;
    double pairs = n * (n - 1) / 2.0;
    double want = pairs * p;
    double sd = std::sqrt(pairs * p * (1 - p));
    int trials = 200;
    double sum = 0;
    for (int s = 0; s < trials; ++s) sum += gnp(n, p, 1000 + s).m();
    double mean = sum / trials;
    CHECK(std::abs(mean - want) <= 4 * sd / std::sqrt(trials));
}

TEST_CASE("gnp includes every pair at the right rate") {
    // Pair-level uniformity: with n=6, p=0.5, each pair appears in about
    // half of the samples.
    int n = 6, trials = 20000;
    std::vector<std::vector<int>> hits(n, std::vector<int>(n, 0));
    for (int s = 0; s < trials; ++s)
        for (auto [u, v] : gnp(n, 0.5, 777000 + s).edges) hits[u][v] += 1;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            double rate = static_cast<double>(hits[u][v]) / trials;
            CHECK(std::abs(rate - 0.5) < 0.02);  // ~5.7 sigma
        }
}

TEST_CASE("solve_mu residuals and limits") {
    CHECK(std::abs(solve_mu(2.0) - oracles::bisect_mu(2.0)) < 1e-9);
    CHECK(std::abs(solve_mu(2.0) - 0.40637) < 1e-5);
    for (double lambda : {1.1, 1.5, 2.0, 3.0}) {
        double mu = solve_mu(lambda);
        CHECK(mu > 0.0);
        CHECK(mu < 1.0);
        double residual = mu * std::exp(-mu) - lambda * std::exp(-lambda);
        CHECK(std::abs(residual) <= 1e-12);
    }
    double near = solve_mu(1.0001);
    CHECK(near > 0.999);
    CHECK(near < 1.0);
    CHECK_THROWS_AS(solve_mu(1.0), BadLambda);
    CHECK_THROWS_AS(solve_mu(0.5), BadLambda);
}

TEST_CASE("contiguous_params switches the xi variance form") {
    ContiguousParams super = contiguous_params(100, 1.5);
    CHECK(super.xi_var == doctest::Approx(0.01));
    CHECK(super.xi_mean == doctest::Approx(1.5 - solve_mu(1.5)));
    ContiguousParams near = contiguous_params(100, 1.1);
    CHECK(near.xi_var == doctest::Approx(1.0 / (100 * 0.1)));
    CHECK_THROWS_AS(contiguous_params(100, 0.9), BadLambda);
}

TEST_CASE("degree_sequence: support, parity, concentration") {
    ContiguousParams p = contiguous_params(20000, 2.0);
    std::vector<double> counts;
    for (std::uint64_t s = 0; s < 20; ++s) {
        auto deg = degree_sequence(p, s);
        long long sum = 0;
        for (int d : deg) {
            CHECK(d >= 3);
            sum += d;
        }
        CHECK(sum % 2 == 0);
        counts.push_back(static_cast<double>(deg.size()));
    }
    // Retained count concentrates near n * P(Pois(lambda-mu) >= 3).
    double xi = p.xi_mean;
    double p3 = 1.0 - std::exp(-xi) * (1.0 + xi + xi * xi / 2.0);
    double want = 20000 * p3;
    for (double c : counts) CHECK(std::abs(c - want) / want < 0.08);
    CHECK(degree_sequence(p, 3) == degree_sequence(p, 3));
}

TEST_CASE("config_multigraph: forced outcomes and uniform pairing") {
    CHECK_THROWS_AS(config_multigraph({3}, 1), OddSum);

    Multigraph two_loops = config_multigraph({4}, 9);
    CHECK(two_loops.n == 1);
    REQUIRE(two_loops.edges.size() == 2);
    for (const auto& e : two_loops.edges) {
        CHECK(e.u == 0);
        CHECK(e.v == 0);
    }

    // Frequency of the all-parallel outcome on degrees [3,3] matches its
    // share of perfect matchings on 6 half-edges (blocks {0,1,2},{3,4,5}).
    int cross = 0, total = 0;
    oracles::for_each_perfect_matching(6, [&](const std::vector<std::pair<int, int>>& m) {
        ++total;
        bool all_cross = true;
        for (auto [a, b] : m) all_cross = all_cross && (a < 3) != (b < 3);
        cross += all_cross;
    });
    CHECK(total == 15);
    CHECK(cross == 6);
    int parallel_runs = 0, trials = 2000;
    for (int s = 0; s < trials; ++s) {
        Multigraph mg = config_multigraph({3, 3}, 100000 + s);
        bool all_parallel = true;
        for (const auto& e : mg.edges) all_parallel = all_parallel && e.u != e.v;
        parallel_runs += all_parallel;
    }
    double rate = static_cast<double>(parallel_runs) / trials;
    CHECK(std::abs(rate - static_cast<double>(cross) / total) < 0.05);
}

TEST_CASE("config_multigraph preserves degrees, loops counted twice") {
    std::vector<int> degrees = {3, 5, 4, 3, 3, 4};
    Multigraph mg = config_multigraph(degrees, 31);
    CHECK(mg.degrees() == degrees);
}

TEST_CASE("geometric draws have the right mean") {
    RandomSource rs(77);
    double sum = 0;
    int draws = 100000;
    for (int i = 0; i < draws; ++i) {
        int z = rs.geometric1(0.5);
        CHECK(z >= 1);
        sum += z;
    }
    CHECK(std::abs(sum / draws - 2.0) < 0.02);
    RandomSource rs0(77);
    for (int i = 0; i < 10; ++i) CHECK(rs0.geometric1(0.0) == 1);
}

TEST_CASE("subdivide_geometric: identity, loop repair, parallel repair") {
    // Simple kernel at mu=0: nothing changes.
    std::vector<Multigraph::Edge> k4;
    int id = 0;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) k4.push_back({u, v, 1, id++});
    Multigraph mk4 = build_multigraph(4, k4);
    Graph same = subdivide_geometric(mk4, 0.0, 5);
    CHECK(same.n == 4);
    CHECK(same.m() == 6);

    // Loops always come back as cycles of length >= 3.
    Multigraph loops = build_multigraph(1, {{0, 0, 1, 0}, {0, 0, 1, 1}});
    for (std::uint64_t s = 0; s < 30; ++s) {
        Graph g = subdivide_geometric(loops, 0.3, s);
        auto comps = components(g);
        REQUIRE(comps.size() == 1);
        CHECK(g.n >= 5);  // two cycles of >= 3 sharing the anchor
        CHECK(g.degree(0) == 4);
    }
    CHECK_THROWS_AS(subdivide_geometric(loops, 0.0, 1), GraphError);

    // Parallel bundles keep at most one unit edge.
    Multigraph triple = build_multigraph(
        2, {{0, 1, 1, 0}, {0, 1, 1, 1}, {0, 1, 1, 2}});
    for (std::uint64_t s = 0; s < 30; ++s) {
        Graph g = subdivide_geometric(triple, 0.6, s);
        CHECK(g.degree(0) == 3);
        CHECK(g.degree(1) == 3);
        CHECK(g.n >= 2 + 2);  // at least two of the three paths subdivided
    }
    CHECK_THROWS_AS(subdivide_geometric(triple, 0.0, 1), GraphError);
}

TEST_CASE("attach_gw_trees: identity at mu=0, core restoration, progeny mean") {
    std::vector<std::pair<int, int>> c5;
    for (int i = 0; i < 5; ++i) c5.emplace_back(i, (i + 1) % 5);
    Graph core = build_graph(5, c5);
    Graph bare = attach_gw_trees(core, 0.0, 3);
    CHECK(bare.n == 5);
    CHECK(bare.edges == core.edges);

    Graph grown = attach_gw_trees(core, 0.5, 3);
    CoreDecomposition d = two_core(grown);
    CHECK(d.core.n == core.n);
    CHECK(d.core.edges == core.edges);
    for (int i = 0; i < core.n; ++i) CHECK(d.core_vertices[i] == i);

    // Mean total progeny is 1/(1-mu) = 2.
    std::vector<std::pair<int, int>> big;
    int nb = 10000;
    for (int i = 0; i < nb; ++i) big.emplace_back(i, (i + 1) % nb);
    Graph ring = build_graph(nb, big);
    Graph forest = attach_gw_trees(ring, 0.5, 11);
    double mean_size = static_cast<double>(forest.n) / nb;
    CHECK(std::abs(mean_size - 2.0) < 0.05);

    // Supercritical offspring hits the node cap.
    CHECK_THROWS_AS(attach_gw_trees(ring, 1.2, 1), RunawayTree);
}

TEST_CASE("sample_contiguous composes the stages deterministically") {
    ContiguousParams p = contiguous_params(4000, 1.5);
    ContiguousSample a = sample_contiguous(p, 101);
    ContiguousSample b = sample_contiguous(p, 101);
    CHECK(a.graph.edges == b.graph.edges);
    CHECK(a.kernel_size == b.kernel_size);

    for (std::uint64_t s = 0; s < 8; ++s) {
        ContiguousSample smp = sample_contiguous(p, 200 + s);
        if (smp.graph.n == 0) continue;
        CoreDecomposition d = two_core(smp.graph);
        CHECK(d.core.n == smp.core_size);
        KernelDecomposition k = kernel(d.core);
        CHECK(k.kernel.n == smp.kernel_size);
        // Kernel degrees reproduce the drawn degree sequence.
        std::vector<int> got = k.kernel.degrees();
        std::vector<int> want = smp.degrees;
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want);
        for (int dv : got) CHECK(dv >= 3);
    }
}
