#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "canonlab/graph.hpp"

namespace canonlab {

// Deterministic sampling source. std::mt19937_64 is bit-exact by the
// standard and every transform below is spelled out here, so identical
// (params, seed) reproduce identical samples on any toolchain.
struct RandomSource {
    std::mt19937_64 eng;

    explicit RandomSource(std::uint64_t seed) : eng(seed) {}

    // Uniform on (0,1].
    double u01() { return (static_cast<double>(eng() >> 11) + 1.0) * 0x1.0p-53; }

    // Box-Muller transform.
    double normal(double mean, double sd);

    // Knuth's product method; fine for the small means used here.
    int poisson(double mean);

    // P(k) = mu^(k-1) (1-mu) on {1,2,...} by inversion; mu=0 degenerates
    // to the constant 1.
    int geometric1(double mu);

    // Uniform integer in [0, bound).
    std::uint64_t below(std::uint64_t bound);
};

// G(n,p) by geometric skipping over the row-major pair order; O(n + m)
// for p = O(1/n).
Graph gnp(int n, double p, std::uint64_t seed);

// The conjugate of lambda: the unique mu in (0,1) with
// mu e^{-mu} = lambda e^{-lambda}; residual bisected below 1e-12.
// Throws BadLambda for lambda <= 1.
double solve_mu(double lambda);

struct ContiguousParams {
    int n = 0;
    double lambda = 0;   // mean degree, > 1
    double mu = 0;       // conjugate of lambda
    double xi_mean = 0;  // lambda - mu
    // 1/n when delta = lambda-1 >= 0.2 (strictly supercritical form),
    // 1/(n delta) otherwise (near-critical form).
    double xi_var = 0;
};

ContiguousParams contiguous_params(int n, double lambda);

// Draw xi once (normal, truncated positive), then Poisson(xi) per slot;
// keep values >= 3 and redraw the batch until their sum is even.
std::vector<int> degree_sequence(const ContiguousParams& params, std::uint64_t seed);

// Uniform pairing of half-edges; loops and parallel edges permitted,
// lengths all 1. Throws OddSum.
Multigraph config_multigraph(const std::vector<int>& degrees, std::uint64_t seed);

// Replace each kernel edge by a path of geometric length. Loops are
// redrawn until their length reaches 3 and at most one edge per parallel
// bundle keeps length 1, so the result is a simple graph.
Graph subdivide_geometric(const Multigraph& kernel, double mu, std::uint64_t seed);

// Independent Pois(mu)-Galton-Watson tree rooted at every vertex;
// RunawayTree beyond 10^6 nodes in one tree.
Graph attach_gw_trees(const Graph& core, double mu, std::uint64_t seed);

struct ContiguousSample {
    Graph graph;
    std::vector<int> degrees;  // retained kernel degrees
    int kernel_size = 0;       // kernel vertices are 0..kernel_size-1
    int core_size = 0;         // synthetic-core vertices are 0..core_size-1
};

// Full three-step construction: degree sequence, uniform pairing,
// geometric subdivision, Galton-Watson decoration. One seed drives all
// stages through a single stream.
ContiguousSample sample_contiguous(const ContiguousParams& params, std::uint64_t seed);

}  // namespace canonlab
