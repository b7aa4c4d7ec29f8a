#include "canonlab/random_models.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <queue>
#include <utility>

#include "canonlab/decomposition.hpp"
#include "canonlab/errors.hpp"

namespace canonlab {

double RandomSource::normal(double mean, double sd) {
    double u1 = u01(), u2 = u01();
    return mean + sd * std::sqrt(-2.0 * std::log(u1)) *
                      std::cos(2.0 * 3.14159265358979323846 * u2);
}

int RandomSource::poisson(double mean) {
    double limit = std::exp(-mean);
    int k = 0;
    double prod = 1.0;
    do {
        ++k;
        prod *= u01();
    } while (prod > limit);
    return k - 1;
}

int RandomSource::geometric1(double mu) {
    if (mu <= 0.0) return 1;
    double draw = std::floor(std::log(u01()) / std::log(mu));
    return 1 + static_cast<int>(draw);
}

std::uint64_t RandomSource::below(std::uint64_t bound) {
    // Rejection to kill modulo bias.
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                          std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = eng();
    } while (x >= limit);
    return x % bound;
}

Graph gnp(int n, double p, std::uint64_t seed) {
    if (p <= 0.0 || n < 2) return build_graph(n, {});
    std::vector<std::pair<int, int>> edges;
    if (p >= 1.0) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
        return build_graph_unchecked(n, std::move(edges));
    }
    RandomSource rs(seed);
    double log_q = std::log1p(-p);
    // Geometric skips over the linear row-major order of pairs (i, j);
    // row i holds columns i+1..n-1 starting at linear index row_start.
    long long total = static_cast<long long>(n) * (n - 1) / 2;
    long long pos = -1, row_start = 0;
    int row = 0;
    while (true) {
        long long skip =
            static_cast<long long>(std::floor(std::log(rs.u01()) / log_q));
        pos += skip + 1;
        if (pos >= total) break;
        while (pos - row_start >= n - 1 - row) {
            row_start += n - 1 - row;
            ++row;
        }
        edges.emplace_back(row, row + 1 + static_cast<int>(pos - row_start));
    }
    return build_graph_unchecked(n, std::move(edges));
}

double solve_mu(double lambda) {
    if (!(lambda > 1.0)) throw BadLambda("solve_mu needs lambda > 1");
    double target = lambda * std::exp(-lambda);
    double lo = 0.0, hi = 1.0;  // m e^-m is increasing on [0,1]
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        (mid * std::exp(-mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

ContiguousParams contiguous_params(int n, double lambda) {
    ContiguousParams p;
    p.n = n;
    p.lambda = lambda;
    p.mu = solve_mu(lambda);
    p.xi_mean = lambda - p.mu;
    double delta = lambda - 1.0;
    p.xi_var = delta >= 0.2 ? 1.0 / n : 1.0 / (n * delta);
    return p;
}

namespace {

constexpr long kGwNodeCap = 1'000'000;
constexpr int kRepairCap = 1'000'000;

std::vector<int> degree_sequence_impl(const ContiguousParams& params,
                                      RandomSource& rs) {
    double xi;
    do {
        xi = rs.normal(params.xi_mean, std::sqrt(params.xi_var));
    } while (xi <= 0.0);
    std::vector<int> out;
    while (true) {
        out.clear();
        long long sum = 0;
        for (int i = 0; i < params.n; ++i) {
            int eta = rs.poisson(xi);
            if (eta >= 3) {
                out.push_back(eta);
                sum += eta;
            }
        }
        if (sum % 2 == 0) return out;
    }
}

Multigraph config_multigraph_impl(const std::vector<int>& degrees,
                                  RandomSource& rs) {
    long long total = 0;
    for (int d : degrees) total += d;
    if (total % 2 != 0) throw OddSum("degree sum must be even");
    std::vector<int> points;
    points.reserve(total);
    for (size_t v = 0; v < degrees.size(); ++v)
        points.insert(points.end(), degrees[v], static_cast<int>(v));
    for (size_t k = points.size(); k > 1; --k)
        std::swap(points[k - 1], points[rs.below(k)]);
    std::vector<Multigraph::Edge> edges;
    edges.reserve(points.size() / 2);
    for (size_t k = 0; k + 1 < points.size(); k += 2) {
        int u = points[k], v = points[k + 1];
        edges.push_back({std::min(u, v), std::max(u, v), 1,
                         static_cast<int>(k / 2)});
    }
    return build_multigraph(static_cast<int>(degrees.size()), std::move(edges));
}

Graph subdivide_geometric_impl(const Multigraph& kernel, double mu,
                               RandomSource& rs) {
    Multigraph with_lengths = kernel;
    std::map<std::pair<int, int>, int> unit_edges;  // pair -> count of length-1
    for (auto& e : with_lengths.edges) {
        int zeta = rs.geometric1(mu);
        if (e.u == e.v) {
            // A loop shorter than 3 cannot survive as a simple cycle.
            int tries = 0;
            while (zeta < 3) {
                if (++tries > kRepairCap)
                    throw GraphError("cannot draw a loop length >= 3 at this mu");
                zeta = rs.geometric1(mu);
            }
        } else {
            // At most one edge per parallel bundle may stay unsubdivided.
            int& units = unit_edges[{e.u, e.v}];
            int tries = 0;
            while (zeta == 1 && units == 1) {
                if (++tries > kRepairCap)
                    throw GraphError("cannot separate parallel edges at this mu");
                zeta = rs.geometric1(mu);
            }
            if (zeta == 1) units = 1;
        }
        e.length = zeta;
    }
    return subdivide(with_lengths);
}

Graph attach_gw_trees_impl(const Graph& core, double mu, RandomSource& rs) {
    std::vector<std::pair<int, int>> edges = core.edges;
    int next = core.n;
    for (int root = 0; root < core.n; ++root) {
        std::queue<int> frontier;
        frontier.push(root);
        long nodes = 1;
        while (!frontier.empty()) {
            int v = frontier.front();
            frontier.pop();
            int kids = rs.poisson(mu);
            for (int k = 0; k < kids; ++k) {
                if (++nodes > kGwNodeCap)
                    throw RunawayTree("Galton-Watson tree exceeded the node cap");
                int w = next++;
                edges.emplace_back(v, w);
                frontier.push(w);
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    return build_graph_unchecked(next, std::move(edges));
}

}  // namespace

std::vector<int> degree_sequence(const ContiguousParams& params,
                                 std::uint64_t seed) {
    RandomSource rs(seed);
    return degree_sequence_impl(params, rs);
}

Multigraph config_multigraph(const std::vector<int>& degrees, std::uint64_t seed) {
    RandomSource rs(seed);
    return config_multigraph_impl(degrees, rs);
}

Graph subdivide_geometric(const Multigraph& kernel, double mu, std::uint64_t seed) {
    RandomSource rs(seed);
    return subdivide_geometric_impl(kernel, mu, rs);
}

Graph attach_gw_trees(const Graph& core, double mu, std::uint64_t seed) {
    RandomSource rs(seed);
    return attach_gw_trees_impl(core, mu, rs);
}

ContiguousSample sample_contiguous(const ContiguousParams& params,
                                   std::uint64_t seed) {
    RandomSource rs(seed);
    ContiguousSample out;
    out.degrees = degree_sequence_impl(params, rs);
    Multigraph kernel = config_multigraph_impl(out.degrees, rs);
    out.kernel_size = kernel.n;
    Graph core = subdivide_geometric_impl(kernel, params.mu, rs);
    out.core_size = core.n;
    out.graph = attach_gw_trees_impl(core, params.mu, rs);
    return out;
}

}  // namespace canonlab
