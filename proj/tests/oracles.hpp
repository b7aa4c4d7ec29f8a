#pragma once

// Brute-force reference implementations used to pin expected values. These
// deliberately avoid the library's own algorithms: isomorphism is decided by
// permutation backtracking, trees are enumerated from Pruefer sequences, and
// counting is done by exhaustive search.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "canonlab/graph.hpp"

namespace oracles {

using canonlab::Graph;

// Exact isomorphism by backtracking over degree-compatible maps.
inline bool extend_iso(const Graph& g, const Graph& h, std::vector<int>& map,
                       std::vector<char>& used, int v) {
    if (v == g.n) return true;
    for (int x = 0; x < h.n; ++x) {
        if (used[x] || g.degree(v) != h.degree(x)) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g.has_edge(v, u) != h.has_edge(x, map[u])) ok = false;
        if (!ok) continue;
        map[v] = x;
        used[x] = 1;
        if (extend_iso(g, h, map, used, v + 1)) return true;
        used[x] = 0;
    }
    return false;
}

inline bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.n != h.n || g.m() != h.m()) return false;
    std::vector<int> dg(g.n), dh(h.n);
    for (int v = 0; v < g.n; ++v) dg[v] = g.degree(v);
    for (int v = 0; v < h.n; ++v) dh[v] = h.degree(v);
    std::sort(dg.begin(), dg.end());
    std::sort(dh.begin(), dh.end());
    if (dg != dh) return false;
    std::vector<int> map(g.n, -1);
    std::vector<char> used(h.n, 0);
    return extend_iso(g, h, map, used, 0);
}

// All automorphisms of a small graph (optionally color-preserving).
inline void collect_autos(const Graph& g, const std::vector<int>* colors,
                          std::vector<int>& map, std::vector<char>& used, int v,
                          std::vector<std::vector<int>>& out) {
    if (v == g.n) {
        out.push_back(map);
        return;
    }
    for (int x = 0; x < g.n; ++x) {
        if (used[x] || g.degree(v) != g.degree(x)) continue;
        if (colors && (*colors)[v] != (*colors)[x]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (g.has_edge(v, u) != g.has_edge(x, map[u])) ok = false;
        if (!ok) continue;
        map[v] = x;
        used[x] = 1;
        collect_autos(g, colors, map, used, v + 1, out);
        used[x] = 0;
    }
}

inline std::vector<std::vector<int>> all_automorphisms(
    const Graph& g, const std::vector<int>* colors = nullptr) {
    std::vector<int> map(g.n, -1);
    std::vector<char> used(g.n, 0);
    std::vector<std::vector<int>> out;
    collect_autos(g, colors, map, used, 0, out);
    return out;
}

// Rooted-tree isomorphism by recursive child matching (children given as
// adjacency lists below the root).
inline bool rooted_iso(const std::vector<std::vector<int>>& ca, int a,
                       const std::vector<std::vector<int>>& cb, int b) {
    if (ca[a].size() != cb[b].size()) return false;
    std::vector<int> perm(cb[b].size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end());
    do {
        bool ok = true;
        for (size_t i = 0; i < ca[a].size() && ok; ++i)
            ok = rooted_iso(ca, ca[a][i], cb, cb[b][perm[i]]);
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Children lists of a tree graph rooted at r.
inline std::vector<std::vector<int>> children_of(const Graph& t, int r) {
    std::vector<std::vector<int>> ch(t.n);
    std::vector<int> parent(t.n, -2);
    parent[r] = -1;
    std::vector<int> stack{r};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : t.adj[v])
            if (parent[u] == -2) {
                parent[u] = v;
                ch[v].push_back(u);
                stack.push_back(u);
            }
    }
    return ch;
}

// Labeled tree from a Pruefer sequence over n >= 2 vertices.
inline Graph pruefer_decode(int n, const std::vector<int>& seq) {
    std::vector<int> deg(n, 1);
    for (int s : seq) ++deg[s];
    std::vector<std::pair<int, int>> edges;
    std::vector<char> done(n, 0);
    for (int s : seq) {
        for (int leaf = 0; leaf < n; ++leaf) {
            if (!done[leaf] && deg[leaf] == 1) {
                edges.emplace_back(leaf, s);
                done[leaf] = 1;
                --deg[s];
                break;
            }
        }
    }
    int a = -1, b = -1;
    for (int v = 0; v < n; ++v)
        if (!done[v]) (a < 0 ? a : b) = v;
    edges.emplace_back(a, b);
    return canonlab::build_graph(n, edges);
}

// Every labeled tree on n vertices (n^(n-2) of them); n <= 8 keeps this small.
template <typename F>
void for_each_labeled_tree(int n, F&& f) {
    if (n == 1) {
        f(canonlab::build_graph(1, {}));
        return;
    }
    if (n == 2) {
        f(canonlab::build_graph(2, {{0, 1}}));
        return;
    }
    std::vector<int> seq(n - 2, 0);
    while (true) {
        f(pruefer_decode(n, seq));
        int i = n - 3;
        while (i >= 0 && seq[i] == n - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
}

// Deterministic permutation helper for property tests.
inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    for (int i = n - 1; i > 0; --i) {
        int j = static_cast<int>(rng() % static_cast<uint64_t>(i + 1));
        std::swap(p[i], p[j]);
    }
    return p;
}

// Bisection solve of mu * exp(-mu) = lambda * exp(-lambda) on (0, 1).
inline double bisect_mu(double lambda, double tol = 1e-13) {
    auto f = [&](double x) { return x * std::exp(-x) - lambda * std::exp(-lambda); };
    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200 && hi - lo > tol; ++i) {
        double mid = 0.5 * (lo + hi);
        // x e^-x increases on (0,1), so the root is where f crosses zero
        if (f(mid) < 0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

// All ways to pair up 2k labeled half-edge points, reported to a visitor as a
// list of (i, j) pairs. Used to enumerate configuration-model outcomes.
template <typename F>
void for_each_perfect_matching(int points, F&& f) {
    std::vector<int> mate(points, -1);
    std::vector<std::pair<int, int>> acc;
    std::function<void()> rec = [&]() {
        int i = 0;
        while (i < points && mate[i] >= 0) ++i;
        if (i == points) {
            f(acc);
            return;
        }
        for (int j = i + 1; j < points; ++j) {
            if (mate[j] >= 0) continue;
            mate[i] = j;
            mate[j] = i;
            acc.emplace_back(i, j);
            rec();
            acc.pop_back();
            mate[i] = mate[j] = -1;
        }
    };
    rec();
}

}  // namespace oracles
