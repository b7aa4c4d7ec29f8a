#include "canonlab/graph.hpp"

#include <algorithm>
#include <cassert>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

namespace canonlab {

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || v < 0 || u >= n || v >= n) return false;
    const auto& a = adj[u].size() <= adj[v].size() ? adj[u] : adj[v];
    int other = adj[u].size() <= adj[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), other);
}

static void finish_adjacency(Graph& g) {
    g.adj.assign(g.n, {});
    for (auto [u, v] : g.edges) {
        g.adj[u].push_back(v);
        g.adj[v].push_back(u);
    }
    for (auto& a : g.adj) std::sort(a.begin(), a.end());
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw RejectRange(n, 0);
    Graph g;
    g.n = n;
    g.edges.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n) throw RejectRange(u, n);
        if (v < 0 || v >= n) throw RejectRange(v, n);
        if (u == v) throw RejectLoop(u);
        g.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    finish_adjacency(g);
    return g;
}

Graph build_graph_unchecked(int n, std::vector<std::pair<int, int>> edges) {
    Graph g;
    g.n = n;
    for (auto& [u, v] : edges)
        if (u > v) std::swap(u, v);
    std::sort(edges.begin(), edges.end());
    assert(std::adjacent_find(edges.begin(), edges.end()) == edges.end());
    assert(std::all_of(edges.begin(), edges.end(), [n](auto e) {
        return e.first >= 0 && e.first < e.second && e.second < n;
    }));
    g.edges = std::move(edges);
    finish_adjacency(g);
    return g;
}

std::vector<ComponentClass> components(const Graph& g) {
    std::vector<int> comp(g.n, -1);
    std::vector<ComponentClass> out;
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        ComponentClass cc;
        cc.edge_count = 0;
        stack.push_back(s);
        comp[s] = id;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            cc.vertices.push_back(v);
            cc.edge_count += g.degree(v);
            for (int u : g.adj[v]) {
                if (comp[u] < 0) {
                    comp[u] = id;
                    stack.push_back(u);
                }
            }
        }
        cc.edge_count /= 2;
        std::sort(cc.vertices.begin(), cc.vertices.end());
        long nv = static_cast<long>(cc.vertices.size());
        cc.kind = cc.edge_count == nv - 1 ? ComponentClass::Kind::tree
                : cc.edge_count == nv     ? ComponentClass::Kind::unicyclic
                                          : ComponentClass::Kind::complex_;
        out.push_back(std::move(cc));
    }
    return out;
}

// Touches only the subset's adjacency, so extracting every component of a
// graph costs O((n + m) log n) overall instead of O(#components * m).
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices) {
    assert(std::is_sorted(vertices.begin(), vertices.end()));
    auto local = [&](int v) -> int {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
        if (it == vertices.end() || *it != v) return -1;
        return static_cast<int>(it - vertices.begin());
    };
    std::vector<std::pair<int, int>> edges;
    for (size_t i = 0; i < vertices.size(); ++i)
        for (int u : g.adj[vertices[i]])
            if (u > vertices[i]) {
                int j = local(u);
                if (j >= 0) edges.emplace_back(static_cast<int>(i), j);
            }
    return build_graph_unchecked(static_cast<int>(vertices.size()), std::move(edges));
}

Graph apply_permutation(const Graph& g, const std::vector<int>& perm) {
    assert(static_cast<int>(perm.size()) == g.n);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edges.size());
    for (auto [u, v] : g.edges) edges.emplace_back(perm[u], perm[v]);
    return build_graph_unchecked(g.n, std::move(edges));
}

Graph complement_graph(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n; ++u) {
        size_t k = 0;
        for (int v = u + 1; v < g.n; ++v) {
            while (k < g.adj[u].size() && g.adj[u][k] < v) ++k;
            if (k < g.adj[u].size() && g.adj[u][k] == v) continue;
            edges.emplace_back(u, v);
        }
    }
    return build_graph_unchecked(g.n, std::move(edges));
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> edges = a.edges;
    edges.reserve(a.edges.size() + b.edges.size());
    for (auto [u, v] : b.edges) edges.emplace_back(u + a.n, v + a.n);
    return build_graph_unchecked(a.n + b.n, std::move(edges));
}

Graph read_edgelist(std::istream& in) {
    std::string line;
    int lineno = 0;
    long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank line
        if (first[0] == '#') continue;
        long a, b;
        std::istringstream nums(line);
        if (!(nums >> a >> b)) throw ParseError(lineno, "expected two integers");
        std::string rest;
        if (nums >> rest) throw ParseError(lineno, "trailing tokens");
        if (n < 0) {
            if (a < 0 || b < 0) throw ParseError(lineno, "negative header");
            n = a;
            m = b;
        } else {
            edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    }
    if (n < 0) throw ParseError(lineno, "missing header");
    if (static_cast<long>(edges.size()) != m)
        throw CountMismatch(m, static_cast<long>(edges.size()));
    return build_graph(static_cast<int>(n), edges);
}

void write_edgelist(const Graph& g, std::ostream& out) {
    out << g.n << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
}

std::vector<int> Multigraph::degrees() const {
    std::vector<int> d(n, 0);
    for (const auto& e : edges) {
        d[e.u] += 1;
        d[e.v] += 1;  // a loop (u == v) contributes 2
    }
    return d;
}

Multigraph build_multigraph(int n, std::vector<Multigraph::Edge> edges) {
    Multigraph k;
    k.n = n;
    for (auto& e : edges) {
        if (e.u < 0 || e.u >= n) throw RejectRange(e.u, n);
        if (e.v < 0 || e.v >= n) throw RejectRange(e.v, n);
        if (e.length < 1) throw GraphError("kernel edge length < 1");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    k.edges = std::move(edges);
    for (int d : k.degrees())
        if (d < 3) throw GraphError("multigraph degree < 3");
    return k;
}

}  // namespace canonlab
