#include "canonlab/decomposition.hpp"

#include "canonlab/errors.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace canonlab {

namespace {

// BFS over `allowed` vertices starting at root; children in ascending id.
AttachedTree grow_tree(const Graph& g, int root, const std::vector<char>& allowed,
                       std::vector<char>& visited) {
    AttachedTree t;
    t.vertices.push_back(root);
    t.parent.push_back(-1);
    for (size_t head = 0; head < t.vertices.size(); ++head) {
        int v = t.vertices[head];
        for (int w : g.adj[v]) {
            if (!allowed[w] || visited[w]) continue;
            visited[w] = 1;
            t.vertices.push_back(w);
            t.parent.push_back(static_cast<int>(head));
        }
    }
    return t;
}

}  // namespace

CoreDecomposition two_core(const Graph& g) {
    std::vector<int> deg(g.n);
    for (int v = 0; v < g.n; ++v) deg[v] = g.degree(v);
    std::vector<char> removed(g.n, 0);
    std::deque<int> queue;
    for (int v = 0; v < g.n; ++v)
        if (deg[v] <= 1) {
            removed[v] = 1;
            queue.push_back(v);
        }
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.adj[v]) {
            if (removed[w]) continue;
            if (--deg[w] <= 1) {
                removed[w] = 1;
                queue.push_back(w);
            }
        }
    }

    CoreDecomposition d;
    d.core_index.assign(g.n, -1);
    for (int v = 0; v < g.n; ++v)
        if (!removed[v]) {
            d.core_index[v] = static_cast<int>(d.core_vertices.size());
            d.core_vertices.push_back(v);
        }
    d.core = induced_subgraph(g, d.core_vertices);

    // A removed vertex adjacent to two core vertices would always have kept
    // degree >= 2, so each pruned tree hangs off at most one core vertex.
    std::vector<char> visited(g.n, 0);
    d.attached.reserve(d.core_vertices.size());
    for (int x : d.core_vertices) d.attached.push_back(grow_tree(g, x, removed, visited));
    for (int v = 0; v < g.n; ++v)
        if (removed[v] && !visited[v]) {
            visited[v] = 1;
            d.non_core_forest.push_back(grow_tree(g, v, removed, visited));
        }
    return d;
}

namespace {

void require_two_core(const Graph& core, const char* who) {
    for (int v = 0; v < core.n; ++v)
        if (core.degree(v) < 2)
            throw GraphError(std::string(who) + ": vertex " + std::to_string(v) +
                             " has degree " + std::to_string(core.degree(v)) +
                             ", input is not a 2-core");
}

// Walks the degree-2 chain leaving `u` through `first`; fills `internal`
// with the chain's interior and returns the branch vertex it ends at.
int walk_chain(const Graph& core, const std::vector<int>& deg, int u, int first,
               std::vector<int>& internal) {
    internal.clear();
    int prev = u, cur = first;
    while (deg[cur] == 2) {
        internal.push_back(cur);
        int next = core.adj[cur][0] == prev ? core.adj[cur][1] : core.adj[cur][0];
        prev = cur;
        cur = next;
    }
    return cur;
}

// Emit each chain once: from the lexicographically smaller (endpoint, first
// interior vertex) end. Loops (s == t) emit from the smaller interior side.
bool canonical_end(int u, int first, int t, int last) {
    if (u != t) return u < t;
    return first < last;
}

// Reads off every maximal degree-2 chain and every bare cycle of a 2-core,
// invoking the callbacks in a deterministic order.
template <class EdgeFn, class ChainFn, class BareFn>
void scan_chains(const Graph& core, EdgeFn on_edge, ChainFn on_chain, BareFn on_bare) {
    std::vector<int> deg(core.n);
    for (int v = 0; v < core.n; ++v) deg[v] = core.degree(v);

    std::vector<char> in_chain(core.n, 0);
    for (int u = 0; u < core.n; ++u) {
        if (deg[u] < 3) continue;
        for (int w : core.adj[u]) {
            if (deg[w] >= 3) {
                if (u < w) on_edge(u, w);
                continue;
            }
            std::vector<int> internal;
            int t = walk_chain(core, deg, u, w, internal);
            for (int v : internal) in_chain[v] = 1;
            if (canonical_end(u, w, t, internal.back())) on_chain(u, t, internal);
        }
    }

    // What is left is degree-2 components: bare cycles. Walk each from its
    // smallest vertex toward that vertex's smaller neighbor.
    std::vector<char> seen(core.n, 0);
    for (int v = 0; v < core.n; ++v) {
        if (deg[v] != 2 || in_chain[v] || seen[v]) continue;
        std::vector<int> cycle{v};
        seen[v] = 1;
        int prev = v, cur = std::min(core.adj[v][0], core.adj[v][1]);
        while (cur != v) {
            seen[cur] = 1;
            cycle.push_back(cur);
            int next = core.adj[cur][0] == prev ? core.adj[cur][1] : core.adj[cur][0];
            prev = cur;
            cur = next;
        }
        on_bare(cycle);
    }
}

}  // namespace

KernelDecomposition kernel(const Graph& core) {
    require_two_core(core, "kernel");

    KernelDecomposition k;
    k.branch_index.assign(core.n, -1);
    for (int v = 0; v < core.n; ++v)
        if (core.degree(v) >= 3) {
            k.branch_index[v] = static_cast<int>(k.branch_vertices.size());
            k.branch_vertices.push_back(v);
        }

    std::vector<Multigraph::Edge> edges;
    int next_id = 0;
    scan_chains(
        core,
        [&](int u, int w) {
            edges.push_back({k.branch_index[u], k.branch_index[w], 1, next_id++});
        },
        [&](int u, int t, const std::vector<int>& internal) {
            edges.push_back({k.branch_index[u], k.branch_index[t],
                             static_cast<int>(internal.size()) + 1, next_id++});
        },
        [&](const std::vector<int>& cycle) {
            throw PureCycleComponent(cycle.front(), static_cast<int>(cycle.size()));
        });
    k.kernel = build_multigraph(static_cast<int>(k.branch_vertices.size()), std::move(edges));
    return k;
}

PendantStructure pendant_structure(const Graph& core) {
    require_two_core(core, "pendant_structure");

    PendantStructure ps;
    scan_chains(
        core,
        [&](int u, int w) { ps.paths.push_back({u, w, {}}); },
        [&](int u, int t, const std::vector<int>& internal) {
            if (u == t) {
                PendantStructure::Cycle c;
                c.anchor = u;
                c.cycle.push_back(u);
                c.cycle.insert(c.cycle.end(), internal.begin(), internal.end());
                ps.cycles.push_back(std::move(c));
                return;
            }
            PendantStructure::Path p;
            if (u < t) {
                p = {u, t, internal};
            } else {
                p = {t, u, {internal.rbegin(), internal.rend()}};
            }
            ps.paths.push_back(std::move(p));
        },
        [&](const std::vector<int>& cycle) { ps.cycle_components.push_back(cycle); });
    return ps;
}

Graph subdivide(const Multigraph& mg) {
    long total = 0;
    for (const auto& e : mg.edges) total += e.length;
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<size_t>(total));
    int next = mg.n;
    for (const auto& e : mg.edges) {
        int prev = e.u;
        for (int i = 1; i < e.length; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, e.v);
    }
    Graph g = build_graph(next, edges);
    if (g.m() != total)
        throw GraphError("subdivide: lengths produce coincident edges");
    return g;
}

}  // namespace canonlab
