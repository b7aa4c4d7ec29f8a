#include "canonlab/tree_canon.hpp"

#include "canonlab/errors.hpp"

#include <algorithm>
#include <climits>
#include <numeric>

namespace canonlab {

namespace {

void attach_children(RootedTree& t) {
    t.children.assign(t.parent.size(), {});
    for (size_t v = 0; v < t.parent.size(); ++v)
        if (t.parent[v] >= 0) t.children[t.parent[v]].push_back(static_cast<int>(v));
    for (auto& c : t.children) std::sort(c.begin(), c.end());
}

// Vertices grouped by depth, root first; doubles as a reachability check.
std::vector<std::vector<int>> bfs_levels(const RootedTree& t) {
    std::vector<std::vector<int>> levels{{t.root}};
    int seen = 1;
    while (true) {
        std::vector<int> next;
        for (int v : levels.back())
            for (int c : t.children[v]) next.push_back(c);
        if (next.empty()) break;
        seen += static_cast<int>(next.size());
        levels.push_back(std::move(next));
    }
    if (seen != t.size()) throw NotATree("parent arrows do not reach every vertex");
    return levels;
}

// AHU ranks: within each level, rank order equals the byte order of the
// vertices' bracket codes. Keys are sorted child ranks with an INT_MAX
// sentinel; the sentinel makes a key that extends another sort before it,
// matching ')' > '(' in the emitted strings (codes are prefix-free blocks,
// so blockwise comparison is byte comparison).
std::vector<int> ahu_ranks(const RootedTree& t, const std::vector<std::vector<int>>& levels) {
    std::vector<int> rank(t.size(), 0);
    std::vector<std::vector<int>> key(t.size());
    for (auto lvl = levels.rbegin(); lvl != levels.rend(); ++lvl) {
        for (int v : *lvl) {
            auto& k = key[v];
            k.reserve(t.children[v].size() + 1);
            for (int c : t.children[v]) k.push_back(rank[c]);
            std::sort(k.begin(), k.end());
            k.push_back(INT_MAX);
        }
        std::vector<int> order = *lvl;
        std::sort(order.begin(), order.end(),
                  [&](int a, int b) { return key[a] < key[b]; });
        int r = 0;
        for (size_t i = 0; i < order.size(); ++i) {
            if (i > 0 && key[order[i]] != key[order[i - 1]]) ++r;
            rank[order[i]] = r;
        }
        for (int v : *lvl) {
            key[v].clear();
            key[v].shrink_to_fit();
        }
    }
    return rank;
}

// Children of every vertex sorted by (rank, id): code order, deterministic.
std::vector<std::vector<int>> code_ordered_children(const RootedTree& t,
                                                    const std::vector<int>& rank) {
    auto kids = t.children;
    for (auto& c : kids)
        std::sort(c.begin(), c.end(), [&](int a, int b) {
            return std::pair(rank[a], a) < std::pair(rank[b], b);
        });
    return kids;
}

}  // namespace

RootedTree rooted_from_parents(const std::vector<int>& parent) {
    if (parent.empty()) throw NotATree("empty vertex set");
    RootedTree t;
    t.parent = parent;
    t.root = -1;
    int n = static_cast<int>(parent.size());
    for (int v = 0; v < n; ++v) {
        if (parent[v] == -1) {
            if (t.root != -1) throw NotATree("two roots");
            t.root = v;
        } else if (parent[v] < 0 || parent[v] >= n || parent[v] == v) {
            throw NotATree("bad parent index");
        }
    }
    if (t.root == -1) throw NotATree("no root");
    attach_children(t);
    bfs_levels(t);  // rejects parent cycles
    return t;
}

RootedTree rooted_from_graph(const Graph& g, int root) {
    if (g.n == 0) throw NotATree("empty vertex set");
    if (root < 0 || root >= g.n) throw RejectRange(root, g.n);
    if (g.m() != g.n - 1) throw NotATree("edge count is not n-1");
    RootedTree t;
    t.root = root;
    t.parent.assign(g.n, -2);
    t.parent[root] = -1;
    std::vector<int> queue{root};
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : g.adj[v])
            if (t.parent[w] == -2) {
                t.parent[w] = v;
                queue.push_back(w);
            }
    }
    if (static_cast<int>(queue.size()) != g.n) throw NotATree("graph is disconnected");
    attach_children(t);
    return t;
}

TreeCode ahu_code(const RootedTree& t, std::string_view payload) {
    auto levels = bfs_levels(t);
    auto rank = ahu_ranks(t, levels);
    auto kids = code_ordered_children(t, rank);

    TreeCode code;
    code.reserve(2 * static_cast<size_t>(t.size()) + payload.size() + 8);
    // Iterative DFS; an entry with the close flag set emits ')'.
    std::vector<std::pair<int, bool>> stack{{t.root, false}};
    while (!stack.empty()) {
        auto [v, close] = stack.back();
        stack.pop_back();
        if (close) {
            code.push_back(')');
            continue;
        }
        code.push_back('(');
        if (v == t.root && !payload.empty()) {
            code.push_back('#');
            code += std::to_string(payload.size());
            code.push_back(':');
            code.append(payload.data(), payload.size());
        }
        stack.emplace_back(v, true);
        for (auto it = kids[v].rbegin(); it != kids[v].rend(); ++it)
            stack.emplace_back(*it, false);
    }
    return code;
}

std::vector<int> ahu_label(const RootedTree& t) {
    auto levels = bfs_levels(t);
    auto rank = ahu_ranks(t, levels);
    auto kids = code_ordered_children(t, rank);

    std::vector<int> label(t.size(), 0);
    std::vector<int> stack{t.root};
    int next = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        label[v] = next++;
        for (auto it = kids[v].rbegin(); it != kids[v].rend(); ++it) stack.push_back(*it);
    }
    return label;
}

namespace {

// 1 or 2 centers via simultaneous leaf peeling.
std::vector<int> tree_centers(const Graph& g) {
    if (g.n == 1) return {0};
    std::vector<int> deg(g.n);
    std::vector<int> layer;
    for (int v = 0; v < g.n; ++v) {
        deg[v] = g.degree(v);
        if (deg[v] <= 1) layer.push_back(v);
    }
    int remaining = g.n;
    while (remaining > 2) {
        remaining -= static_cast<int>(layer.size());
        std::vector<int> next;
        for (int v : layer)
            for (int w : g.adj[v])
                if (--deg[w] == 1) next.push_back(w);
        layer = std::move(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

}  // namespace

CanonicalForm free_tree_canon(const Graph& g) {
    if (g.n == 0) throw NotATree("empty vertex set");
    if (g.m() != g.n - 1) throw NotATree("edge count is not n-1");
    auto centers = tree_centers(g);
    RootedTree rooted = rooted_from_graph(g, centers[0]);  // also verifies connectivity
    if (centers.size() == 2) {
        RootedTree other = rooted_from_graph(g, centers[1]);
        if (ahu_code(other) < ahu_code(rooted)) rooted = std::move(other);
    }

    CanonicalForm cf;
    cf.status = Status::success;
    cf.labeling = ahu_label(rooted);
    cf.canonical_edges.reserve(g.edges.size());
    for (auto [u, v] : g.edges) {
        int a = cf.labeling[u], b = cf.labeling[v];
        cf.canonical_edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(cf.canonical_edges.begin(), cf.canonical_edges.end());
    cf.certificate = edge_digest(g.n, cf.canonical_edges);
    return cf;
}

}  // namespace canonlab
