#include "canonlab/symmetry.hpp"

#include "canonlab/decomposition.hpp"
#include "canonlab/errors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace canonlab {

namespace {

// Permutation from a swap list (identity elsewhere); rejects overlapping swaps.
std::vector<int> perm_from_swaps(int n, const SwapList& swaps) {
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    for (auto [u, v] : swaps) {
        if (p[u] != u || p[v] != v || u == v)
            throw GraphError("swap list is not a set of disjoint 2-cycles");
        p[u] = v;
        p[v] = u;
    }
    return p;
}

bool is_automorphism(const Graph& g, const std::vector<int>& p) {
    for (auto [u, v] : g.edges)
        if (!g.has_edge(p[u], p[v])) return false;
    return true;
}

std::pair<int, int> norm_pair(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

}  // namespace

SymmetryReport detect_symmetries(const Graph& core, const std::vector<TreeCode>& tree_types) {
    if (static_cast<int>(tree_types.size()) != core.n)
        throw GraphError("tree_types size mismatch");
    PendantStructure ps = pendant_structure(core);
    SymmetryReport rep;

    // A1: reflect each pendant cycle across its anchor when types allow.
    for (const auto& pc : ps.cycles) {
        int k = static_cast<int>(pc.cycle.size()) - 1;  // interior count
        SwapList swaps;
        bool ok = true;
        for (int i = 1; ok && i <= k + 1 - i; ++i) {
            int u = pc.cycle[i], v = pc.cycle[k + 1 - i];
            if (tree_types[u] != tree_types[v]) ok = false;
            else if (u != v) swaps.push_back(norm_pair(u, v));
        }
        if (ok) rep.a1.push_back({pc.anchor, pc.cycle, std::move(swaps)});
    }

    // A2: transpose equal-length pendant paths sharing both endpoints when
    // the type sequences agree read from s to t on both.
    std::map<std::pair<int, int>, std::vector<const PendantStructure::Path*>> by_ends;
    for (const auto& p : ps.paths) by_ends[{p.s, p.t}].push_back(&p);
    for (const auto& [ends, group] : by_ends) {
        for (size_t i = 0; i < group.size(); ++i)
            for (size_t j = i + 1; j < group.size(); ++j) {
                const auto& p1 = group[i]->internal;
                const auto& p2 = group[j]->internal;
                if (p1.size() != p2.size() || p1.empty()) continue;
                bool ok = true;
                for (size_t x = 0; ok && x < p1.size(); ++x)
                    ok = tree_types[p1[x]] == tree_types[p2[x]];
                if (!ok) continue;
                SwapList swaps;
                for (size_t x = 0; x < p1.size(); ++x)
                    swaps.push_back(norm_pair(p1[x], p2[x]));
                rep.a2.push_back({ends.first, ends.second, p1, p2, std::move(swaps)});
            }
    }

    // A3: whole components that are thetas with pairwise distinct path
    // lengths; the reversal swaps the two branch vertices and folds each
    // path onto itself, so each path's type sequence must be a palindrome.
    auto comps = components(core);
    std::vector<int> comp_of(core.n, -1);
    for (size_t c = 0; c < comps.size(); ++c)
        for (int v : comps[c].vertices) comp_of[v] = static_cast<int>(c);
    std::vector<std::vector<const PendantStructure::Path*>> comp_paths(comps.size());
    std::vector<char> comp_has_cycle(comps.size(), 0);
    for (const auto& p : ps.paths) comp_paths[comp_of[p.s]].push_back(&p);
    for (const auto& pc : ps.cycles) comp_has_cycle[comp_of[pc.anchor]] = 1;

    for (size_t c = 0; c < comps.size(); ++c) {
        if (comp_has_cycle[c] || comp_paths[c].size() != 3) continue;
        std::vector<int> branch;
        for (int v : comps[c].vertices)
            if (core.degree(v) >= 3) branch.push_back(v);
        if (branch.size() != 2) continue;
        int s = branch[0], t = branch[1];
        bool shape_ok = true;
        std::set<size_t> lengths;
        size_t interior = 0;
        for (const auto* p : comp_paths[c]) {
            shape_ok = shape_ok && p->s == s && p->t == t;
            lengths.insert(p->internal.size());
            interior += p->internal.size();
        }
        if (!shape_ok || lengths.size() != 3 ||
            interior + 2 != comps[c].vertices.size())
            continue;
        if (tree_types[s] != tree_types[t]) continue;
        SwapList swaps{norm_pair(s, t)};
        bool typed_ok = true;
        std::vector<std::vector<int>> paths;
        for (const auto* p : comp_paths[c]) {
            const auto& in = p->internal;
            for (int x = 0, y = static_cast<int>(in.size()) - 1;
                 typed_ok && x <= y; ++x, --y) {
                if (tree_types[in[x]] != tree_types[in[y]]) typed_ok = false;
                else if (in[x] != in[y]) swaps.push_back(norm_pair(in[x], in[y]));
            }
            paths.push_back(in);
        }
        if (!typed_ok) continue;
        rep.a3.push_back({s, t, std::move(paths), std::move(swaps)});
    }

    std::set<std::pair<int, int>> pairs;
    for (const auto& a : rep.a1) pairs.insert(a.swaps.begin(), a.swaps.end());
    for (const auto& a : rep.a2) pairs.insert(a.swaps.begin(), a.swaps.end());
    rep.interchangeable_pairs.assign(pairs.begin(), pairs.end());

    // Duplex classes of refinement seeded by the tree types.
    std::vector<TreeCode> sorted_types = tree_types;
    std::sort(sorted_types.begin(), sorted_types.end());
    sorted_types.erase(std::unique(sorted_types.begin(), sorted_types.end()),
                       sorted_types.end());
    std::vector<int> initial(core.n);
    for (int v = 0; v < core.n; ++v)
        initial[v] = static_cast<int>(std::lower_bound(sorted_types.begin(),
                                                       sorted_types.end(),
                                                       tree_types[v]) -
                                      sorted_types.begin());
    Coloring col = cr_stable(core, initial);
    for (const auto& cls : col.classes)
        if (cls.size() == 2) rep.duplex_classes.push_back(norm_pair(cls[0], cls[1]));
    std::sort(rep.duplex_classes.begin(), rep.duplex_classes.end());
    return rep;
}

namespace {

constexpr size_t kElementCap = 1u << 20;
constexpr long long kNodeCap = 200'000'000;

void search_autos(const Graph& g, const std::vector<int>* colors, int v,
                  std::vector<int>& map, std::vector<int>& inverse,
                  std::vector<std::vector<int>>& out, long long& nodes) {
    int n = g.n;
    if (v == n) {
        out.push_back(map);
        if (out.size() > kElementCap) throw TooLarge("automorphism count exceeds cap");
        return;
    }
    int mapped_nbrs = 0;
    for (int u : g.adj[v])
        if (u < v) ++mapped_nbrs;
    for (int w = 0; w < n; ++w) {
        if (inverse[w] != -1) continue;
        if (g.degree(w) != g.degree(v)) continue;
        if (colors && (*colors)[w] != (*colors)[v]) continue;
        if (++nodes > kNodeCap) throw TooLarge("automorphism search exceeds node cap");
        int hits = 0;
        bool ok = true;
        for (int x : g.adj[w]) {
            int pre = inverse[x];
            if (pre == -1) continue;
            if (!g.has_edge(v, pre)) {
                ok = false;
                break;
            }
            ++hits;
        }
        if (!ok || hits != mapped_nbrs) continue;
        map[v] = w;
        inverse[w] = v;
        search_autos(g, colors, v + 1, map, inverse, out, nodes);
        inverse[w] = -1;
    }
    map[v] = -1;
}

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

// Closure of gens under composition, capped; seeds with the identity.
std::set<std::vector<int>> group_closure(int n, const std::vector<std::vector<int>>& gens,
                                         size_t cap) {
    std::vector<int> id(n);
    for (int i = 0; i < n; ++i) id[i] = i;
    std::set<std::vector<int>> have{id};
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& f : frontier)
            for (const auto& gen : gens) {
                auto e = compose(gen, f);
                if (have.insert(e).second) {
                    next.push_back(std::move(e));
                    if (have.size() > cap) throw TooLarge("group closure exceeds cap");
                }
            }
        frontier = std::move(next);
    }
    return have;
}

// Reduce an element list to a generating subset via incremental closure;
// worth doing only for small groups.
std::vector<std::vector<int>> reduce_generators(int n,
                                                const std::vector<std::vector<int>>& elems) {
    std::vector<std::vector<int>> gens;
    std::set<std::vector<int>> have = group_closure(n, gens, kElementCap);
    for (const auto& e : elems) {
        if (have.count(e)) continue;
        gens.push_back(e);
        have = group_closure(n, gens, kElementCap);
    }
    return gens;
}

AutomorphismGroup duplex_route(const Graph& g,
                               const std::vector<std::pair<int, int>>& pairs) {
    int k = static_cast<int>(pairs.size());
    // Only edges touching a swappable vertex can move.
    std::vector<char> movable(g.n, 0);
    for (auto [u, v] : pairs) movable[u] = movable[v] = 1;
    std::vector<std::pair<int, int>> check;
    for (auto [u, v] : g.edges)
        if (movable[u] || movable[v]) check.emplace_back(u, v);

    std::vector<int> perm(g.n);
    for (int i = 0; i < g.n; ++i) perm[i] = i;
    std::vector<unsigned long long> valid;
    for (unsigned long long mask = 0; mask < (1ull << k); ++mask) {
        for (int b = 0; b < k; ++b)
            if (mask >> b & 1) {
                perm[pairs[b].first] = pairs[b].second;
                perm[pairs[b].second] = pairs[b].first;
            }
        bool ok = true;
        for (auto [u, v] : check)
            if (!g.has_edge(perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok) valid.push_back(mask);
        for (int b = 0; b < k; ++b)
            if (mask >> b & 1) {
                perm[pairs[b].first] = pairs[b].first;
                perm[pairs[b].second] = pairs[b].second;
            }
    }

    // Valid masks form a GF(2) subspace (composition is xor); extract a basis.
    std::vector<unsigned long long> basis;
    for (unsigned long long m : valid) {
        for (unsigned long long b : basis) m = std::min(m, m ^ b);
        if (m != 0) basis.push_back(m);
    }
    std::sort(basis.begin(), basis.end());

    AutomorphismGroup out;
    out.order = 1ull << basis.size();
    for (unsigned long long m : basis) {
        SwapList swaps;
        for (int b = 0; b < k; ++b)
            if (m >> b & 1) swaps.push_back(pairs[b]);
        out.generators.push_back(perm_from_swaps(g.n, swaps));
    }
    return out;
}

}  // namespace

AutomorphismGroup brute_force_aut(const Graph& g, const std::vector<int>* colors,
                                  int vertex_bound, int duplex_bound) {
    if (colors) {
        if (static_cast<int>(colors->size()) != g.n)
            throw GraphError("color vector size mismatch");
        std::map<int, std::vector<int>> classes;
        for (int v = 0; v < g.n; ++v) classes[(*colors)[v]].push_back(v);
        bool small = true;
        std::vector<std::pair<int, int>> pairs;
        for (const auto& [c, members] : classes) {
            if (members.size() > 2) small = false;
            if (members.size() == 2) pairs.emplace_back(members[0], members[1]);
        }
        if (small && static_cast<int>(pairs.size()) <= duplex_bound)
            return duplex_route(g, pairs);
    }
    if (g.n > vertex_bound)
        throw TooLarge("graph exceeds the brute-force vertex bound");

    std::vector<std::vector<int>> all;
    std::vector<int> map(g.n, -1), inverse(g.n, -1);
    long long nodes = 0;
    search_autos(g, colors, 0, map, inverse, all, nodes);

    AutomorphismGroup out;
    out.order = all.size();
    if (out.order <= 4096) {
        out.generators = reduce_generators(g.n, all);
    } else {
        for (const auto& e : all) {
            bool id = true;
            for (size_t i = 0; i < e.size() && id; ++i) id = e[i] == static_cast<int>(i);
            if (!id) out.generators.push_back(e);
        }
    }
    return out;
}

GroupVerdict verify_group_structure(const SymmetryReport& report, const Graph& g,
                                    const std::vector<int>* colors, int vertex_bound,
                                    int duplex_bound) {
    std::vector<std::vector<int>> gens;
    for (const auto& a : report.a1) gens.push_back(perm_from_swaps(g.n, a.swaps));
    for (const auto& a : report.a2) gens.push_back(perm_from_swaps(g.n, a.swaps));
    for (const auto& a : report.a3) gens.push_back(perm_from_swaps(g.n, a.swaps));

    GroupVerdict v{};
    v.involutions_ok = true;
    for (const auto& p : gens) {
        bool nontrivial = false;
        for (size_t i = 0; i < p.size(); ++i) nontrivial = nontrivial || p[i] != static_cast<int>(i);
        v.involutions_ok = v.involutions_ok && nontrivial && is_automorphism(g, p);
    }
    v.commute_ok = true;
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            v.commute_ok = v.commute_ok &&
                           compose(gens[i], gens[j]) == compose(gens[j], gens[i]);

    v.generated_order = group_closure(g.n, gens, 1u << 22).size();
    v.independent = gens.size() < 63 && v.generated_order == (1ull << gens.size());

    AutomorphismGroup full = brute_force_aut(g, colors, vertex_bound, duplex_bound);
    v.full_order = full.order;
    v.equals_full = v.full_order == v.generated_order;
    return v;
}

ComplexConditions complex_part_conditions(const Graph& h) {
    for (const auto& comp : components(h))
        if (comp.excess() < 1)
            throw GraphError("complex_part_conditions: component is not complex");

    ComplexConditions cc{};
    Coloring col = cr_stable(h);
    CoreDecomposition d = two_core(h);
    cc.core_size = d.core.n;

    std::map<int, std::vector<int>> core_classes;  // full-graph class id -> core ids
    for (int i = 0; i < d.core.n; ++i)
        core_classes[col.class_of[d.core_vertices[i]]].push_back(i);

    std::vector<TreeCode> types(d.core.n);
    for (int i = 0; i < d.core.n; ++i)
        types[i] = ahu_code(rooted_from_parents(d.attached[i].parent));
    cc.report = detect_symmetries(d.core, types);
    cc.a1 = static_cast<int>(cc.report.a1.size());
    cc.a2 = static_cast<int>(cc.report.a2.size());
    cc.a3 = static_cast<int>(cc.report.a3.size());

    std::set<std::pair<int, int>> inter(cc.report.interchangeable_pairs.begin(),
                                        cc.report.interchangeable_pairs.end());
    for (const auto& [cls, members] : core_classes) {
        cc.max_core_class = std::max(cc.max_core_class, static_cast<int>(members.size()));
        if (members.size() == 2) {
            ++cc.duplex_count;
            if (!inter.count(norm_pair(members[0], members[1]))) ++cc.uncovered_duplex;
        }
    }
    cc.ok = cc.max_core_class <= 2 && cc.uncovered_duplex == 0;
    return cc;
}

}  // namespace canonlab
