#include "canonlab/identifiability.hpp"

#include "canonlab/decomposition.hpp"
#include "canonlab/errors.hpp"
#include "canonlab/symmetry.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace canonlab {

UnicyclicProfile unicyclic_profile(const Graph& g) {
    auto comps = components(g);
    if (comps.size() != 1 || comps[0].kind != ComponentClass::Kind::unicyclic)
        throw NotUnicyclic("input is not connected with exactly one cycle");

    CoreDecomposition d = two_core(g);
    PendantStructure ps = pendant_structure(d.core);
    // The 2-core of a unicyclic graph is its one bare cycle.
    if (ps.cycle_components.size() != 1 || !ps.paths.empty() || !ps.cycles.empty())
        throw NotUnicyclic("core is not a single bare cycle");

    UnicyclicProfile pr;
    pr.c = static_cast<int>(ps.cycle_components[0].size());
    for (int core_id : ps.cycle_components[0]) {
        pr.cycle.push_back(d.core_vertices[core_id]);
        pr.word.letters.push_back(
            ahu_code(rooted_from_parents(d.attached[core_id].parent)));
    }
    pr.p = minimal_period(pr.word);
    pr.period_word = canonical_period_word(pr.word);
    pr.tree_type_set = pr.word.letters;
    std::sort(pr.tree_type_set.begin(), pr.tree_type_set.end());
    pr.tree_type_set.erase(std::unique(pr.tree_type_set.begin(), pr.tree_type_set.end()),
                           pr.tree_type_set.end());
    return pr;
}

namespace {

bool profile_identifiable(const UnicyclicProfile& pr) {
    if (pr.p == 1) return pr.c >= 3 && pr.c <= 5;
    if (pr.p == 2) return pr.c == 4 || pr.c == 6;
    return pr.p == pr.c;
}

}  // namespace

bool unicyclic_identifiable(const Graph& g) {
    return profile_identifiable(unicyclic_profile(g));
}

bool uc_equivalent(const Graph& g, const Graph& h) {
    return unicyclic_profile(g).period_word == unicyclic_profile(h).period_word;
}

IdentifiabilityVerdict simple_part_identifiable(const Graph& g) {
    auto comps = components(g);
    std::vector<std::pair<int, UnicyclicProfile>> cyclic;
    for (size_t i = 0; i < comps.size(); ++i) {
        if (comps[i].kind != ComponentClass::Kind::unicyclic) continue;
        cyclic.emplace_back(static_cast<int>(i),
                            unicyclic_profile(induced_subgraph(g, comps[i].vertices)));
    }
    IdentifiabilityVerdict v;
    for (const auto& [idx, pr] : cyclic)
        if (!profile_identifiable(pr)) {
            v.ok = false;
            v.witness = IdentifiabilityVerdict::Witness::unicyclic_component;
            v.witness_components = {idx};
            return v;
        }
    std::map<std::vector<TreeCode>, int> seen;
    for (const auto& [idx, pr] : cyclic) {
        auto [it, fresh] = seen.try_emplace(pr.period_word, idx);
        if (!fresh) {
            v.ok = false;
            v.witness = IdentifiabilityVerdict::Witness::uc_equivalent_pair;
            v.witness_components = {it->second, idx};
            return v;
        }
    }
    return v;
}

IdentifiabilityVerdict graph_identifiable(const Graph& g) {
    IdentifiabilityVerdict v = simple_part_identifiable(g);
    if (!v.ok) return v;

    auto comps = components(g);
    std::vector<int> complex_vertices;
    std::vector<int> complex_indices;
    for (size_t i = 0; i < comps.size(); ++i)
        if (comps[i].kind == ComponentClass::Kind::complex_) {
            complex_indices.push_back(static_cast<int>(i));
            complex_vertices.insert(complex_vertices.end(), comps[i].vertices.begin(),
                                    comps[i].vertices.end());
        }
    if (complex_indices.empty()) return v;

    std::sort(complex_vertices.begin(), complex_vertices.end());
    ComplexConditions cc = complex_part_conditions(induced_subgraph(g, complex_vertices));
    if (!cc.ok) {
        v.ok = false;
        v.witness = IdentifiabilityVerdict::Witness::undetermined_complex;
        v.witness_components = complex_indices;
    }
    return v;
}

namespace {

// Appends a copy of `tree` rooted at the existing vertex `at`.
void graft(std::vector<std::pair<int, int>>& edges, int& next, int at,
           const AttachedTree& tree) {
    std::vector<int> to(tree.vertices.size());
    to[0] = at;
    for (size_t i = 1; i < tree.vertices.size(); ++i) {
        to[i] = next++;
        edges.emplace_back(to[tree.parent[i]], to[i]);
    }
}

}  // namespace

Graph cr_equivalent_counterexample(const Graph& g) {
    UnicyclicProfile pr = unicyclic_profile(g);
    if (profile_identifiable(pr))
        throw GraphError("graph is identifiable; no counterexample exists");

    // One representative hanging tree per position of the period.
    CoreDecomposition d = two_core(g);
    std::vector<const AttachedTree*> rep(pr.p);
    for (int j = 0; j < pr.p; ++j) rep[j] = &d.attached[d.core_index[pr.cycle[j]]];

    // Split c into two valid decorated cycle lengths, both multiples of p.
    int first = pr.p == 1 ? 3 : pr.p == 2 ? 4 : pr.p;
    std::vector<int> lengths{first, pr.c - first};

    Graph out;
    bool have = false;
    for (int len : lengths) {
        std::vector<std::pair<int, int>> edges;
        int next = len;
        for (int i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);
        for (int i = 0; i < len; ++i) graft(edges, next, i, *rep[i % pr.p]);
        Graph comp = build_graph(next, edges);
        out = have ? disjoint_union(out, comp) : comp;
        have = true;
    }
    return out;
}

}  // namespace canonlab
