#include "canonlab/pipeline.hpp"

#include <algorithm>
#include <utility>

#include "canonlab/decomposition.hpp"
#include "canonlab/errors.hpp"
#include "canonlab/refinement.hpp"
#include "canonlab/symmetry.hpp"
#include "canonlab/tree_canon.hpp"
#include "canonlab/words.hpp"

namespace canonlab {

namespace {

CanonicalForm form_from_labeling(const Graph& g, std::vector<int> labeling,
                                 Status status) {
    CanonicalForm f;
    f.status = status;
    f.canonical_edges.reserve(g.edges.size());
    for (auto [u, v] : g.edges) {
        int a = labeling[u], b = labeling[v];
        f.canonical_edges.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(f.canonical_edges.begin(), f.canonical_edges.end());
    f.labeling = std::move(labeling);
    f.certificate = edge_digest(g.n, f.canonical_edges);
    return f;
}

// Discrete refinement labels directly: class ids are canonical, so rank
// order is a canonical labeling.
CanonicalForm bes_form(const Graph& g, const Coloring& col) {
    std::vector<int> labeling(g.n);
    for (int v = 0; v < g.n; ++v) labeling[v] = col.class_of[v] + 1;
    return form_from_labeling(g, std::move(labeling), Status::success);
}

struct IrSearch {
    const Graph& g;
    long long budget;
    long long nodes = 0;
    bool have_best = false;
    std::vector<std::pair<int, int>> best_edges{};
    std::vector<int> best_labeling{};

    void candidate(const Coloring& col) {
        std::vector<int> labeling(g.n);
        for (int v = 0; v < g.n; ++v) labeling[v] = col.class_of[v] + 1;
        std::vector<std::pair<int, int>> edges;
        edges.reserve(g.edges.size());
        for (auto [u, v] : g.edges) {
            int a = labeling[u], b = labeling[v];
            edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(edges.begin(), edges.end());
        if (!have_best || edges < best_edges) {
            have_best = true;
            best_edges = std::move(edges);
            best_labeling = std::move(labeling);
        }
    }

    void run(const Coloring& col) {
        if (++nodes > budget) throw TooLarge("fallback search exceeded its node cap");
        if (is_discrete(col)) {
            candidate(col);
            return;
        }
        int target = -1;
        for (int c = 0; c < col.class_count(); ++c)
            if (col.classes[c].size() >= 2) {
                target = c;
                break;
            }
        for (int v : col.classes[target]) {
            std::vector<int> initial(g.n);
            for (int u = 0; u < g.n; ++u) initial[u] = 2 * col.class_of[u];
            initial[v] -= 1;
            run(cr_stable(g, initial));
        }
    }
};

// Conditioned route: individualize one member of each duplex core class in
// ascending class order until the core is discrete. Either member yields
// the same certificate because a duplex class under the verified
// conditions is an orbit of the automorphism group.
CanonicalForm canon_conditioned(const Graph& h, const CoreDecomposition& d) {
    std::vector<char> in_core(h.n, 0);
    for (int v : d.core_vertices) in_core[v] = 1;
    Coloring col = cr_stable(h);
    for (int guard = 0; guard <= h.n; ++guard) {
        int pick = -1;
        for (int c = 0; c < col.class_count() && pick < 0; ++c) {
            int first = -1, core_members = 0;
            for (int v : col.classes[c])
                if (in_core[v]) {
                    if (first < 0) first = v;
                    ++core_members;
                }
            if (core_members >= 2) pick = first;
        }
        if (pick < 0) break;
        std::vector<int> initial(h.n);
        for (int u = 0; u < h.n; ++u) initial[u] = 2 * col.class_of[u];
        initial[pick] -= 1;
        col = cr_stable(h, initial);
    }

    std::vector<int> order = d.core_vertices;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return col.class_of[a] < col.class_of[b]; });
    std::vector<int> labeling(h.n, 0);
    int offset = 0;
    for (int x : order) {
        const AttachedTree& t = d.attached[d.core_index[x]];
        RootedTree rt = rooted_from_parents(t.parent);
        std::vector<int> local = ahu_label(rt);
        for (int j = 0; j < t.size(); ++j) labeling[t.vertices[j]] = offset + local[j];
        offset += t.size();
    }
    return form_from_labeling(h, std::move(labeling), Status::success);
}

CanonicalForm canon_complex(const Graph& h, const CanonOptions& opts) {
    auto cc = complex_part_conditions(h);
    if (cc.ok) return canon_conditioned(h, two_core(h));
    try {
        return canon_fallback(h, opts);
    } catch (const TooLarge&) {
        std::vector<int> identity(h.n);
        for (int v = 0; v < h.n; ++v) identity[v] = v + 1;
        return form_from_labeling(h, std::move(identity), Status::not_canonizable);
    }
}

CanonicalForm canon_component(const Graph& h, ComponentClass::Kind kind,
                              const CanonOptions& opts) {
    Coloring col = cr_stable(h);
    if (is_discrete(col)) return bes_form(h, col);
    switch (kind) {
        case ComponentClass::Kind::tree:
            return free_tree_canon(h);
        case ComponentClass::Kind::unicyclic:
            return canon_unicyclic(h);
        case ComponentClass::Kind::complex_:
            return canon_complex(h, opts);
    }
    throw GraphError("unreachable component kind");
}

int kind_rank(ComponentClass::Kind k) {
    switch (k) {
        case ComponentClass::Kind::tree: return 0;
        case ComponentClass::Kind::unicyclic: return 1;
        case ComponentClass::Kind::complex_: return 2;
    }
    return 3;
}

}  // namespace

CanonicalForm canon_unicyclic(const Graph& g) {
    auto comps = components(g);
    if (comps.size() != 1 || comps[0].kind != ComponentClass::Kind::unicyclic)
        throw NotUnicyclic("canon_unicyclic needs one connected unicyclic component");
    CoreDecomposition d = two_core(g);
    auto ps = pendant_structure(d.core);
    const std::vector<int>& walk = ps.cycle_components.front();  // core ids
    int c = static_cast<int>(walk.size());

    std::vector<RootedTree> trees;
    std::vector<TreeCode> letters(c);
    trees.reserve(c);
    for (int i = 0; i < c; ++i) {
        trees.push_back(rooted_from_parents(d.attached[walk[i]].parent));
        letters[i] = ahu_code(trees[i]);
    }

    // Rank letters, take the least rotation in both walk directions, keep
    // the smaller word. Ties across rotations or directions are cycle
    // automorphisms, so any choice yields the same certificate.
    std::vector<TreeCode> sorted = letters;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> fwd(c), rev(c);
    for (int i = 0; i < c; ++i) {
        fwd[i] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(),
                                                   letters[i]) -
                                  sorted.begin());
        rev[c - 1 - i] = fwd[i];
    }
    int rf = least_rotation_index(fwd);
    int rb = least_rotation_index(rev);
    bool backward = false;
    for (int i = 0; i < c; ++i) {
        int a = fwd[(rf + i) % c], b = rev[(rb + i) % c];
        if (a != b) {
            backward = b < a;
            break;
        }
    }

    std::vector<int> labeling(g.n, 0);
    int offset = 0;
    for (int i = 0; i < c; ++i) {
        int pos = backward ? c - 1 - (rb + i) % c : (rf + i) % c;
        const AttachedTree& t = d.attached[walk[pos]];
        std::vector<int> local = ahu_label(trees[pos]);
        for (int j = 0; j < t.size(); ++j) labeling[t.vertices[j]] = offset + local[j];
        offset += t.size();
    }
    return form_from_labeling(g, std::move(labeling), Status::success);
}

CanonicalForm canon_fallback(const Graph& g, const CanonOptions& opts) {
    Coloring col = cr_stable(g);
    if (g.n > opts.fallback_vertex_bound) {
        int nonsingleton = 0;
        for (const auto& cls : col.classes) nonsingleton += cls.size() >= 2;
        if (nonsingleton > opts.fallback_class_bound)
            throw TooLarge("component too large for the exact fallback");
    }
    IrSearch search{.g = g, .budget = opts.fallback_node_cap};
    search.run(col);
    CanonicalForm f;
    f.status = Status::fallback_used;
    f.labeling = std::move(search.best_labeling);
    f.canonical_edges = std::move(search.best_edges);
    f.certificate = edge_digest(g.n, f.canonical_edges);
    return f;
}

CanonicalForm canon(const Graph& g, const CanonOptions& opts) {
    if (opts.complement) {
        CanonOptions inner = opts;
        inner.complement = false;
        CanonicalForm cf = canon(complement_graph(g), inner);
        return form_from_labeling(g, std::move(cf.labeling), cf.status);
    }

    auto comps = components(g);
    if (opts.use_fast_path && comps.size() <= 1) {
        Coloring col = cr_stable(g);
        if (is_discrete(col)) return bes_form(g, col);
    }

    struct Piece {
        int rank;
        int size;
        CanonicalForm form;
        const std::vector<int>* verts;
    };
    std::vector<Piece> pieces;
    pieces.reserve(comps.size());
    Status status = Status::success;
    for (const auto& comp : comps) {
        Graph h = induced_subgraph(g, comp.vertices);
        CanonicalForm f = canon_component(h, comp.kind, opts);
        status = std::max(status, f.status);
        pieces.push_back({kind_rank(comp.kind), static_cast<int>(comp.vertices.size()),
                          std::move(f), &comp.vertices});
    }
    std::sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
        if (a.rank != b.rank) return a.rank < b.rank;
        if (a.size != b.size) return a.size < b.size;
        return a.form.certificate < b.form.certificate;
    });

    std::vector<int> labeling(g.n, 0);
    int offset = 0;
    for (const auto& p : pieces) {
        for (int j = 0; j < p.size; ++j)
            labeling[(*p.verts)[j]] = offset + p.form.labeling[j];
        offset += p.size;
    }
    return form_from_labeling(g, std::move(labeling), status);
}

}  // namespace canonlab
