#pragma once

#include "canonlab/canonical_form.hpp"
#include "canonlab/graph.hpp"

namespace canonlab {

struct CanonOptions {
    // Label by color order and return when refinement is discrete on a
    // connected input (the classical discrete-CR route). Disabling forces
    // the component pipeline everywhere; both produce canonical forms.
    bool use_fast_path = true;
    // Canonize the complement instead (dense inputs); the returned labeling
    // and certificate still describe the original edge set.
    bool complement = false;
    // Exact-search feasibility bounds: a component enters the fallback when
    // it has at most `fallback_vertex_bound` vertices or at most
    // `fallback_class_bound` non-singleton refinement classes. The search
    // spends at most `fallback_node_cap` refinement calls.
    int fallback_vertex_bound = 64;
    int fallback_class_bound = 20;
    long long fallback_node_cap = 20000;
};

// End-to-end canonical labeling. Routes each connected component (discrete
// refinement -> color order; tree -> center-rooted code; unicyclic -> least
// rotation of the tree-type word; otherwise refinement plus duplex
// individualization, with an exact search fallback), then assembles
// components ordered by (kind, size, certificate). Status is the worst
// component status; not_canonizable appears only when the symmetry
// conditions fail and the fallback is infeasible.
CanonicalForm canon(const Graph& g, const CanonOptions& opts = {});

// Canonical labeling of a connected unicyclic graph: hang each vertex's
// tree as a rooted-tree code letter on the cycle, pick the rotation and
// direction with the lexicographically least word (ties are cycle
// automorphisms, so the certificate is unaffected), then lay out each tree
// block in code order.
CanonicalForm canon_unicyclic(const Graph& g);

// Exact canonization by individualization-refinement search minimizing the
// certificate. Throws TooLarge when the feasibility bounds or the node cap
// are exceeded.
CanonicalForm canon_fallback(const Graph& g, const CanonOptions& opts = {});

}  // namespace canonlab
