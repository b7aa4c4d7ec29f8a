#pragma once

#include <vector>

#include "canonlab/graph.hpp"

namespace canonlab {

// Stable coloring produced by color refinement. Class ids are canonical:
// they are assigned by lexicographic order of the per-round signature
// history (initial color value, then (previous class, sorted multiset of
// neighbor classes) per round), so isomorphic graphs receive identical
// class-id multisets and equal initial colorings refine to equal colorings.
struct Coloring {
    std::vector<int> class_of;          // vertex -> class id, ids dense from 0
    std::vector<std::vector<int>> classes;  // class id -> sorted members
    int rounds = 0;                     // refinement rounds executed

    int class_count() const { return static_cast<int>(classes.size()); }
};

// Runs color refinement to the coarsest stable partition refining `initial`
// (uniform when absent). Initial colors are arbitrary ints; their values are
// rank-compressed, so only the induced partition and the value order matter.
Coloring cr_stable(const Graph& g);
Coloring cr_stable(const Graph& g, const std::vector<int>& initial);

bool is_discrete(const Coloring& c);

struct DistinguishResult {
    bool distinguished;  // true iff the stable color multisets of g and h differ
    Coloring joint;      // stable coloring of the disjoint union, g first
};

// Color refinement on the disjoint union with synchronized (canonical)
// renaming; the g/h color multisets are compared classwise.
DistinguishResult cr_distinguish(const Graph& g, const Graph& h);

}  // namespace canonlab
