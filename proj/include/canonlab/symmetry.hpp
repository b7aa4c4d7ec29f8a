#pragma once

#include "canonlab/graph.hpp"
#include "canonlab/refinement.hpp"
#include "canonlab/tree_canon.hpp"

#include <utility>
#include <vector>

namespace canonlab {

// Involutions are stored as their 2-cycles; unlisted vertices are fixed.
using SwapList = std::vector<std::pair<int, int>>;

struct SymmetryReport {
    struct A1 {  // reflection of a pendant cycle across its anchor
        int anchor;
        std::vector<int> cycle;
        SwapList swaps;
    };
    struct A2 {  // transposition of two pendant paths sharing both endpoints
        int s, t;
        std::vector<int> path1, path2;
        SwapList swaps;
    };
    struct A3 {  // end-for-end reversal of a theta component with pairwise
                 // distinct path lengths
        int s, t;
        std::vector<std::vector<int>> paths;
        SwapList swaps;
    };
    std::vector<A1> a1;
    std::vector<A2> a2;
    std::vector<A3> a3;
    // Union of the 2-cycles of a1 and a2; always core-degree-2 vertices.
    // A3 orbits are excluded: its reversal moves the two branch vertices.
    SwapList interchangeable_pairs;
    // Size-2 classes of refinement on the core seeded with tree-type colors.
    SwapList duplex_classes;
};

// Inventories the symmetry generators of a 2-core whose vertex x carries
// the attached-tree type tree_types[x]; a swap is reported only when it
// preserves those types (so it extends to the full graph). Pass uniform
// types to analyze the bare core.
SymmetryReport detect_symmetries(const Graph& core, const std::vector<TreeCode>& tree_types);

struct AutomorphismGroup {
    std::vector<std::vector<int>> generators;
    unsigned long long order = 1;
};

// Exact (color-preserving) automorphism group. Two routes: if `colors` is a
// stable coloring with classes of size <= 2 and at most duplex_bound duplex
// classes, enumerate the 2^k class-respecting swap masks (their valid subset
// is a GF(2) subspace: every member is an involution, so the group is
// elementary abelian); otherwise backtrack over all of V when
// n <= vertex_bound. TooLarge when neither route fits.
AutomorphismGroup brute_force_aut(const Graph& g, const std::vector<int>* colors = nullptr,
                                  int vertex_bound = 64, int duplex_bound = 20);

struct GroupVerdict {
    bool involutions_ok;   // every reported swap list is an automorphism of order 2
    bool commute_ok;       // generators pairwise commute
    bool independent;      // generated order == 2^(number of generators)
    bool equals_full;      // generated group == full (color-preserving) group
    unsigned long long generated_order;
    unsigned long long full_order;
};

// Checks the group-structure claims of the report against brute force.
GroupVerdict verify_group_structure(const SymmetryReport& report, const Graph& g,
                                    const std::vector<int>* colors = nullptr,
                                    int vertex_bound = 64, int duplex_bound = 20);

struct ComplexConditions {
    bool ok;
    int core_size = 0;
    int max_core_class = 0;    // largest refinement class restricted to the core
    int duplex_count = 0;      // core classes of exactly two vertices
    int uncovered_duplex = 0;  // duplex classes that are not interchangeable pairs
    int a1 = 0, a2 = 0, a3 = 0;
    SymmetryReport report;  // typed detection on the core
};

// Sufficient conditions for the post-processing pipeline on a complex part
// (every component of h must have more edges than vertices): refinement
// classes restricted to the core all have size <= 2 and every duplex class
// is an interchangeable pair. An A3 reversal is never interchangeable, so
// the second clause also rejects the critical theta patterns.
ComplexConditions complex_part_conditions(const Graph& h);

}  // namespace canonlab
