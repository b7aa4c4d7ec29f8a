#pragma once

#include "canonlab/graph.hpp"

#include <vector>

namespace canonlab {

// Tree hanging off a single core vertex. vertices[0] is the core root
// (an index into the parent graph); parent[i] is the position in
// `vertices` of the parent of vertices[i], with parent[0] == -1.
// Vertices appear in BFS order from the root, children visited in
// ascending vertex id, so the layout is deterministic.
struct AttachedTree {
    std::vector<int> vertices;
    std::vector<int> parent;
    int size() const { return static_cast<int>(vertices.size()); }
};

// Result of iteratively deleting degree <= 1 vertices.
struct CoreDecomposition {
    Graph core;                          // induced on the surviving vertices
    std::vector<int> core_vertices;      // ascending original ids; core vertex i = core_vertices[i]
    std::vector<int> core_index;         // original id -> core id, -1 off the core
    std::vector<AttachedTree> attached;  // indexed by core id; attached[i].vertices[0] == core_vertices[i]
    std::vector<AttachedTree> non_core_forest;  // one tree per coreless (acyclic) component,
                                                // rooted at its smallest vertex id
};

CoreDecomposition two_core(const Graph& g);

// Contracts every maximal path of degree-2 core vertices to a single
// weighted edge between branch vertices (degree >= 3 in the core). A
// pendant cycle re-entering its branch vertex becomes a loop. Vertex i of
// the result is branch_vertices[i] of `core`. Requires every component of
// `core` to contain a branch vertex; a bare cycle raises
// PureCycleComponent. `core` must have minimum degree 2.
struct KernelDecomposition {
    Multigraph kernel;
    std::vector<int> branch_vertices;  // ascending core ids
    std::vector<int> branch_index;     // core id -> kernel id, -1 if degree 2
};

KernelDecomposition kernel(const Graph& core);

// Degree-2 chains of a 2-core, listed explicitly. A pendant path runs
// between branch vertices s < t (or s == t with the two attachment edges
// distinguished); `internal` lists its degree-2 vertices in order from s
// to t, smaller-neighbor-first when s == t. A pendant cycle meets the
// branch set only at `anchor`; `cycle` lists the full closed walk
// anchor, v1, ..., vk (smaller anchor-neighbor first). Components with no
// branch vertex are reported as bare cycles, each listed from its
// smallest vertex toward its smaller neighbor.
struct PendantStructure {
    struct Path {
        int s, t;
        std::vector<int> internal;
    };
    struct Cycle {
        int anchor;
        std::vector<int> cycle;
    };
    std::vector<Path> paths;
    std::vector<Cycle> cycles;
    std::vector<std::vector<int>> cycle_components;
};

PendantStructure pendant_structure(const Graph& core);

// Inverse of kernel contraction: vertex i < mg.n keeps its id, each edge
// of length L gains L-1 fresh internal vertices appended in edge order.
Graph subdivide(const Multigraph& mg);

}  // namespace canonlab
