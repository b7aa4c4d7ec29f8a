#pragma once

#include <iosfwd>
#include <utility>
#include <vector>

#include "canonlab/errors.hpp"

namespace canonlab {

// Simple undirected graph on vertices 0..n-1. Edges are stored with u < v,
// sorted and duplicate-free; adjacency lists are sorted.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adj;

    int m() const { return static_cast<int>(edges.size()); }
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    bool has_edge(int u, int v) const;
};

// Validates vertex ranges, rejects self-loops, dedupes parallel input edges.
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Fast path for internally generated edge lists that are already known to be
// loop-free, in range and duplicate-free (asserted in debug builds).
Graph build_graph_unchecked(int n, std::vector<std::pair<int, int>> edges);

struct ComponentClass {
    enum class Kind { tree, unicyclic, complex_ };
    Kind kind;
    std::vector<int> vertices;  // sorted
    long edge_count;
    long excess() const { return edge_count - static_cast<long>(vertices.size()); }
};

std::vector<ComponentClass> components(const Graph& g);

// Induced subgraph on a sorted vertex list; out_map[i] = original id of new
// vertex i.
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices);

Graph apply_permutation(const Graph& g, const std::vector<int>& perm);

Graph complement_graph(const Graph& g);

Graph disjoint_union(const Graph& a, const Graph& b);

// Interchange format: header "n m" then one "u v" line per edge.
Graph read_edgelist(std::istream& in);
void write_edgelist(const Graph& g, std::ostream& out);

// Multigraph with edge lengths; loops allowed, parallel edges allowed.
// Vertex degrees count loops twice.
struct Multigraph {
    struct Edge {
        int u, v;    // u <= v
        int length;  // number of core edges the kernel edge was contracted from
        int id;
    };
    int n = 0;
    std::vector<Edge> edges;

    std::vector<int> degrees() const;
};

// Validates the shared shape invariants: every degree >= 3, lengths >= 1.
Multigraph build_multigraph(int n, std::vector<Multigraph::Edge> edges);

}  // namespace canonlab
