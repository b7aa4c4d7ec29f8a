#pragma once

#include "canonlab/canonical_form.hpp"
#include "canonlab/graph.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace canonlab {

// Rooted tree over vertex ids 0..size()-1. parent[root] == -1; children
// lists are derived from parent and kept in ascending id order.
struct RootedTree {
    int root = 0;
    std::vector<int> parent;
    std::vector<std::vector<int>> children;
    int size() const { return static_cast<int>(parent.size()); }
};

// parent[i] is the parent id of vertex i, -1 exactly at the root.
// Throws NotATree unless the arrows form one tree.
RootedTree rooted_from_parents(const std::vector<int>& parent);

// Orients a connected acyclic graph away from `root`; NotATree otherwise.
RootedTree rooted_from_graph(const Graph& g, int root);

// Canonical bracket code: code(v) = '(' + child codes in ascending byte
// order + ')'. Equal codes ⟺ rooted-isomorphic (payloads respected). A
// nonempty payload is spliced in as "#<len>:<bytes>" right after the
// root's '(' so it cannot be confused with shape bytes. Computed by
// level-wise integer renaming, so deep paths do not recurse.
using TreeCode = std::string;
TreeCode ahu_code(const RootedTree& t, std::string_view payload = {});

// Preorder ranks 1..size with siblings visited in code order; isomorphic
// rooted trees receive identical labeled edge sets.
std::vector<int> ahu_label(const RootedTree& t);

// Roots at the tree center (smaller-code endpoint when bicentral; ties
// there are automorphic, so either pick yields the same form), then labels
// with ahu_label.
CanonicalForm free_tree_canon(const Graph& t);

}  // namespace canonlab
