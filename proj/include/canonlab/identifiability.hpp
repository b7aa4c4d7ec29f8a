#pragma once

#include "canonlab/graph.hpp"
#include "canonlab/words.hpp"

#include <vector>

namespace canonlab {

struct UnicyclicProfile {
    int c = 0;                          // cycle length
    int p = 0;                          // minimal period of the type word
    std::vector<int> cycle;             // cycle vertices in word order
    CircularWord word;                  // word.letters[i] = type of cycle[i]
    std::vector<TreeCode> period_word;  // canonical (rotation/direction-free)
    std::vector<TreeCode> tree_type_set;  // distinct letters, sorted
};

// Types the hanging trees around the unique cycle. NotUnicyclic unless g is
// connected with exactly one cycle.
UnicyclicProfile unicyclic_profile(const Graph& g);

// True ⟺ (p=1 ∧ c∈{3,4,5}) ∨ (p=2 ∧ c∈{4,6}) ∨ (p=c): exactly the cases
// where no smaller decorated cycle shares the universal cover.
bool unicyclic_identifiable(const Graph& g);

// True ⟺ the two type words share a common period, i.e. equal canonical
// period words.
bool uc_equivalent(const Graph& g, const Graph& h);

struct IdentifiabilityVerdict {
    enum class Witness { none, unicyclic_component, uc_equivalent_pair, undetermined_complex };
    bool ok = true;
    Witness witness = Witness::none;
    std::vector<int> witness_components;  // indices into components(g)
};

// Checks (a) every unicyclic component is identifiable and (b) no two are
// UC-equivalent. Tree components never obstruct; complex components are
// ignored here.
IdentifiabilityVerdict simple_part_identifiable(const Graph& g);

// simple_part_identifiable plus the complex-part sufficient conditions.
// When those conditions fail, the answer is not a proof of ambiguity, so
// the witness kind is undetermined_complex.
IdentifiabilityVerdict graph_identifiable(const Graph& g);

// For a connected unicyclic g that fails unicyclic_identifiable: a
// disjoint union of strictly smaller decorated cycles that refinement
// cannot distinguish from g, with cycle lengths summing to c(g).
// GraphError if g is identifiable.
Graph cr_equivalent_counterexample(const Graph& g);

}  // namespace canonlab
