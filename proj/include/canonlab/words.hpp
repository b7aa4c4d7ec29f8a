#pragma once

#include "canonlab/tree_canon.hpp"

#include <vector>

namespace canonlab {

// Letters read once around a cycle in one fixed direction. All queries are
// invariant under rotation and reversal of the stored sequence.
struct CircularWord {
    std::vector<TreeCode> letters;
    int length() const { return static_cast<int>(letters.size()); }
};

// Index of the lexicographically least rotation of s.
int least_rotation_index(const std::vector<int>& s);

std::vector<TreeCode> least_rotation(const std::vector<TreeCode>& s);

// Smallest p dividing |w| such that rotating by p fixes the word; this
// property does not depend on the stored representative.
int minimal_period(const CircularWord& w);

// First minimal period of the least rotation, minimized over both reading
// directions: equal results ⟺ the two circular words share a common period.
std::vector<TreeCode> canonical_period_word(const CircularWord& w);

}  // namespace canonlab
