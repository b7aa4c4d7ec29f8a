#include "canonlab/words.hpp"

#include "canonlab/errors.hpp"

#include <algorithm>
#include <map>

namespace canonlab {

int least_rotation_index(const std::vector<int>& s) {
    int n = static_cast<int>(s.size());
    if (n == 0) throw GraphError("least rotation of an empty word");
    int i = 0, j = 1, k = 0;
    while (i < n && j < n && k < n) {
        int a = s[(i + k) % n], b = s[(j + k) % n];
        if (a == b) {
            ++k;
            continue;
        }
        if (a > b)
            i += k + 1;
        else
            j += k + 1;
        if (i == j) ++j;
        k = 0;
    }
    return std::min(i, j);
}

namespace {

std::vector<int> letter_ranks(const std::vector<TreeCode>& s) {
    std::vector<TreeCode> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> out(s.size());
    for (size_t i = 0; i < s.size(); ++i)
        out[i] = static_cast<int>(
            std::lower_bound(sorted.begin(), sorted.end(), s[i]) - sorted.begin());
    return out;
}

std::vector<TreeCode> rotate_to(const std::vector<TreeCode>& s, int start) {
    std::vector<TreeCode> out;
    out.reserve(s.size());
    for (size_t i = 0; i < s.size(); ++i) out.push_back(s[(start + i) % s.size()]);
    return out;
}

}  // namespace

std::vector<TreeCode> least_rotation(const std::vector<TreeCode>& s) {
    return rotate_to(s, least_rotation_index(letter_ranks(s)));
}

int minimal_period(const CircularWord& w) {
    int c = w.length();
    if (c == 0) throw GraphError("minimal period of an empty word");
    for (int p = 1; p <= c; ++p) {
        if (c % p != 0) continue;
        bool ok = true;
        for (int i = 0; i < c && ok; ++i) ok = w.letters[i] == w.letters[(i + p) % c];
        if (ok) return p;
    }
    return c;  // unreachable: p = c always matches
}

std::vector<TreeCode> canonical_period_word(const CircularWord& w) {
    int p = minimal_period(w);
    std::vector<TreeCode> fwd = least_rotation(w.letters);
    std::vector<TreeCode> rev_in(w.letters.rbegin(), w.letters.rend());
    std::vector<TreeCode> rev = least_rotation(rev_in);
    const std::vector<TreeCode>& best = rev < fwd ? rev : fwd;
    // The word is best^(c/p) with the period primitive, so the least rotation
    // is the least rotation of the period repeated; truncation recovers it.
    return {best.begin(), best.begin() + p};
}

}  // namespace canonlab
