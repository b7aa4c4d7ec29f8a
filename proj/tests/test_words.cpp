#include "canonlab/words.hpp"

#include "canonlab/errors.hpp"
#include "doctest.h"

#include <algorithm>
#include <random>

using namespace canonlab;

namespace {

CircularWord word_of(const char* s) {
    CircularWord w;
    for (const char* p = s; *p; ++p) w.letters.push_back(std::string(1, *p));
    return w;
}

std::vector<TreeCode> letters_of(const char* s) { return word_of(s).letters; }

}  // namespace

TEST_CASE("minimal periods of small words") {
    CHECK(minimal_period(word_of("aaaa")) == 1);
    CHECK(minimal_period(word_of("abab")) == 2);
    CHECK(minimal_period(word_of("aab")) == 3);
    CHECK(minimal_period(word_of("a")) == 1);
    CHECK(minimal_period(word_of("abcabc")) == 3);
    CHECK(minimal_period(word_of("aabaab")) == 3);
    CHECK(minimal_period(word_of("abba")) == 4);  // palindromic but aperiodic
    CHECK_THROWS_AS(minimal_period(CircularWord{}), GraphError);
}

TEST_CASE("minimal period divides the length and is rotation invariant") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 12);
        CircularWord w;
        for (int i = 0; i < n; ++i)
            w.letters.push_back(std::string(1, static_cast<char>('a' + rng() % 2)));
        int p = minimal_period(w);
        CHECK(n % p == 0);
        for (int i = 0; i < n; ++i) CHECK(w.letters[i] == w.letters[(i + p) % n]);
        CircularWord rot;
        int shift = static_cast<int>(rng() % n);
        for (int i = 0; i < n; ++i) rot.letters.push_back(w.letters[(i + shift) % n]);
        CHECK(minimal_period(rot) == p);
    }
}

TEST_CASE("least rotation picks the smallest representative") {
    CHECK(least_rotation(letters_of("bca")) == letters_of("abc"));
    CHECK(least_rotation(letters_of("baab")) == letters_of("aabb"));
    CHECK(least_rotation(letters_of("cbcab")) == letters_of("abcbc"));
    CHECK(least_rotation(letters_of("aaa")) == letters_of("aaa"));
    // Exhaustive cross-check against the naive minimum over all rotations.
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        std::vector<TreeCode> s;
        for (int i = 0; i < n; ++i) s.push_back(std::string(1, static_cast<char>('a' + rng() % 3)));
        auto best = s;
        for (int r = 1; r < n; ++r) {
            std::vector<TreeCode> rot;
            for (int i = 0; i < n; ++i) rot.push_back(s[(r + i) % n]);
            best = std::min(best, rot);
        }
        CHECK(least_rotation(s) == best);
    }
}

TEST_CASE("canonical period word is rotation and direction free") {
    CHECK(canonical_period_word(word_of("abab")) == letters_of("ab"));
    CHECK(canonical_period_word(word_of("baba")) == letters_of("ab"));
    CHECK(canonical_period_word(word_of("aaaa")) == letters_of("a"));
    CHECK(canonical_period_word(word_of("aab")) == letters_of("aab"));
    // Reversal: "acb" read backwards is "bca" whose least rotation is "abc".
    CHECK(canonical_period_word(word_of("acb")) == letters_of("abc"));

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + static_cast<int>(rng() % 10);
        CircularWord w;
        for (int i = 0; i < n; ++i)
            w.letters.push_back(std::string(1, static_cast<char>('a' + rng() % 2)));
        auto canon = canonical_period_word(w);
        CHECK(static_cast<int>(canon.size()) == minimal_period(w));
        // The canonical period word is itself aperiodic.
        CHECK(minimal_period(CircularWord{canon}) == static_cast<int>(canon.size()));
        CircularWord rot, rev;
        int shift = static_cast<int>(rng() % n);
        for (int i = 0; i < n; ++i) rot.letters.push_back(w.letters[(i + shift) % n]);
        rev.letters.assign(w.letters.rbegin(), w.letters.rend());
        CHECK(canonical_period_word(rot) == canon);
        CHECK(canonical_period_word(rev) == canon);
        // Doubling the word preserves the canonical period word.
        CircularWord doubled;
        doubled.letters = w.letters;
        doubled.letters.insert(doubled.letters.end(), w.letters.begin(), w.letters.end());
        CHECK(canonical_period_word(doubled) == canon);
    }
}
