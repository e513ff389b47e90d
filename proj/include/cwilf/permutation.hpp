#pragma once

#include <string>
#include <vector>

#include "cwilf/errors.hpp"

namespace cwilf {

// A permutation of {1..n} in one-line notation. Doubles as a pattern.
// Immutable after construction.
class Permutation {
public:
    // Validates that `word` is a bijection onto {1..n}, n >= 1.
    explicit Permutation(std::vector<int> word);

    static Permutation identity(int n);

    // Accepts "2,4,5,3,6,1" or, when every value is a single digit, "245361".
    static Permutation parse(const std::string& text);

    int size() const { return static_cast<int>(word_.size()); }

    // 1-based position access: at(i) is the i-th letter.
    int at(int pos) const { return word_[pos - 1]; }

    const std::vector<int>& word() const { return word_; }

    Permutation inverse() const;
    Permutation reversed() const;
    Permutation complemented() const;
    Permutation reverse_complemented() const;

    // Compact digit string when n <= 9, comma-separated otherwise.
    std::string str() const;
    // Always comma-separated; used for cache keys.
    std::string canonical_str() const;

    bool operator==(const Permutation& o) const { return word_ == o.word_; }
    bool operator!=(const Permutation& o) const { return word_ != o.word_; }
    bool operator<(const Permutation& o) const { return word_ < o.word_; }

private:
    std::vector<int> word_;
};

// Rank word of `word`: output[i] = rank of word[i] among all entries.
// Entries must be pairwise distinct.
Permutation standardize(const std::vector<int>& word);

struct OccurrenceSet {
    std::vector<int> positions;  // sorted, 1-based
    int pattern_length = 0;
    int ambient_length = 0;
};

// All i with standardize(perm[i..i+m-1]) == pattern. Empty when m > n.
OccurrenceSet occurrences(const Permutation& pattern, const Permutation& perm);

struct OverlapSet {
    std::vector<int> indices;  // sorted subset of [m-1], always contains m-1
    int pattern_length = 0;

    bool contains(int i) const;
};

// Indices i in [m-1] where the length-(m-i) suffix and prefix of the pattern
// standardize equally. Requires m >= 2.
OverlapSet overlap_set(const Permutation& pattern);

bool is_nonoverlapping(const Permutation& pattern);

enum class Symmetry { identity, reverse, complement, reverse_complement };

const char* symmetry_name(Symmetry s);

Permutation apply_symmetry(const Permutation& p, Symmetry s);

struct StandardForm {
    Permutation pattern;
    Symmetry applied;
};

bool is_standard_form(const Permutation& p);

// The lexicographically smallest member of {p, p^R, p^C, p^RC} that satisfies
// first < last and first + last <= m+1, together with the symmetry used.
StandardForm to_standard_form(const Permutation& p);

}  // namespace cwilf
