#pragma once

#include <map>
#include <vector>

#include "cwilf/bigcount.hpp"
#include "cwilf/permutation.hpp"

namespace cwilf {

struct OracleOptions {
    int max_n = 11;     // full-table enumeration limit; slow tier raises to 12
    unsigned jobs = 1;  // workers; the enumeration partitions by first entry
};

// Exact histogram of occurrence sets over all of S_n.
struct StatsTable {
    int n = 0;
    int m = 0;
    std::map<std::vector<int>, BigCount> by_set;  // S -> a_{n,S}, nonzero only
    std::vector<BigCount> by_count;               // k -> a_{n,k}

    BigCount a_for(const std::vector<int>& marks) const;
};

StatsTable enumerate_stats(const Permutation& pattern, int n,
                           const OracleOptions& opt = {});

// Direct count of permutations whose occurrence set contains S, by a
// lexicographic prefix search that prunes on each completed marked window.
BigCount brute_b(const Permutation& pattern, int n,
                 const std::vector<int>& marks, const OracleOptions& opt = {});

// Same, but returns 0 unless S satisfies the cluster conditions.
BigCount brute_r(const Permutation& pattern, int n,
                 const std::vector<int>& marks, const OracleOptions& opt = {});

// For non-overlapping patterns: reverses each maximal block of overlapping
// marked occurrences, mapping {sigma : S in Em(pi,sigma)} onto
// {sigma : S in Em(pi^R,sigma)}. Requires S to be a subset of Em(pi,sigma).
Permutation block_reverse_bijection(const Permutation& sigma,
                                    const Permutation& pattern,
                                    const std::vector<int>& marks);

}  // namespace cwilf
