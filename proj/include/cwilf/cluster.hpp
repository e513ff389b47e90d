#pragma once

#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cwilf/bigcount.hpp"
#include "cwilf/permutation.hpp"
#include "cwilf/poset.hpp"

namespace cwilf {

// r_{n,S}: linear extensions of the cluster poset when S satisfies
// conditions (a) and (b), 0 otherwise.
BigCount refined_cluster_number(const Permutation& pattern, int n,
                                const std::vector<int>& marks,
                                const CountOptions& opt = {});

// r_{n,k}: sum of refined cluster numbers over feasible S with |S| = k.
// At n = 1 + k(m-1) the only feasible S is {1, m, 2m-1, ...}, so the value
// comes from the spine DP directly.
BigCount cluster_number(const Permutation& pattern, int n, int k,
                        const CountOptions& opt = {});

// b_{n,S}: permutations of length n whose occurrence set contains S.
// Evaluated blockwise: S splits into maximal blocks of overlapping
// occurrences, and b/n! is the product of the blocks' r/len! factors.
// S need not satisfy the cluster conditions.
BigCount b_count(const Permutation& pattern, int n,
                 const std::vector<int>& marks, const CountOptions& opt = {});

// a_{n,S}: permutations whose occurrence set equals S exactly, by
// inclusion-exclusion over supersets of S.
BigCount a_refined(const Permutation& pattern, int n,
                   const std::vector<int>& marks, const CountOptions& opt = {});

// a_{n,k}: sum of a_{n,S} over all S of size k.
BigCount a_count(const Permutation& pattern, int n, int k,
                 const CountOptions& opt = {});

// Full exact-occurrence tables at ambient length n, indexed by the bitmask
// of marked positions (bit p-1 for position p over 1..n-m+1).
struct ExactCountTable {
    int n = 0;
    int m = 0;
    int positions = 0;  // n-m+1, clamped at 0
    std::vector<BigCount> b;  // b[mask]
    std::vector<BigCount> a;  // a[mask]
};

ExactCountTable exact_count_table(const Permutation& pattern, int n,
                                  const CountOptions& opt = {});

// a_{n,S} for a non-overlapping pattern via the prefix recursion
// a_{n,T+{l}} = C(n,l) a_{l,T} a_{n-l,0} - a_{n,T} - sum_j a_{n,T+{j}},
// with avoider counts a_{*,0} supplied by the generating-function route.
// Throws InvalidInputError for overlapping patterns.
BigCount a_nonoverlap_recursive(const Permutation& pattern, int n,
                                const std::vector<int>& marks);

// Persistent memoization of counts: append-only JSON lines, one record
// {pattern, n, marks|k, count} per line. Read-through, write-behind.
// Corrupt lines are skipped with a warning, never misread.
class CountCache {
public:
    explicit CountCache(std::string path);

    std::optional<BigCount> get_marks(const Permutation& pattern, int n,
                                      const std::vector<int>& marks);
    std::optional<BigCount> get_k(const Permutation& pattern, int n, int k);
    void put_marks(const Permutation& pattern, int n,
                   const std::vector<int>& marks, const BigCount& value);
    void put_k(const Permutation& pattern, int n, int k,
               const BigCount& value);

    size_t entries() const;

private:
    std::optional<BigCount> get(const std::string& key);
    void put(const std::string& key, const std::string& record,
             const BigCount& value);

    std::string path_;
    mutable std::mutex mu_;
    std::map<std::string, BigCount> entries_;
};

}  // namespace cwilf
