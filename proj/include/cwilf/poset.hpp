#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "cwilf/bigcount.hpp"
#include "cwilf/errors.hpp"
#include "cwilf/permutation.hpp"

namespace cwilf {

// Small dynamic bitset; element universes here stay in the low hundreds.
class Bits {
public:
    Bits() = default;
    explicit Bits(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int universe() const { return n_; }
    void set(int i) { w_[i >> 6] |= uint64_t{1} << (i & 63); }
    void reset(int i) { w_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(int i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

    Bits& operator|=(const Bits& o);
    bool subset_of(const Bits& o) const;
    bool intersects(const Bits& o) const;
    bool any() const;
    int count() const;

    // Calls fn(i) for every set bit, ascending.
    template <typename F>
    void for_each(F fn) const {
        for (size_t wi = 0; wi < w_.size(); ++wi) {
            uint64_t w = w_[wi];
            while (w) {
                int b = __builtin_ctzll(w);
                fn(static_cast<int>(wi * 64 + b));
                w &= w - 1;
            }
        }
    }

    bool operator==(const Bits& o) const { return w_ == o.w_; }

    const std::vector<uint64_t>& words() const { return w_; }

private:
    int n_ = 0;
    std::vector<uint64_t> w_;
};

// A partial order on elements labelled 1..n, stored as the full (transitively
// closed) relation. Stays acyclic by construction: add_relation rejects any
// edge that would close a cycle.
class ClusterPoset {
public:
    explicit ClusterPoset(int n);

    int size() const { return n_; }

    // Strict order between 1-based labels.
    bool less(int u, int v) const { return below_[v - 1].test(u - 1); }

    // Declares u < v; throws InvalidInputError when v < u already holds.
    void add_relation(int u, int v);

    // Declares elems[0] < elems[1] < ... < elems.back().
    void add_chain(const std::vector<int>& elems);

    int below_count(int v) const { return below_[v - 1].count(); }
    int above_count(int v) const { return above_[v - 1].count(); }

    std::vector<std::pair<int, int>> cover_relations() const;

    // One cover pair "u<v" per line, 1-based labels, sorted.
    std::string edge_list() const;

    ClusterPoset dual() const;

    bool operator==(const ClusterPoset& o) const {
        return n_ == o.n_ && below_ == o.below_;
    }

    const Bits& below_bits(int v) const { return below_[v - 1]; }

private:
    int n_;
    std::vector<Bits> below_;
    std::vector<Bits> above_;
};

struct CountOptions {
    // Total downset states the counting DP may touch before giving up.
    unsigned long long state_budget = 50'000'000;
};

// Exact number of linear extensions, by dynamic programming over the lattice
// of downsets. Throws ResourceError when the state budget is exceeded.
BigCount count_linear_extensions(const ClusterPoset& poset,
                                 const CountOptions& opt = {});

// A set of marked occurrence positions inside an ambient window of length n.
struct MarkSet {
    int n = 0;
    int pattern_length = 0;
    std::vector<int> marks;  // sorted, 1-based
};

// Conditions (a) and (b): marks start at 1, end at n-m+1, and consecutive
// gaps lie in the overlap set.
bool marks_feasible(const MarkSet& ms, const OverlapSet& overlap);

// All feasible mark sets for the pattern at ambient length n, in
// lexicographic order. Empty when n < m.
std::vector<MarkSet> feasible_marks(const Permutation& pattern, int n);

// The poset on positions 1..n generated by one rank chain per marked
// occurrence. Throws InvalidInputError when the chains conflict (cycle) or
// leave a position uncovered.
ClusterPoset build_poset(const Permutation& pattern, const MarkSet& ms);

// The poset of k pattern occurrences chained with single-letter overlaps,
// for a non-overlapping standard-form pattern with first letter a and last
// letter b: one spine plus k-1 pendant chains. Requires 1 <= a < b <= m,
// a+b <= m+1, k >= 1.
ClusterPoset nonoverlapping_poset(int m, int a, int b, int k);

// Linear extensions of the poset of k glued m-element chains where the
// shared element of consecutive chains has rank b in the earlier chain and
// rank a in the later one. Spine DP; exact for any a != b, any k >= 1.
BigCount glued_chain_extensions(int m, int a, int b, int k);

struct IsoOptions {
    int max_elements = 40;
    long node_budget = 200000;
};

// Exact isomorphism via canonical labelling (refinement + backtracking).
// Throws ResourceError over budget.
bool poset_isomorphic(const ClusterPoset& p, const ClusterPoset& q,
                      const IsoOptions& opt = {});

}  // namespace cwilf
