#include "cwilf/oracle.hpp"

#include <algorithm>
#include <numeric>

#include <functional>

#include "cwilf/errors.hpp"
#include "cwilf/parallel.hpp"
#include "cwilf/poset.hpp"

namespace cwilf {

namespace {

void check_limit(int n, const OracleOptions& opt) {
    if (n < 1) throw InvalidInputError("oracle needs n >= 1");
    if (n > opt.max_n)
        throw ResourceError("oracle limited to n <= " +
                            std::to_string(opt.max_n) + " (asked for " +
                            std::to_string(n) + ")");
}

// eta[r] is the 0-based offset of the rank-(r+1) letter in the pattern.
std::vector<int> rank_offsets(const Permutation& pattern) {
    auto inv = pattern.inverse().word();
    std::vector<int> eta(inv.size());
    for (size_t r = 0; r < inv.size(); ++r) eta[r] = inv[r] - 1;
    return eta;
}

bool window_matches(const std::vector<int>& v, int start0,
                    const std::vector<int>& eta) {
    for (size_t r = 1; r < eta.size(); ++r)
        if (v[start0 + eta[r - 1]] >= v[start0 + eta[r]]) return false;
    return true;
}

}  // namespace

BigCount StatsTable::a_for(const std::vector<int>& marks) const {
    std::vector<int> s(marks);
    std::sort(s.begin(), s.end());
    auto it = by_set.find(s);
    return it == by_set.end() ? BigCount(0) : it->second;
}

StatsTable enumerate_stats(const Permutation& pattern, int n,
                           const OracleOptions& opt) {
    check_limit(n, opt);
    int m = pattern.size();
    StatsTable table;
    table.n = n;
    table.m = m;
    int positions = std::max(0, n - m + 1);
    table.by_count.assign(positions + 1, 0);
    if (m > n) {
        table.by_set[{}] = factorial(n);
        table.by_count[0] = factorial(n);
        return table;
    }
    auto eta = rank_offsets(pattern);
    struct Local {
        std::map<uint32_t, unsigned long long> by_mask;
    };
    std::vector<Local> locals(n);
    parallel_for(opt.jobs, static_cast<size_t>(n), [&](size_t fi) {
        int first = static_cast<int>(fi) + 1;
        std::vector<int> v(n);
        v[0] = first;
        std::vector<int> rest;
        for (int x = 1; x <= n; ++x)
            if (x != first) rest.push_back(x);
        auto& local = locals[fi].by_mask;
        do {
            std::copy(rest.begin(), rest.end(), v.begin() + 1);
            uint32_t mask = 0;
            for (int i = 0; i < positions; ++i)
                if (window_matches(v, i, eta)) mask |= uint32_t{1} << i;
            ++local[mask];
        } while (std::next_permutation(rest.begin(), rest.end()));
    });
    for (const auto& local : locals) {
        for (const auto& [mask, cnt] : local.by_mask) {
            std::vector<int> s;
            for (int i = 0; i < positions; ++i)
                if (mask & (uint32_t{1} << i)) s.push_back(i + 1);
            unsigned long c = static_cast<unsigned long>(cnt);
            table.by_set[s] += c;
            table.by_count[s.size()] += c;
        }
    }
    return table;
}

BigCount brute_b(const Permutation& pattern, int n,
                 const std::vector<int>& marks, const OracleOptions& opt) {
    check_limit(n, opt);
    int m = pattern.size();
    std::vector<int> s(marks);
    std::sort(s.begin(), s.end());
    for (int p : s)
        if (p < 1 || p > n - m + 1)
            throw InvalidInputError("mark position outside 1..n-m+1");
    if (m > n) return s.empty() ? factorial(n) : BigCount(0);
    auto eta = rank_offsets(pattern);
    std::vector<char> marked(n + 1, 0);
    for (int p : s) marked[p] = 1;
    // Lexicographic prefix DFS; each completed marked window prunes.
    std::vector<BigCount> totals(n, 0);
    parallel_for(opt.jobs, static_cast<size_t>(n), [&](size_t fi) {
        std::vector<int> v(n, 0);
        std::vector<char> used(n + 1, 0);
        unsigned long long count = 0;
        std::function<void(int)> place = [&](int depth) {
            if (depth >= m) {
                int start = depth - m + 1;  // window ending at `depth`
                if (marked[start] && !window_matches(v, start - 1, eta))
                    return;
            }
            if (depth == n) {
                ++count;
                return;
            }
            for (int x = 1; x <= n; ++x) {
                if (used[x]) continue;
                used[x] = 1;
                v[depth] = x;
                place(depth + 1);
                used[x] = 0;
            }
        };
        int first = static_cast<int>(fi) + 1;
        used[first] = 1;
        v[0] = first;
        place(1);
        totals[fi] = BigCount(static_cast<unsigned long>(count));
    });
    return std::accumulate(totals.begin(), totals.end(), BigCount(0));
}

BigCount brute_r(const Permutation& pattern, int n,
                 const std::vector<int>& marks, const OracleOptions& opt) {
    int m = pattern.size();
    MarkSet ms{n, m, marks};
    if (!marks_feasible(ms, overlap_set(pattern))) return 0;
    return brute_b(pattern, n, marks, opt);
}

Permutation block_reverse_bijection(const Permutation& sigma,
                                    const Permutation& pattern,
                                    const std::vector<int>& marks) {
    int m = pattern.size();
    if (!is_nonoverlapping(pattern))
        throw InvalidInputError(
            "block reversal requires a non-overlapping pattern");
    auto occ = occurrences(pattern, sigma);
    std::vector<int> s(marks);
    std::sort(s.begin(), s.end());
    for (int p : s)
        if (!std::binary_search(occ.positions.begin(), occ.positions.end(), p))
            throw InvalidInputError("marked position " + std::to_string(p) +
                                    " is not an occurrence");
    std::vector<int> word = sigma.word();
    // Maximal blocks of marks within distance m-1; blocks are at least m
    // apart, so their windows never touch.
    size_t i = 0;
    while (i < s.size()) {
        size_t j = i;
        while (j + 1 < s.size() && s[j + 1] - s[j] <= m - 1) ++j;
        int lo = s[i], hi = s[j] + m - 1;
        std::reverse(word.begin() + (lo - 1), word.begin() + hi);
        i = j + 1;
    }
    return Permutation(std::move(word));
}

}  // namespace cwilf
