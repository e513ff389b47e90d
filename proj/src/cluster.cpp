#include "cwilf/cluster.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>

#include <json.hpp>

#include "cwilf/series.hpp"

namespace cwilf {

namespace {

void validate_marks(const std::vector<int>& marks, int n, int m) {
    int last = n - m + 1;
    for (size_t i = 0; i < marks.size(); ++i) {
        if (marks[i] < 1 || marks[i] > last)
            throw InvalidInputError("mark position " +
                                    std::to_string(marks[i]) +
                                    " outside 1.." + std::to_string(last));
        if (i && marks[i] <= marks[i - 1])
            throw InvalidInputError("marks must be strictly increasing");
    }
}

// Maximal blocks of marks within distance m-1 of the previous mark.
std::vector<std::vector<int>> overlap_blocks(const std::vector<int>& marks,
                                             int m) {
    std::vector<std::vector<int>> blocks;
    for (int p : marks) {
        if (blocks.empty() || p - blocks.back().back() > m - 1)
            blocks.push_back({p});
        else
            blocks.back().push_back(p);
    }
    return blocks;
}

using BlockMemo = std::map<std::pair<int, std::vector<int>>, BigCount>;

BigCount block_r(const Permutation& pattern, int len,
                 const std::vector<int>& shifted, const CountOptions& opt,
                 BlockMemo* memo) {
    if (memo) {
        auto it = memo->find({len, shifted});
        if (it != memo->end()) return it->second;
    }
    BigCount r = refined_cluster_number(pattern, len, shifted, opt);
    if (memo) memo->emplace(std::make_pair(len, shifted), r);
    return r;
}

BigCount b_count_impl(const Permutation& pattern, int n,
                      const std::vector<int>& marks, const CountOptions& opt,
                      BlockMemo* memo) {
    int m = pattern.size();
    if (marks.empty()) return factorial(n);
    BigCount num = factorial(n);
    BigCount den = 1;
    for (const auto& block : overlap_blocks(marks, m)) {
        int lo = block.front();
        int len = block.back() - lo + m;
        std::vector<int> shifted(block.size());
        for (size_t i = 0; i < block.size(); ++i) shifted[i] = block[i] - lo + 1;
        BigCount r = block_r(pattern, len, shifted, opt, memo);
        if (r == 0) return 0;
        num *= r;
        den *= factorial(len);
    }
    BigCount q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                den.get_mpz_t());
    if (rem != 0)
        throw InternalError("block factorization produced a non-integer");
    return q;
}

}  // namespace

BigCount refined_cluster_number(const Permutation& pattern, int n,
                                const std::vector<int>& marks,
                                const CountOptions& opt) {
    int m = pattern.size();
    if (m < 2) throw InvalidInputError("cluster pattern needs length >= 2");
    if (n < m || marks.empty()) return 0;
    int last = n - m + 1;
    for (size_t i = 0; i < marks.size(); ++i) {
        if (marks[i] < 1 || marks[i] > last) return 0;
        if (i && marks[i] <= marks[i - 1]) return 0;
    }
    auto overlap = overlap_set(pattern);
    MarkSet ms{n, m, marks};
    if (!marks_feasible(ms, overlap)) return 0;
    ClusterPoset poset = build_poset(pattern, ms);
    return count_linear_extensions(poset, opt);
}

BigCount cluster_number(const Permutation& pattern, int n, int k,
                        const CountOptions& opt) {
    int m = pattern.size();
    if (m < 2) throw InvalidInputError("cluster pattern needs length >= 2");
    if (n < m || k < 1) return 0;
    if (n == 1 + static_cast<long long>(k) * (m - 1)) {
        // Every gap is forced to m-1, so the single feasible mark set glues
        // k chains at ranks (last letter, first letter).
        return glued_chain_extensions(m, pattern.at(1), pattern.at(m), k);
    }
    BigCount total = 0;
    for (const auto& ms : feasible_marks(pattern, n)) {
        if (static_cast<int>(ms.marks.size()) != k) continue;
        total += count_linear_extensions(build_poset(pattern, ms), opt);
    }
    return total;
}

BigCount b_count(const Permutation& pattern, int n,
                 const std::vector<int>& marks, const CountOptions& opt) {
    int m = pattern.size();
    if (m < 2) throw InvalidInputError("cluster pattern needs length >= 2");
    if (n < 1) throw InvalidInputError("ambient length must be >= 1");
    if (!marks.empty() && n < m)
        throw InvalidInputError("marks outside 1..n-m+1");
    validate_marks(marks, n, m);
    return b_count_impl(pattern, n, marks, opt, nullptr);
}

BigCount a_refined(const Permutation& pattern, int n,
                   const std::vector<int>& marks, const CountOptions& opt) {
    int m = pattern.size();
    if (m < 2) throw InvalidInputError("cluster pattern needs length >= 2");
    int last = n - m + 1;
    std::vector<int> s(marks);
    std::sort(s.begin(), s.end());
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 1 || s[i] > last) return 0;  // no occurrence set reaches it
        if (i && s[i] == s[i - 1]) return 0;
    }
    auto overlap = overlap_set(pattern);
    auto conflict = [&](int p, int q) {
        int d = std::abs(p - q);
        return d != 0 && d < m && !overlap.contains(d);
    };
    // Positions that conflict with S can never appear in a superset with a
    // nonzero b-count.
    std::vector<int> addable;
    for (int p = 1; p <= last; ++p) {
        if (std::binary_search(s.begin(), s.end(), p)) continue;
        bool ok = true;
        for (int q : s)
            if (conflict(p, q)) { ok = false; break; }
        if (ok) addable.push_back(p);
    }
    BlockMemo memo;
    BigCount total = 0;
    std::vector<int> chosen;
    std::function<void(size_t)> walk = [&](size_t idx) {
        std::vector<int> t(s);
        t.insert(t.end(), chosen.begin(), chosen.end());
        std::sort(t.begin(), t.end());
        BigCount term = b_count_impl(pattern, n, t, opt, &memo);
        if (chosen.size() % 2 == 0)
            total += term;
        else
            total -= term;
        for (size_t i = idx; i < addable.size(); ++i) {
            bool ok = true;
            for (int q : chosen)
                if (conflict(addable[i], q)) { ok = false; break; }
            if (!ok) continue;
            chosen.push_back(addable[i]);
            walk(i + 1);
            chosen.pop_back();
        }
    };
    walk(0);
    if (total < 0) throw InternalError("inclusion-exclusion went negative");
    return total;
}

ExactCountTable exact_count_table(const Permutation& pattern, int n,
                                  const CountOptions& opt) {
    int m = pattern.size();
    if (m < 2) throw InvalidInputError("cluster pattern needs length >= 2");
    ExactCountTable table;
    table.n = n;
    table.m = m;
    table.positions = std::max(0, n - m + 1);
    if (table.positions > 24)
        throw ResourceError("exact-count table limited to 24 positions");
    size_t size = size_t{1} << table.positions;
    table.b.assign(size, 0);
    auto overlap = n >= m ? overlap_set(pattern) : OverlapSet{{}, m};
    // conflict_mask[p]: positions q that cannot be marked together with p.
    std::vector<uint32_t> conflict_mask(table.positions, 0);
    for (int p = 0; p < table.positions; ++p)
        for (int q = 0; q < table.positions; ++q) {
            int d = std::abs(p - q);
            if (d != 0 && d < m && !overlap.contains(d))
                conflict_mask[p] |= uint32_t{1} << q;
        }
    BlockMemo memo;
    for (size_t mask = 0; mask < size; ++mask) {
        bool zero = false;
        for (uint32_t rest = static_cast<uint32_t>(mask); rest;) {
            int p = __builtin_ctz(rest);
            rest &= rest - 1;
            if (conflict_mask[p] & mask) { zero = true; break; }
        }
        if (zero) continue;
        std::vector<int> marks;
        for (uint32_t rest = static_cast<uint32_t>(mask); rest;) {
            int p = __builtin_ctz(rest);
            rest &= rest - 1;
            marks.push_back(p + 1);
        }
        table.b[mask] = b_count_impl(pattern, n, marks, opt, &memo);
    }
    // Superset Moebius transform: a[S] = sum over T >= S of (-1)^|T\S| b[T].
    table.a = table.b;
    for (int d = 0; d < table.positions; ++d) {
        size_t bit = size_t{1} << d;
        for (size_t mask = 0; mask < size; ++mask)
            if (!(mask & bit)) table.a[mask] -= table.a[mask | bit];
    }
    for (const auto& v : table.a)
        if (v < 0) throw InternalError("negative exact-occurrence count");
    return table;
}

BigCount a_count(const Permutation& pattern, int n, int k,
                 const CountOptions& opt) {
    if (k < 0) return 0;
    int m = pattern.size();
    if (n < m) {
        if (k == 0) return factorial(std::max(n, 0));
        return 0;
    }
    auto table = exact_count_table(pattern, n, opt);
    BigCount total = 0;
    size_t size = table.a.size();
    for (size_t mask = 0; mask < size; ++mask)
        if (__builtin_popcountll(mask) == k) total += table.a[mask];
    return total;
}

BigCount a_nonoverlap_recursive(const Permutation& pattern, int n,
                                const std::vector<int>& marks) {
    int m = pattern.size();
    if (m < 2) throw InvalidInputError("cluster pattern needs length >= 2");
    if (!is_nonoverlapping(pattern))
        throw InvalidInputError(
            "prefix recursion is only sound for non-overlapping patterns");
    std::vector<int> s(marks);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());

    // Avoider counts a_{i,0} from the generating function, one series for
    // the largest ambient length needed.
    TruncatedSeries F = pattern_gf(pattern, std::max(n, 0));
    auto avoiders = [&](int nn) -> BigCount {
        if (nn < 0) return 0;
        return extract_a(F, nn, 0);
    };

    std::map<std::pair<int, std::vector<int>>, BigCount> memo;
    std::function<BigCount(int, const std::vector<int>&)> rec =
        [&](int nn, const std::vector<int>& set) -> BigCount {
        if (set.empty()) return avoiders(nn);
        int l = set.back();
        if (nn < l + m - 1) return 0;
        for (size_t i = 1; i < set.size(); ++i)
            if (set[i] - set[i - 1] < m - 1) return 0;  // overlapping marks
        auto key = std::make_pair(nn, set);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
        std::vector<int> head(set.begin(), set.end() - 1);
        BigCount value = binomial(nn, l) * rec(l, head) * avoiders(nn - l);
        value -= rec(nn, head);
        for (int j = std::max(1, l - m + 2); j <= l - 1; ++j) {
            std::vector<int> with_j(head);
            with_j.push_back(j);
            value -= rec(nn, with_j);
        }
        memo.emplace(key, value);
        return value;
    };
    BigCount out = rec(n, s);
    if (out < 0) throw InternalError("prefix recursion went negative");
    return out;
}

CountCache::CountCache(std::string path) : path_(std::move(path)) {
    std::ifstream in(path_);
    if (!in) return;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            auto j = nlohmann::json::parse(line);
            std::string pattern = j.at("pattern").get<std::string>();
            int n = j.at("n").get<int>();
            BigCount count(j.at("count").get<std::string>());
            std::string key;
            if (j.contains("marks")) {
                key = pattern + "|n=" + std::to_string(n) + "|S=";
                for (int v : j.at("marks").get<std::vector<int>>())
                    key += std::to_string(v) + ",";
            } else {
                key = pattern + "|n=" + std::to_string(n) +
                      "|k=" + std::to_string(j.at("k").get<int>());
            }
            entries_[key] = count;
        } catch (const std::exception& e) {
            std::cerr << "warning: skipping corrupt cache line " << lineno
                      << " in " << path_ << ": " << e.what() << "\n";
        }
    }
}

std::optional<BigCount> CountCache::get(const std::string& key) {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    return it->second;
}

void CountCache::put(const std::string& key, const std::string& record,
                     const BigCount& value) {
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = entries_.emplace(key, value);
    if (!inserted) return;  // deterministic values; first write wins
    std::ofstream out(path_, std::ios::app);
    if (out) out << record << "\n";
}

static std::string marks_key(const Permutation& pattern, int n,
                             const std::vector<int>& marks) {
    std::string key = pattern.canonical_str() + "|n=" + std::to_string(n) +
                      "|S=";
    for (int v : marks) key += std::to_string(v) + ",";
    return key;
}

std::optional<BigCount> CountCache::get_marks(const Permutation& pattern,
                                              int n,
                                              const std::vector<int>& marks) {
    return get(marks_key(pattern, n, marks));
}

std::optional<BigCount> CountCache::get_k(const Permutation& pattern, int n,
                                          int k) {
    return get(pattern.canonical_str() + "|n=" + std::to_string(n) +
               "|k=" + std::to_string(k));
}

void CountCache::put_marks(const Permutation& pattern, int n,
                           const std::vector<int>& marks,
                           const BigCount& value) {
    nlohmann::json j{{"pattern", pattern.canonical_str()},
                     {"n", n},
                     {"marks", marks},
                     {"count", to_decimal(value)}};
    put(marks_key(pattern, n, marks), j.dump(), value);
}

void CountCache::put_k(const Permutation& pattern, int n, int k,
                       const BigCount& value) {
    nlohmann::json j{{"pattern", pattern.canonical_str()},
                     {"n", n},
                     {"k", k},
                     {"count", to_decimal(value)}};
    put(pattern.canonical_str() + "|n=" + std::to_string(n) +
            "|k=" + std::to_string(k),
        j.dump(), value);
}

size_t CountCache::entries() const {
    std::lock_guard<std::mutex> lock(mu_);
    return entries_.size();
}

}  // namespace cwilf
