#include "cwilf/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <tuple>
#include <unordered_map>

namespace cwilf {

Bits& Bits::operator|=(const Bits& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
}

bool Bits::subset_of(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & ~o.w_[i]) return false;
    return true;
}

bool Bits::intersects(const Bits& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
        if (w_[i] & o.w_[i]) return true;
    return false;
}

bool Bits::any() const {
    for (uint64_t w : w_)
        if (w) return true;
    return false;
}

int Bits::count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
}

ClusterPoset::ClusterPoset(int n) : n_(n) {
    if (n < 1) throw InvalidInputError("poset needs at least one element");
    below_.assign(n, Bits(n));
    above_.assign(n, Bits(n));
}

void ClusterPoset::add_relation(int u, int v) {
    if (u < 1 || u > n_ || v < 1 || v > n_ || u == v)
        throw InvalidInputError("bad relation endpoints");
    int ui = u - 1, vi = v - 1;
    if (below_[ui].test(vi))
        throw InvalidInputError(
            "inconsistent chain orders: relation " + std::to_string(u) + "<" +
            std::to_string(v) + " closes a cycle");
    if (below_[vi].test(ui)) return;
    Bits lower = below_[ui];
    lower.set(ui);
    Bits upper = above_[vi];
    upper.set(vi);
    lower.for_each([&](int x) { above_[x] |= upper; });
    upper.for_each([&](int y) { below_[y] |= lower; });
}

void ClusterPoset::add_chain(const std::vector<int>& elems) {
    for (size_t i = 1; i < elems.size(); ++i)
        add_relation(elems[i - 1], elems[i]);
}

std::vector<std::pair<int, int>> ClusterPoset::cover_relations() const {
    std::vector<std::pair<int, int>> covers;
    for (int v = 1; v <= n_; ++v) {
        below_[v - 1].for_each([&](int ui) {
            int u = ui + 1;
            // u is covered by v when nothing sits strictly between.
            if (!above_[ui].intersects(below_[v - 1]))
                covers.emplace_back(u, v);
        });
    }
    std::sort(covers.begin(), covers.end());
    return covers;
}

std::string ClusterPoset::edge_list() const {
    std::ostringstream out;
    for (auto [u, v] : cover_relations()) out << u << '<' << v << '\n';
    return out.str();
}

ClusterPoset ClusterPoset::dual() const {
    ClusterPoset d(n_);
    d.below_ = above_;
    d.above_ = below_;
    return d;
}

namespace {

struct DynKey {
    std::vector<uint64_t> w;
    bool operator==(const DynKey& o) const { return w == o.w; }
};

struct DynKeyHash {
    size_t operator()(const DynKey& k) const {
        uint64_t h = 1469598103934665603ull;
        for (uint64_t x : k.w) {
            h ^= x;
            h *= 1099511628211ull;
        }
        return static_cast<size_t>(h);
    }
};

[[noreturn]] void throw_budget(unsigned long long budget) {
    throw ResourceError("downset state budget exceeded (" +
                        std::to_string(budget) + " states)");
}

BigCount count_small(const ClusterPoset& p, const CountOptions& opt) {
    int n = p.size();
    std::vector<uint64_t> pred(n, 0);
    for (int v = 0; v < n; ++v)
        p.below_bits(v + 1).for_each(
            [&](int u) { pred[v] |= uint64_t{1} << u; });
    uint64_t full = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
    std::unordered_map<uint64_t, BigCount> cur;
    cur.emplace(0, 1);
    unsigned long long processed = 0;
    for (int step = 0; step < n; ++step) {
        processed += cur.size();
        if (processed > opt.state_budget) throw_budget(opt.state_budget);
        std::unordered_map<uint64_t, BigCount> next;
        next.reserve(cur.size() * 2);
        for (const auto& [mask, cnt] : cur) {
            uint64_t cand = ~mask & full;
            while (cand) {
                uint64_t bit = cand & (~cand + 1);
                int v = __builtin_ctzll(bit);
                cand ^= bit;
                if ((pred[v] & ~mask) == 0) next[mask | bit] += cnt;
            }
        }
        cur = std::move(next);
    }
    return cur.begin()->second;
}

BigCount count_large(const ClusterPoset& p, const CountOptions& opt) {
    int n = p.size();
    size_t words = (static_cast<size_t>(n) + 63) / 64;
    std::vector<std::vector<uint64_t>> pred(n,
                                            std::vector<uint64_t>(words, 0));
    for (int v = 0; v < n; ++v)
        p.below_bits(v + 1).for_each(
            [&](int u) { pred[v][u >> 6] |= uint64_t{1} << (u & 63); });
    auto fits = [&](const std::vector<uint64_t>& need,
                    const std::vector<uint64_t>& have) {
        for (size_t i = 0; i < words; ++i)
            if (need[i] & ~have[i]) return false;
        return true;
    };
    std::unordered_map<DynKey, BigCount, DynKeyHash> cur;
    cur.emplace(DynKey{std::vector<uint64_t>(words, 0)}, 1);
    unsigned long long processed = 0;
    for (int step = 0; step < n; ++step) {
        processed += cur.size();
        if (processed > opt.state_budget) throw_budget(opt.state_budget);
        std::unordered_map<DynKey, BigCount, DynKeyHash> next;
        for (const auto& [key, cnt] : cur) {
            for (int v = 0; v < n; ++v) {
                if ((key.w[v >> 6] >> (v & 63)) & 1) continue;
                if (!fits(pred[v], key.w)) continue;
                DynKey nk = key;
                nk.w[v >> 6] |= uint64_t{1} << (v & 63);
                next[std::move(nk)] += cnt;
            }
        }
        cur = std::move(next);
    }
    return cur.begin()->second;
}

}  // namespace

BigCount count_linear_extensions(const ClusterPoset& poset,
                                 const CountOptions& opt) {
    if (poset.size() <= 64) return count_small(poset, opt);
    return count_large(poset, opt);
}

bool marks_feasible(const MarkSet& ms, const OverlapSet& overlap) {
    int m = ms.pattern_length;
    const auto& s = ms.marks;
    if (ms.n < m || s.empty()) return false;
    if (s.front() != 1 || s.back() != ms.n - m + 1) return false;
    for (size_t j = 1; j < s.size(); ++j) {
        int gap = s[j] - s[j - 1];
        if (!overlap.contains(gap)) return false;
    }
    return true;
}

std::vector<MarkSet> feasible_marks(const Permutation& pattern, int n) {
    int m = pattern.size();
    std::vector<MarkSet> out;
    if (n < m) return out;
    auto overlap = overlap_set(pattern);
    int last = n - m + 1;
    std::vector<int> marks{1};
    std::function<void()> extend = [&] {
        if (marks.back() == last) {
            out.push_back(MarkSet{n, m, marks});
            return;
        }
        for (int gap : overlap.indices) {
            if (marks.back() + gap > last) break;
            marks.push_back(marks.back() + gap);
            extend();
            marks.pop_back();
        }
    };
    extend();
    std::sort(out.begin(), out.end(),
              [](const MarkSet& a, const MarkSet& b) { return a.marks < b.marks; });
    return out;
}

ClusterPoset build_poset(const Permutation& pattern, const MarkSet& ms) {
    int m = pattern.size();
    int n = ms.n;
    if (m != ms.pattern_length)
        throw InvalidInputError("mark set built for a different pattern length");
    if (n < m) throw InvalidInputError("ambient length below pattern length");
    for (int i : ms.marks)
        if (i < 1 || i > n - m + 1)
            throw InvalidInputError("mark position out of range");
    ClusterPoset poset(n);
    const auto eta = pattern.inverse().word();
    std::vector<char> covered(n + 1, 0);
    for (int i : ms.marks) {
        std::vector<int> chain(m);
        for (int r = 0; r < m; ++r) {
            chain[r] = i - 1 + eta[r];
            covered[chain[r]] = 1;
        }
        poset.add_chain(chain);
    }
    for (int v = 1; v <= n; ++v)
        if (!covered[v])
            throw InvalidInputError("mark set leaves position " +
                                    std::to_string(v) + " uncovered");
    return poset;
}

ClusterPoset nonoverlapping_poset(int m, int a, int b, int k) {
    if (!(1 <= a && a < b && b <= m && a + b <= m + 1 && k >= 1))
        throw InvalidInputError("nonoverlapping_poset requires 1<=a<b<=m, "
                                "a+b<=m+1, k>=1");
    int n = 1 + k * (m - 1);
    ClusterPoset poset(n);
    // Chain j holds the sorted values of occurrence j; consecutive chains
    // share one element: rank b in the earlier chain, rank a in the later.
    std::vector<int> prev(m);
    int next_id = 1;
    for (int r = 0; r < m; ++r) prev[r] = next_id++;
    poset.add_chain(prev);
    for (int j = 1; j < k; ++j) {
        std::vector<int> chain(m);
        for (int r = 0; r < m; ++r)
            chain[r] = (r == a - 1) ? prev[b - 1] : next_id++;
        poset.add_chain(chain);
        prev = chain;
    }
    return poset;
}

BigCount glued_chain_extensions(int m, int a, int b, int k) {
    if (m < 2 || a < 1 || a > m || b < 1 || b > m || a == b || k < 1)
        throw InvalidInputError("glued chain parameters out of range");
    if (k == 1) return 1;
    // f[t]: extensions of the first j chains in which the shared element of
    // chains j and j+1 has rank t. Each gluing step merges a-1 fresh
    // elements below the shared element and m-a above it, tracking where the
    // next shared element (rank b of the new chain) lands.
    int n = m;
    std::vector<BigCount> f(n + 1, 0);
    f[b] = 1;
    for (int j = 1; j < k; ++j) {
        int nn = n + m - 1;
        std::vector<BigCount> g(nn + 1, 0);
        for (int t = 1; t <= n; ++t) {
            if (f[t] == 0) continue;
            if (b > a) {
                BigCount base = f[t] * binomial(t + a - 2, a - 1);
                for (int s = 0; s <= n - t; ++s) {
                    g[t + b - 1 + s] +=
                        base * binomial(s + b - a - 1, s) *
                        binomial(n - t - s + m - b, m - b);
                }
            } else {
                BigCount base = f[t] * binomial(n - t + m - a, m - a);
                for (int s = 0; s <= t - 1; ++s) {
                    g[s + b] += base * binomial(s + b - 1, s) *
                                binomial(t - 1 - s + a - 1 - b, a - 1 - b);
                }
            }
        }
        f = std::move(g);
        n = nn;
    }
    BigCount total = 0;
    for (const auto& v : f) total += v;
    return total;
}

namespace {

// Canonical labelling by colour refinement with individualization.
class Canonizer {
public:
    Canonizer(const ClusterPoset& p, const IsoOptions& opt)
        : p_(p), n_(p.size()), opt_(opt) {}

    std::string canonical() {
        std::vector<int> colors(n_);
        for (int v = 0; v < n_; ++v)
            colors[v] = p_.below_count(v + 1) * (n_ + 1) +
                        p_.above_count(v + 1);
        normalize(colors);
        refine(colors);
        best_.clear();
        search(colors);
        return best_;
    }

private:
    void normalize(std::vector<int>& colors) {
        std::vector<int> sorted(colors);
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int& c : colors)
            c = static_cast<int>(
                std::lower_bound(sorted.begin(), sorted.end(), c) -
                sorted.begin());
    }

    void refine(std::vector<int>& colors) {
        for (;;) {
            std::vector<std::tuple<int, std::vector<int>, std::vector<int>>>
                sig(n_);
            for (int v = 0; v < n_; ++v) {
                std::vector<int> below, above;
                p_.below_bits(v + 1).for_each(
                    [&](int u) { below.push_back(colors[u]); });
                for (int u = 0; u < n_; ++u)
                    if (p_.less(v + 1, u + 1)) above.push_back(colors[u]);
                std::sort(below.begin(), below.end());
                std::sort(above.begin(), above.end());
                sig[v] = {colors[v], std::move(below), std::move(above)};
            }
            std::map<std::tuple<int, std::vector<int>, std::vector<int>>, int>
                ids;
            for (const auto& s : sig) ids.emplace(s, 0);
            int next = 0;
            for (auto& [key, id] : ids) id = next++;
            bool changed = false;
            for (int v = 0; v < n_; ++v) {
                int c = ids[sig[v]];
                if (c != colors[v]) changed = true;
                colors[v] = c;
            }
            if (!changed) return;
        }
    }

    void search(std::vector<int> colors) {
        if (--budget_ < 0)
            throw ResourceError("isomorphism node budget exceeded");
        // Smallest colour class with more than one element.
        std::vector<std::vector<int>> cells(n_);
        for (int v = 0; v < n_; ++v) cells[colors[v]].push_back(v);
        int target = -1;
        for (int c = 0; c < n_; ++c) {
            if (cells[c].size() > 1) {
                target = c;
                break;
            }
        }
        if (target == -1) {
            emit(colors);
            return;
        }
        for (int v : cells[target]) {
            std::vector<int> branched(colors);
            for (int u = 0; u < n_; ++u)
                branched[u] = branched[u] * 2 + (u == v ? 1 : 0);
            normalize(branched);
            refine(branched);
            search(std::move(branched));
        }
    }

    void emit(const std::vector<int>& colors) {
        std::vector<int> order(n_);
        for (int v = 0; v < n_; ++v) order[colors[v]] = v;
        std::string s;
        s.reserve(static_cast<size_t>(n_) * n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                s += p_.less(order[i] + 1, order[j] + 1) ? '1' : '0';
        if (best_.empty() || s < best_) best_ = std::move(s);
    }

    const ClusterPoset& p_;
    int n_;
    IsoOptions opt_;
    long budget_ = 0;
    std::string best_;

public:
    void set_budget(long b) { budget_ = b; }
};

std::string canonical_form(const ClusterPoset& p, const IsoOptions& opt) {
    if (p.size() > opt.max_elements)
        throw ResourceError("poset too large for isomorphism (limit " +
                            std::to_string(opt.max_elements) + " elements)");
    Canonizer c(p, opt);
    c.set_budget(opt.node_budget);
    return c.canonical();
}

}  // namespace

bool poset_isomorphic(const ClusterPoset& p, const ClusterPoset& q,
                      const IsoOptions& opt) {
    if (p.size() != q.size()) return false;
    // Cheap invariant screen before canonical labelling.
    auto degrees = [](const ClusterPoset& x) {
        std::vector<std::pair<int, int>> d;
        d.reserve(x.size());
        for (int v = 1; v <= x.size(); ++v)
            d.emplace_back(x.below_count(v), x.above_count(v));
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degrees(p) != degrees(q)) return false;
    return canonical_form(p, opt) == canonical_form(q, opt);
}

}  // namespace cwilf
