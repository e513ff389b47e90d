#include "cwilf/series.hpp"

#include <sstream>

#include <json.hpp>

#include "cwilf/cluster.hpp"

namespace cwilf {

namespace {

void trim(UPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void acc_scaled(UPoly& into, const UPoly& a, const UPoly& b,
                const BigCount& scale) {
    if (a.empty() || b.empty() || scale == 0) return;
    if (into.size() < a.size() + b.size() - 1)
        into.resize(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        BigCount ai = a[i] * scale;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            into[i + j] += ai * b[j];
        }
    }
}

}  // namespace

TruncatedSeries cluster_gf(const Permutation& pattern, int N,
                           const CountOptions& opt) {
    if (N < 0) throw InvalidInputError("series order must be >= 0");
    TruncatedSeries series;
    series.order = N;
    series.coeff.assign(N + 1, UPoly{});
    int m = pattern.size();
    for (int n = m; n <= N; ++n) {
        UPoly& poly = series.coeff[n];
        for (const auto& ms : feasible_marks(pattern, n)) {
            size_t k = ms.marks.size();
            if (poly.size() < k + 1) poly.resize(k + 1, 0);
            poly[k] += count_linear_extensions(build_poset(pattern, ms), opt);
        }
        trim(poly);
    }
    return series;
}

TruncatedSeries pattern_gf(const Permutation& pattern, int N,
                           const CountOptions& opt) {
    TruncatedSeries R = cluster_gf(pattern, N, opt);
    // Powers of (u-1), for substituting t = u-1 into R.
    std::vector<UPoly> um1(N + 1);
    um1[0] = UPoly{1};
    for (int k = 1; k <= N; ++k) {
        const UPoly& prev = um1[k - 1];
        UPoly cur(prev.size() + 1, 0);
        for (size_t i = 0; i < prev.size(); ++i) {
            cur[i + 1] += prev[i];
            cur[i] -= prev[i];
        }
        um1[k] = std::move(cur);
    }
    // G = z + R(u-1, z), scaled coefficients G[j] = j! [z^j] G.
    std::vector<UPoly> G(N + 1);
    for (int j = 0; j <= N; ++j) {
        UPoly g;
        if (j == 1) g = UPoly{1};
        const UPoly& rj = R.coeff[j];
        for (size_t k = 0; k < rj.size(); ++k) {
            if (rj[k] == 0) continue;
            if (g.size() < um1[k].size()) g.resize(um1[k].size(), 0);
            for (size_t i = 0; i < um1[k].size(); ++i)
                g[i] += rj[k] * um1[k][i];
        }
        trim(g);
        G[j] = std::move(g);
    }
    // F = 1/(1 - G): F_n = sum_{i<n} C(n,i) F_i G_{n-i}, F_0 = 1.
    TruncatedSeries F;
    F.order = N;
    F.coeff.assign(N + 1, UPoly{});
    F.coeff[0] = UPoly{1};
    for (int n = 1; n <= N; ++n) {
        UPoly fn;
        for (int i = 0; i < n; ++i)
            acc_scaled(fn, F.coeff[i], G[n - i], binomial(n, i));
        trim(fn);
        F.coeff[n] = std::move(fn);
    }
    return F;
}

BigCount extract_a(const TruncatedSeries& series, int n, int k) {
    if (n < 0 || n > series.order)
        throw InvalidInputError("degree outside the truncation order");
    if (k < 0) return 0;
    const UPoly& poly = series.coeff[n];
    if (static_cast<size_t>(k) >= poly.size()) return 0;
    if (poly[k] < 0)
        throw InternalError("negative extracted coefficient at n=" +
                            std::to_string(n) + ", k=" + std::to_string(k));
    return poly[k];
}

std::string series_json(const TruncatedSeries& series) {
    nlohmann::json arr = nlohmann::json::array();
    for (int n = 0; n <= series.order; ++n) {
        nlohmann::json entry;
        entry["n"] = n;
        nlohmann::json coeffs = nlohmann::json::array();
        for (const auto& c : series.coeff[n]) coeffs.push_back(to_decimal(c));
        entry["coeffs"] = std::move(coeffs);
        arr.push_back(std::move(entry));
    }
    return arr.dump();
}

}  // namespace cwilf
