#include "cwilf/asymptotics.hpp"

#include <mpfr.h>

#include <cmath>
#include <ostream>

#include "cwilf/poset.hpp"

namespace cwilf {

namespace {

constexpr mpfr_prec_t kPrec = 256;

void check_bound_params(int m, int a, int b, int k) {
    if (!(1 <= a && a < b && b <= m && a + b <= m + 1))
        throw InvalidInputError("bounds require 1 <= a < b <= m, a+b <= m+1");
    if (k < 2) throw InvalidInputError("bounds require k >= 2");
}

std::string format_sig12(mpfr_t v) {
    char buf[64];
    mpfr_snprintf(buf, sizeof(buf), "%.12Rg", v);
    return std::string(buf);
}

// log(x) / (k log k) with directed rounding; rnd pushes the result toward
// the requested side.
void log_over_klogk(mpfr_t out, const BigCount& x, int k, mpfr_rnd_t rnd) {
    mpfr_rnd_t anti = rnd == MPFR_RNDD ? MPFR_RNDU : (rnd == MPFR_RNDU
                                                          ? MPFR_RNDD
                                                          : rnd);
    mpfr_t num, den;
    mpfr_init2(num, kPrec);
    mpfr_init2(den, kPrec);
    mpfr_set_z(num, x.get_mpz_t(), rnd);
    mpfr_log(num, num, rnd);
    mpfr_set_ui(den, static_cast<unsigned long>(k), anti);
    mpfr_log(den, den, anti);
    mpfr_mul_ui(den, den, static_cast<unsigned long>(k), anti);
    mpfr_div(out, num, den, rnd);
    mpfr_clear(num);
    mpfr_clear(den);
}

struct BoundaryLetters {
    int m, a, b;
};

BoundaryLetters standard_nonoverlapping_letters(const Permutation& pattern) {
    if (!is_nonoverlapping(pattern))
        throw InvalidInputError("pattern must be non-overlapping");
    if (!is_standard_form(pattern))
        throw InvalidInputError("pattern must be in standard form");
    int m = pattern.size();
    return {m, pattern.at(1), pattern.at(m)};
}

}  // namespace

Permutation nonoverlap_construct(int m, int a, int b) {
    if (!(1 <= a && a < b && b < m && a + b <= m + 1))
        throw InvalidInputError(
            "construction requires 1 <= a < b < m and a+b <= m+1");
    std::vector<int> w;
    w.reserve(m);
    for (int v = a; v <= b - 1; ++v) w.push_back(v);
    for (int v = b + 1; v <= m - 1; ++v) w.push_back(v);
    for (int v = 1; v <= a - 1; ++v) w.push_back(v);
    w.push_back(m);
    w.push_back(b);
    Permutation p(std::move(w));
    // The recipe yields an overlapping word for (m,a,b)=(4,2,3) and nothing
    // else at desk scale; reject rather than break the contract.
    if (!is_nonoverlapping(p))
        throw InvalidInputError("no non-overlapping construction for m=" +
                                std::to_string(m) + ", a=" + std::to_string(a) +
                                ", b=" + std::to_string(b));
    return p;
}

BigCount bound_s(int m, int a, int b, int k) {
    check_bound_params(m, a, b, k);
    BigCount denom = 1;
    for (int i = 0; i < k - 1; ++i) denom *= factorial(a - 1);
    denom *= factorial(a + static_cast<long>(k) * (m - a));
    BigCount num = factorial(1 + static_cast<long>(k) * (m - 1));
    BigCount q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                denom.get_mpz_t());
    if (rem != 0) throw InternalError("s_k multinomial not integral");
    return q;
}

BigCount bound_q(int m, int a, int b, int k) {
    check_bound_params(m, a, b, k);
    BigCount q = 1;
    for (int i = 1; i <= k - 1; ++i)
        q *= binomial(static_cast<unsigned long>(i) * (m - a) + (m - b), m - b);
    return q;
}

BigCount bound_t(int m, int a, int b, int k) {
    check_bound_params(m, a, b, k);
    BigCount denom = factorial(b - 1);
    for (int i = 0; i < k - 1; ++i) denom *= factorial(a - 1);
    BigCount num = factorial(b - 1 + static_cast<long>(k - 1) * (a - 1));
    BigCount q, rem;
    mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(),
                denom.get_mpz_t());
    if (rem != 0) throw InternalError("t_k multinomial not integral");
    return q;
}

std::vector<BoundTriple> sandwich_check(int m, int a, int b, int kmax) {
    if (kmax < 2) throw InvalidInputError("sandwich needs kmax >= 2");
    std::vector<BoundTriple> out;
    for (int k = 2; k <= kmax; ++k) {
        BoundTriple bt;
        bt.k = k;
        bt.s = bound_s(m, a, b, k);
        bt.q = bound_q(m, a, b, k);
        bt.t = bound_t(m, a, b, k);
        bt.lower = bt.t * bt.q;
        bt.upper = bt.s * bt.q;
        bt.actual = glued_chain_extensions(m, a, b, k);
        if (!(bt.lower <= bt.actual && bt.actual <= bt.upper))
            throw InternalError("sandwich violated at k=" + std::to_string(k));
        out.push_back(std::move(bt));
    }
    return out;
}

std::vector<std::string> nk_sequence(const Permutation& pattern, int kmax) {
    auto [m, a, b] = standard_nonoverlapping_letters(pattern);
    if (kmax < 2) throw InvalidInputError("nk sequence needs kmax >= 2");
    std::vector<std::string> out;
    mpfr_t v, e;
    mpfr_init2(v, kPrec);
    mpfr_init2(e, kPrec);
    for (int k = 2; k <= kmax; ++k) {
        BigCount r = glued_chain_extensions(m, a, b, k);
        // N_k = r^{1/k} / k^{m-b+a-1}
        mpfr_set_z(v, r.get_mpz_t(), MPFR_RNDN);
        mpfr_rootn_ui(v, v, static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_set_ui(e, static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_pow_si(e, e, m - b + a - 1, MPFR_RNDN);
        mpfr_div(v, v, e, MPFR_RNDN);
        out.push_back(format_sig12(v));
    }
    mpfr_clear(v);
    mpfr_clear(e);
    return out;
}

RecoveryReport recover_difference(const Permutation& pattern, int kmax) {
    auto [m, a, b] = standard_nonoverlapping_letters(pattern);
    if (kmax < 2) throw InvalidInputError("recovery needs kmax >= 2");
    int k = kmax;
    BigCount lower = bound_t(m, a, b, k) * bound_q(m, a, b, k);
    BigCount upper = bound_s(m, a, b, k) * bound_q(m, a, b, k);
    BigCount actual = glued_chain_extensions(m, a, b, k);

    RecoveryReport report;
    report.k = k;
    report.m = m;
    report.a = a;
    report.b = b;
    report.true_diff = b - a;
    report.bracket_contains_actual = lower <= actual && actual <= upper;

    mpfr_t ll, lu, lr, tmp;
    mpfr_init2(ll, kPrec);
    mpfr_init2(lu, kPrec);
    mpfr_init2(lr, kPrec);
    mpfr_init2(tmp, kPrec);
    log_over_klogk(ll, lower, k, MPFR_RNDN);
    log_over_klogk(lu, upper, k, MPFR_RNDN);
    log_over_klogk(lr, actual, k, MPFR_RNDN);
    report.log_lower = format_sig12(ll);
    report.log_upper = format_sig12(lu);
    report.log_actual = format_sig12(lr);

    // Conservative inner bracket for last-minus-first: round each endpoint
    // toward the inside so every reported integer is certainly inside
    // [m-1 - log u/(k log k), m-1 - log l/(k log k)].
    log_over_klogk(tmp, upper, k, MPFR_RNDD);  // underestimate of log u term
    mpfr_ui_sub(tmp, static_cast<unsigned long>(m - 1), tmp, MPFR_RNDU);
    mpfr_ceil(tmp, tmp);
    report.diff_lo = static_cast<int>(mpfr_get_si(tmp, MPFR_RNDN));
    log_over_klogk(tmp, lower, k, MPFR_RNDU);  // overestimate of log l term
    mpfr_ui_sub(tmp, static_cast<unsigned long>(m - 1), tmp, MPFR_RNDD);
    mpfr_floor(tmp, tmp);
    report.diff_hi = static_cast<int>(mpfr_get_si(tmp, MPFR_RNDN));

    mpfr_ui_sub(tmp, static_cast<unsigned long>(m - 1), lr, MPFR_RNDN);
    long rounded = mpfr_get_si(tmp, MPFR_RNDN);
    report.midpoint_rounds_to_diff = rounded == report.true_diff;

    mpfr_clear(ll);
    mpfr_clear(lu);
    mpfr_clear(lr);
    mpfr_clear(tmp);
    return report;
}

Diff1Report diff1_check(int m) {
    if (m < 4) throw InvalidInputError("difference-1 check needs m >= 4");
    Diff1Report report;
    report.m = m;
    for (int a = 1; a + (a + 1) <= m + 1 && a + 1 < m; ++a)
        report.values.emplace_back(a, glued_chain_extensions(m, a, a + 1, 2));
    report.strictly_decreasing = true;
    for (size_t i = 1; i < report.values.size(); ++i)
        if (!(report.values[i - 1].second > report.values[i].second))
            report.strictly_decreasing = false;
    return report;
}

void write_nk_csv(std::ostream& out, const Permutation& pattern, int kmax) {
    auto [m, a, b] = standard_nonoverlapping_letters(pattern);
    out << "k,N_k,lower_bound,upper_bound,pattern,a,b\n";
    mpfr_t v, e;
    mpfr_init2(v, kPrec);
    mpfr_init2(e, kPrec);
    auto transform = [&](const BigCount& x, int k) {
        mpfr_set_z(v, x.get_mpz_t(), MPFR_RNDN);
        mpfr_rootn_ui(v, v, static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_set_ui(e, static_cast<unsigned long>(k), MPFR_RNDN);
        mpfr_pow_si(e, e, m - b + a - 1, MPFR_RNDN);
        mpfr_div(v, v, e, MPFR_RNDN);
        return format_sig12(v);
    };
    for (int k = 2; k <= kmax; ++k) {
        BigCount r = glued_chain_extensions(m, a, b, k);
        BigCount lower = bound_t(m, a, b, k) * bound_q(m, a, b, k);
        BigCount upper = bound_s(m, a, b, k) * bound_q(m, a, b, k);
        out << k << ',' << transform(r, k) << ',' << transform(lower, k)
            << ',' << transform(upper, k) << ',' << pattern.str() << ',' << a
            << ',' << b << '\n';
    }
    mpfr_clear(v);
    mpfr_clear(e);
}

}  // namespace cwilf
