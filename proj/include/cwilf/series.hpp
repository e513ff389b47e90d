#pragma once

#include <string>
#include <vector>

#include "cwilf/bigcount.hpp"
#include "cwilf/permutation.hpp"
#include "cwilf/poset.hpp"

namespace cwilf {

// Dense polynomial in the marker variable; coeff[k] multiplies u^k.
using UPoly = std::vector<BigCount>;

// Truncated exponential generating function. coeff[n] is the polynomial
// n! * [z^n] of the series, so every stored number is an exact integer.
struct TruncatedSeries {
    int order = 0;
    std::vector<UPoly> coeff;  // size order+1
};

// R_pi(t,z) truncated at z^N: degree-n entry is sum_k r_{n,k} t^k.
TruncatedSeries cluster_gf(const Permutation& pattern, int N,
                           const CountOptions& opt = {});

// F_pi(u,z) = 1 / (1 - z - R_pi(u-1,z)) truncated at z^N, by the exact
// series reciprocal recurrence on n!-scaled coefficients.
TruncatedSeries pattern_gf(const Permutation& pattern, int N,
                           const CountOptions& opt = {});

// u^k coefficient of the degree-n entry. Throws InternalError if the value
// is negative (upstream bug), InvalidInputError when n exceeds the order.
BigCount extract_a(const TruncatedSeries& series, int n, int k);

// JSON text: one {"n": n, "coeffs": [...]} object per degree, coefficients
// as decimal strings.
std::string series_json(const TruncatedSeries& series);

}  // namespace cwilf
