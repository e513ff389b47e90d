#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cwilf/bigcount.hpp"
#include "cwilf/permutation.hpp"

namespace cwilf {

// The explicit non-overlapping pattern with first letter a and last letter b:
// a,(a+1),..,(b-1),(b+1),..,(m-1),1,2,..,(a-1),m,b.
// Requires 1 <= a < b < m and a+b <= m+1.
Permutation nonoverlap_construct(int m, int a, int b);

// Exact multinomial/product bounds for the diagonal cluster numbers of a
// non-overlapping pattern with boundary letters (a,b); k >= 2.
BigCount bound_s(int m, int a, int b, int k);
BigCount bound_q(int m, int a, int b, int k);
BigCount bound_t(int m, int a, int b, int k);

struct BoundTriple {
    int k = 0;
    BigCount lower;   // t_k * q_k
    BigCount actual;  // r_{1+k(m-1),k}
    BigCount upper;   // s_k * q_k
    BigCount s, q, t;
};

// lower <= actual <= upper for each k in 2..kmax, verified exactly; a
// violated sandwich throws InternalError.
std::vector<BoundTriple> sandwich_check(int m, int a, int b, int kmax);

// N_k = r^{1/k} / k^{m-b+a-1} for k = 2..kmax, 12 significant digits,
// computed from the exact integers through arbitrary-precision logs.
// Requires a non-overlapping pattern in standard form.
std::vector<std::string> nk_sequence(const Permutation& pattern, int kmax);

struct RecoveryReport {
    int k = 0;
    int m = 0, a = 0, b = 0;
    // log l / (k log k) and friends, 12 significant digits.
    std::string log_lower, log_actual, log_upper;
    // Conservative integer bracket implied for last-minus-first.
    int diff_lo = 0, diff_hi = 0;
    bool bracket_contains_actual = false;  // log r inside [log l, log u]
    bool midpoint_rounds_to_diff = false;
    int true_diff = 0;
};

// Exact bracket at k = kmax; reported, never asserted as a limit.
RecoveryReport recover_difference(const Permutation& pattern, int kmax);

struct Diff1Report {
    int m = 0;
    std::vector<std::pair<int, BigCount>> values;  // (a, r_{2m-1,2} at (a,a+1))
    bool strictly_decreasing = false;
};

// For difference-1 boundary pairs, the k=2 diagonal cluster number strictly
// decreases as the first letter grows.
Diff1Report diff1_check(int m);

// CSV columns: k, N_k, lower_bound, upper_bound, pattern, a, b.
void write_nk_csv(std::ostream& out, const Permutation& pattern, int kmax);

}  // namespace cwilf
