#pragma once

#include <gmpxx.h>

#include <string>

namespace cwilf {

// Exact nonnegative integer counts. All counting in this library is exact;
// nothing is ever rounded or truncated.
using BigCount = mpz_class;

BigCount factorial(unsigned long n);
BigCount binomial(unsigned long n, unsigned long k);

inline std::string to_decimal(const BigCount& v) { return v.get_str(); }

}  // namespace cwilf
