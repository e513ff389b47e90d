#include "cwilf/bigcount.hpp"

namespace cwilf {

BigCount factorial(unsigned long n) {
    BigCount r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigCount binomial(unsigned long n, unsigned long k) {
    if (k > n) return 0;
    BigCount r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

}  // namespace cwilf
