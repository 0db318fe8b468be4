#include "simcore/integer.hpp"

#include <vector>

#include "simcore/errors.hpp"

namespace simcore {

Integer binomial(long n, long k) {
    if (k < 0) {
        return 0;
    }
    if (n < 0) {
        throw DomainError("binomial: negative upper index " + std::to_string(n) +
                          " is not supported");
    }
    if (k > n) {
        return 0;
    }
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

Integer catalan(long n) {
    if (n < 0) {
        return 0;
    }
    Integer c = binomial(2 * n, n);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(n + 1));
    return c;
}

Integer motzkin(long n) {
    if (n < 0) {
        return 0;
    }
    // (m + 2) M_m = (2m + 1) M_{m-1} + 3(m - 1) M_{m-2}
    std::vector<Integer> m(static_cast<std::size_t>(n) + 2);
    m[0] = 1;
    m[1] = 1;
    for (long i = 2; i <= n; ++i) {
        Integer num = (2 * i + 1) * m[i - 1] + 3 * (i - 1) * m[i - 2];
        mpz_divexact_ui(m[i].get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(i + 2));
    }
    return m[static_cast<std::size_t>(n)];
}

Integer pow2(unsigned long e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, e);
    return r;
}

std::string to_string(const Integer& v) { return v.get_str(); }

long to_long(const Integer& v) {
    if (!v.fits_slong_p()) {
        throw DomainError("integer " + v.get_str() + " does not fit in a machine word");
    }
    return v.get_si();
}

}  // namespace simcore
