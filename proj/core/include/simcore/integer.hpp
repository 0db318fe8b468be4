#pragma once

#include <gmpxx.h>

#include <string>

namespace simcore {

using Integer = mpz_class;
using Rational = mpq_class;

/// Binomial coefficient C(n, k).
///
/// Zero when k < 0 or k > n >= 0. A negative n with k >= 0 lies outside the
/// combinatorial range used here and throws DomainError.
Integer binomial(long n, long k);

/// Catalan number C_n = C(2n, n) / (n + 1); C_n = 0 for n < 0.
Integer catalan(long n);

/// Motzkin number via the three-term recurrence.
Integer motzkin(long n);

Integer pow2(unsigned long e);

std::string to_string(const Integer& v);

long to_long(const Integer& v);

}  // namespace simcore
