#pragma once

#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "simcore/integer.hpp"

namespace simcore {

/// Polynomial in q with arbitrary-precision integer coefficients.
///
/// Coefficient i multiplies q^i. Trailing zeros are always stripped, so the
/// zero polynomial has no coefficients and degree() == -1.
class QPolynomial {
public:
    QPolynomial() = default;
    QPolynomial(long c);  // NOLINT(google-explicit-constructor): constants promote
    QPolynomial(std::initializer_list<long> coeffs);
    explicit QPolynomial(std::vector<Integer> coeffs);

    static QPolynomial monomial(long exponent, Integer coeff = 1);

    std::span<const Integer> coefficients() const noexcept { return coeffs_; }
    /// Coefficient of q^i; zero outside the stored range.
    Integer coeff(long i) const;
    long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    Integer evaluate(const Integer& q) const;
    Integer at_one() const;
    bool is_palindromic() const;

    QPolynomial& operator+=(const QPolynomial& rhs);
    QPolynomial& operator-=(const QPolynomial& rhs);
    QPolynomial& operator*=(const QPolynomial& rhs);

    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }
    friend QPolynomial operator-(QPolynomial a);
    friend bool operator==(const QPolynomial& a, const QPolynomial& b) = default;

    /// Human-readable form such as "1 + q + 2q^2".
    std::string to_string() const;

private:
    void normalize();
    std::vector<Integer> coeffs_;
};

struct QDivision {
    QPolynomial quotient;
    QPolynomial remainder;
};

/// Long division over Z[q]. Throws FormulaViolation if some quotient
/// coefficient is not integral.
QDivision divmod(const QPolynomial& num, const QPolynomial& den);

/// Division that must be exact; a nonzero remainder throws FormulaViolation.
QPolynomial divide_exact(const QPolynomial& num, const QPolynomial& den);

/// Gaussian binomial [n over k]_q from the product/quotient form
/// prod (1 - q^(n-i)) / prod (1 - q^(i+1)), i = 0..k-1.
/// Zero polynomial when k < 0 or k > n.
QPolynomial q_binomial(long n, long k);

/// Same polynomial via [n,k] = [n-1,k-1] + q^k [n-1,k]. Used as a cross-check.
QPolynomial q_binomial_pascal(long n, long k);

}  // namespace simcore
