#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "simcore/integer.hpp"

namespace simcore {

/// Truncated power series in x with exact rational coefficients.
///
/// A series of order N knows the coefficients of x^0 .. x^(N-1) and nothing
/// beyond. Binary operations take the smaller order of their operands, so
/// unknown coefficients never leak in as zeros.
class PowerSeries {
public:
    /// The zero series known to the given order.
    explicit PowerSeries(std::size_t order);
    PowerSeries(std::vector<Rational> coeffs, std::size_t order);

    static PowerSeries from_integers(std::span<const long> coeffs, std::size_t order);
    static PowerSeries constant(const Rational& c, std::size_t order);
    /// c * x^exponent
    static PowerSeries monomial(std::size_t exponent, const Rational& c, std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size(); }
    std::span<const Rational> coefficients() const noexcept { return coeffs_; }
    /// Coefficient of x^i; throws DomainError when i >= order().
    const Rational& operator[](std::size_t i) const;

    /// Same series known to a lower order.
    PowerSeries truncated(std::size_t order) const;

    PowerSeries& operator+=(const PowerSeries& rhs);
    PowerSeries& operator-=(const PowerSeries& rhs);
    PowerSeries& operator*=(const PowerSeries& rhs);
    PowerSeries& operator*=(const Rational& c);

    friend PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
    friend PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
    friend PowerSeries operator*(PowerSeries a, const PowerSeries& b) { return a *= b; }
    friend PowerSeries operator*(PowerSeries a, const Rational& c) { return a *= c; }
    friend bool operator==(const PowerSeries& a, const PowerSeries& b) = default;

    /// All known coefficients are integers.
    bool is_integral() const;
    /// Coefficients as integers; throws FormulaViolation if any is fractional.
    std::vector<Integer> integer_coefficients() const;

    std::string to_string() const;

private:
    std::vector<Rational> coeffs_;
};

/// f / g for g with a nonzero constant term. Result order is min of both orders.
PowerSeries divide(const PowerSeries& f, const PowerSeries& g);

/// Exact division by x^m. The m lowest coefficients of f must be zero
/// (FormulaViolation otherwise); the result is known to order f.order() - m.
PowerSeries divide_by_monomial(const PowerSeries& f, std::size_t m);

/// Multiplicative inverse for a series with nonzero constant term.
PowerSeries reciprocal(const PowerSeries& f);

/// Principal square root (constant term +1) of a series with f(0) = 1,
/// by Newton iteration g <- (g + f/g) / 2 with doubling precision.
PowerSeries sqrt(const PowerSeries& f);

}  // namespace simcore
