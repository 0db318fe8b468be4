#include "simcore/qpoly.hpp"

#include <algorithm>
#include <utility>

#include "simcore/errors.hpp"

namespace simcore {

QPolynomial::QPolynomial(long c) {
    if (c != 0) {
        coeffs_.emplace_back(c);
    }
}

QPolynomial::QPolynomial(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) {
        coeffs_.emplace_back(c);
    }
    normalize();
}

QPolynomial::QPolynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPolynomial QPolynomial::monomial(long exponent, Integer coeff) {
    if (exponent < 0) {
        throw DomainError("monomial exponent must be non-negative");
    }
    std::vector<Integer> c(static_cast<std::size_t>(exponent) + 1);
    c.back() = std::move(coeff);
    return QPolynomial(std::move(c));
}

Integer QPolynomial::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(coeffs_.size())) {
        return 0;
    }
    return coeffs_[static_cast<std::size_t>(i)];
}

Integer QPolynomial::evaluate(const Integer& q) const {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * q + *it;
    }
    return acc;
}

Integer QPolynomial::at_one() const {
    Integer acc = 0;
    for (const auto& c : coeffs_) {
        acc += c;
    }
    return acc;
}

bool QPolynomial::is_palindromic() const {
    // Palindromic about the centre of the support, ignoring leading zeros.
    std::size_t lo = 0;
    while (lo < coeffs_.size() && coeffs_[lo] == 0) {
        ++lo;
    }
    if (lo == coeffs_.size()) {
        return true;
    }
    for (std::size_t i = lo, j = coeffs_.size() - 1; i < j; ++i, --j) {
        if (coeffs_[i] != coeffs_[j]) {
            return false;
        }
    }
    return true;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    normalize();
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(rhs.coeffs_.size());
    }
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    normalize();
    return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Integer> out(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

QPolynomial operator-(QPolynomial a) {
    for (auto& c : a.coeffs_) {
        c = -c;
    }
    return a;
}

std::string QPolynomial::to_string() const {
    if (is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Integer& c = coeffs_[i];
        if (c == 0) {
            continue;
        }
        Integer mag = abs(c);
        if (out.empty()) {
            if (c < 0) {
                out += "-";
            }
        } else {
            out += c < 0 ? " - " : " + ";
        }
        if (i == 0 || mag != 1) {
            out += mag.get_str();
        }
        if (i >= 1) {
            out += "q";
        }
        if (i >= 2) {
            out += "^" + std::to_string(i);
        }
    }
    return out;
}

void QPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) {
        coeffs_.pop_back();
    }
}

QDivision divmod(const QPolynomial& num, const QPolynomial& den) {
    if (den.is_zero()) {
        throw DomainError("polynomial division by zero");
    }
    const long dn = den.degree();
    const Integer& lead = den.coefficients().back();
    std::vector<Integer> rem(num.coefficients().begin(), num.coefficients().end());
    const long qdeg = num.degree() - dn;
    std::vector<Integer> quot(qdeg >= 0 ? static_cast<std::size_t>(qdeg) + 1 : 0);
    for (long shift = qdeg; shift >= 0; --shift) {
        Integer& top = rem[static_cast<std::size_t>(shift + dn)];
        if (top == 0) {
            continue;
        }
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
            throw FormulaViolation("polynomial division leaves a non-integral quotient coefficient");
        }
        Integer factor = top / lead;
        for (long i = 0; i <= dn; ++i) {
            rem[static_cast<std::size_t>(shift + i)] -= factor * den.coefficients()[static_cast<std::size_t>(i)];
        }
        quot[static_cast<std::size_t>(shift)] = std::move(factor);
    }
    return {QPolynomial(std::move(quot)), QPolynomial(std::move(rem))};
}

QPolynomial divide_exact(const QPolynomial& num, const QPolynomial& den) {
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) {
        throw FormulaViolation("inexact polynomial division: remainder " + r.to_string());
    }
    return q;
}

QPolynomial q_binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) {
        return {};
    }
    k = std::min(k, n - k);
    QPolynomial num = 1;
    QPolynomial den = 1;
    for (long i = 0; i < k; ++i) {
        num *= QPolynomial(1) - QPolynomial::monomial(n - i);
        den *= QPolynomial(1) - QPolynomial::monomial(i + 1);
    }
    return divide_exact(num, den);
}

QPolynomial q_binomial_pascal(long n, long k) {
    if (k < 0 || n < 0 || k > n) {
        return {};
    }
    std::vector<QPolynomial> row{QPolynomial(1)};
    for (long m = 1; m <= n; ++m) {
        std::vector<QPolynomial> next(static_cast<std::size_t>(m) + 1);
        next[0] = 1;
        next[static_cast<std::size_t>(m)] = 1;
        for (long j = 1; j < m; ++j) {
            next[static_cast<std::size_t>(j)] =
                row[static_cast<std::size_t>(j - 1)] + QPolynomial::monomial(j) * row[static_cast<std::size_t>(j)];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

}  // namespace simcore
