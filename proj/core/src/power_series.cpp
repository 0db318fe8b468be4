#include "simcore/power_series.hpp"

#include <algorithm>
#include <utility>

#include "simcore/errors.hpp"

namespace simcore {

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order) {}

PowerSeries::PowerSeries(std::vector<Rational> coeffs, std::size_t order) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order);
}

PowerSeries PowerSeries::from_integers(std::span<const long> coeffs, std::size_t order) {
    std::vector<Rational> c(order);
    for (std::size_t i = 0; i < std::min(order, coeffs.size()); ++i) {
        c[i] = coeffs[i];
    }
    return {std::move(c), order};
}

PowerSeries PowerSeries::constant(const Rational& c, std::size_t order) {
    return monomial(0, c, order);
}

PowerSeries PowerSeries::monomial(std::size_t exponent, const Rational& c, std::size_t order) {
    PowerSeries s(order);
    if (exponent < order) {
        s.coeffs_[exponent] = c;
    }
    return s;
}

const Rational& PowerSeries::operator[](std::size_t i) const {
    if (i >= coeffs_.size()) {
        throw DomainError("coefficient x^" + std::to_string(i) + " is beyond truncation order " +
                          std::to_string(coeffs_.size()));
    }
    return coeffs_[i];
}

PowerSeries PowerSeries::truncated(std::size_t order) const {
    if (order > coeffs_.size()) {
        throw DomainError("cannot raise truncation order from " + std::to_string(coeffs_.size()) +
                          " to " + std::to_string(order));
    }
    return {std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(order)), order};
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    return *this;
}

PowerSeries& PowerSeries::operator*=(const PowerSeries& rhs) {
    const std::size_t n = std::min(coeffs_.size(), rhs.coeffs_.size());
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; i + j < n; ++j) {
            out[i + j] += coeffs_[i] * rhs.coeffs_[j];
        }
    }
    coeffs_ = std::move(out);
    return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& c) {
    for (auto& v : coeffs_) {
        v *= c;
    }
    return *this;
}

bool PowerSeries::is_integral() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c.get_den() == 1; });
}

std::vector<Integer> PowerSeries::integer_coefficients() const {
    std::vector<Integer> out;
    out.reserve(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].get_den() != 1) {
            throw FormulaViolation("coefficient of x^" + std::to_string(i) + " is not integral: " +
                                   coeffs_[i].get_str());
        }
        out.push_back(coeffs_[i].get_num());
    }
    return out;
}

std::string PowerSeries::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) {
            continue;
        }
        if (!out.empty()) {
            out += coeffs_[i] < 0 ? " - " : " + ";
        } else if (coeffs_[i] < 0) {
            out += "-";
        }
        Rational mag = abs(coeffs_[i]);
        if (i == 0 || mag != 1) {
            out += mag.get_str();
        }
        if (i >= 1) {
            out += "x";
        }
        if (i >= 2) {
            out += "^" + std::to_string(i);
        }
    }
    if (out.empty()) {
        out = "0";
    }
    return out + " + O(x^" + std::to_string(coeffs_.size()) + ")";
}

PowerSeries reciprocal(const PowerSeries& f) {
    const std::size_t n = f.order();
    if (n == 0) {
        return PowerSeries(0);
    }
    const auto c = f.coefficients();
    if (c[0] == 0) {
        throw DomainError("series reciprocal requires a nonzero constant term");
    }
    std::vector<Rational> g(n);
    g[0] = 1 / c[0];
    for (std::size_t i = 1; i < n; ++i) {
        Rational acc = 0;
        for (std::size_t j = 1; j <= i; ++j) {
            acc += c[j] * g[i - j];
        }
        g[i] = -acc * g[0];
    }
    return {std::move(g), n};
}

PowerSeries divide(const PowerSeries& f, const PowerSeries& g) {
    if (g.order() == 0 || g.coefficients()[0] == 0) {
        throw DomainError("series division requires a nonzero constant term in the divisor");
    }
    const std::size_t n = std::min(f.order(), g.order());
    return f.truncated(n) * reciprocal(g.truncated(n));
}

PowerSeries divide_by_monomial(const PowerSeries& f, std::size_t m) {
    if (m > f.order()) {
        throw DomainError("cannot divide a series of order " + std::to_string(f.order()) + " by x^" +
                          std::to_string(m));
    }
    const auto c = f.coefficients();
    for (std::size_t i = 0; i < m; ++i) {
        if (c[i] != 0) {
            throw FormulaViolation("division by x^" + std::to_string(m) + " is inexact: coefficient of x^" +
                                   std::to_string(i) + " is " + c[i].get_str());
        }
    }
    return {std::vector<Rational>(c.begin() + static_cast<std::ptrdiff_t>(m), c.end()), f.order() - m};
}

PowerSeries sqrt(const PowerSeries& f) {
    const std::size_t n = f.order();
    if (n == 0) {
        return PowerSeries(0);
    }
    if (f.coefficients()[0] != 1) {
        throw DomainError("series square root requires constant term 1, got " + f.coefficients()[0].get_str());
    }
    const Rational half(1, 2);
    PowerSeries g = PowerSeries::constant(1, 1);
    std::size_t prec = 1;
    while (prec < n) {
        prec = std::min(2 * prec, n);
        PowerSeries lifted(std::vector<Rational>(g.coefficients().begin(), g.coefficients().end()), prec);
        g = (lifted + divide(f.truncated(prec), lifted)) * half;
    }
    return g;
}

}  // namespace simcore
