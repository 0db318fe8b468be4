#include "simcore/matrix.hpp"

#include <utility>

namespace simcore {
namespace {

template <typename T>
T cofactor_det(const SquareMatrix<T>& m, std::vector<std::size_t>& cols, std::size_t row) {
    const std::size_t n = m.size();
    if (row == n) {
        return T(1);
    }
    T acc(0);
    bool negative = false;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const std::size_t col = cols[c];
        if (!(m(row, col) == T(0))) {
            cols.erase(cols.begin() + static_cast<std::ptrdiff_t>(c));
            T term = m(row, col) * cofactor_det(m, cols, row + 1);
            cols.insert(cols.begin() + static_cast<std::ptrdiff_t>(c), col);
            if (negative) {
                acc -= term;
            } else {
                acc += term;
            }
        }
        negative = !negative;
    }
    return acc;
}

template <typename T>
T cofactor_det(const SquareMatrix<T>& m) {
    std::vector<std::size_t> cols(m.size());
    for (std::size_t i = 0; i < cols.size(); ++i) {
        cols[i] = i;
    }
    return cofactor_det(m, cols, 0);
}

// Fraction-free Gaussian elimination. Every division by the previous pivot is
// exact in an integral domain.
template <typename T, typename ExactDiv>
T bareiss_det(SquareMatrix<T> a, ExactDiv exact_div) {
    const std::size_t n = a.size();
    T prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == T(0)) {
            std::size_t swap = k + 1;
            while (swap < n && a(swap, k) == T(0)) {
                ++swap;
            }
            if (swap == n) {
                return T(0);
            }
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(swap, j));
            }
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) = exact_div(a(i, j) * a(k, k) - a(i, k) * a(k, j), prev);
            }
        }
        prev = a(k, k);
    }
    T d = n == 0 ? T(1) : a(n - 1, n - 1);
    if (negate) {
        d = T(0) - d;
    }
    return d;
}

}  // namespace

Integer det_exact(const IntMatrix& m) {
    if (m.size() <= kCofactorLimit) {
        return cofactor_det(m);
    }
    return bareiss_det(m, [](const Integer& num, const Integer& den) {
        Integer q;
        mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        return q;
    });
}

QPolynomial det_qpoly(const QPolyMatrix& m) {
    if (m.size() <= kCofactorLimit) {
        return cofactor_det(m);
    }
    return bareiss_det(m, [](const QPolynomial& num, const QPolynomial& den) { return divide_exact(num, den); });
}

Integer hessenberg_catalan_det(long n) {
    if (n < 1) {
        throw DomainError("hessenberg_catalan_det requires n >= 1");
    }
    const auto dim = static_cast<std::size_t>(n - 1);
    IntMatrix m(dim);
    for (std::size_t i = 1; i <= dim; ++i) {
        for (std::size_t j = 1; j <= dim; ++j) {
            m(i - 1, j - 1) = binomial(static_cast<long>(j) + 1, static_cast<long>(i) - static_cast<long>(j) + 1);
        }
    }
    return det_exact(m);
}

}  // namespace simcore
