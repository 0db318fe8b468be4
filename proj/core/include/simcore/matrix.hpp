#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "simcore/errors.hpp"
#include "simcore/integer.hpp"
#include "simcore/qpoly.hpp"

namespace simcore {

/// Square matrix over an exact ring, stored row-major. Dimension 0 is allowed.
template <typename T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n) : n_(n), data_(n * n, T(0)) {}

    /// Builds from nested rows; throws DomainError unless every row has as
    /// many entries as there are rows.
    SquareMatrix(std::initializer_list<std::initializer_list<T>> rows) : n_(rows.size()) {
        data_.reserve(n_ * n_);
        for (const auto& row : rows) {
            if (row.size() != n_) {
                throw DomainError("matrix is not square: " + std::to_string(n_) + " rows but a row of " +
                                  std::to_string(row.size()) + " entries");
            }
            data_.insert(data_.end(), row.begin(), row.end());
        }
    }

    static SquareMatrix from_rows(const std::vector<std::vector<T>>& rows) {
        SquareMatrix m(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (rows[i].size() != rows.size()) {
                throw DomainError("matrix is not square: " + std::to_string(rows.size()) +
                                  " rows but row " + std::to_string(i) + " has " +
                                  std::to_string(rows[i].size()) + " entries");
            }
            for (std::size_t j = 0; j < rows.size(); ++j) {
                m(i, j) = rows[i][j];
            }
        }
        return m;
    }

    static SquareMatrix identity(std::size_t n) {
        SquareMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) {
            m(i, i) = T(1);
        }
        return m;
    }

    std::size_t size() const noexcept { return n_; }
    T& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

private:
    std::size_t n_ = 0;
    std::vector<T> data_;
};

using IntMatrix = SquareMatrix<Integer>;
using QPolyMatrix = SquareMatrix<QPolynomial>;

/// Dimension at or below which determinants use cofactor expansion.
inline constexpr std::size_t kCofactorLimit = 6;

Integer det_exact(const IntMatrix& m);
QPolynomial det_qpoly(const QPolyMatrix& m);

/// Determinant of the (n-1)x(n-1) Hessenberg matrix with 1-based entries
/// C(j+1, i-j+1). Equals the Catalan number C_n.
Integer hessenberg_catalan_det(long n);

}  // namespace simcore
