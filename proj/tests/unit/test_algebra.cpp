#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "simcore/errors.hpp"
#include "simcore/matrix.hpp"
#include "simcore/power_series.hpp"
#include "simcore/qpoly.hpp"

using namespace simcore;

TEST_CASE("binomial") {
    CHECK(binomial(8, 3) == oracle::pascal_binomial(8, 3));
    CHECK(binomial(8, 3) == 56);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(17, 0) == 1);
    CHECK(binomial(2, 3) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK_THROWS_AS(binomial(-3, 2), DomainError);
    for (long n = 0; n <= 40; ++n) {
        for (long k = 0; k <= n; ++k) {
            REQUIRE(binomial(n, k) == oracle::pascal_binomial(n, k));
        }
    }
    // no overflow
    CHECK(binomial(100, 50).get_str() == "100891344545564193334812497256");
}

TEST_CASE("catalan and motzkin numbers") {
    const long cat[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
    const long mot[] = {1, 1, 2, 4, 9, 21, 51, 127, 323, 835};
    for (long n = 0; n < 10; ++n) {
        CHECK(catalan(n) == cat[n]);
        CHECK(motzkin(n) == mot[n]);
    }
    CHECK(catalan(-1) == 0);
}

TEST_CASE("qpolynomial arithmetic and normalization") {
    QPolynomial zero;
    CHECK(zero.is_zero());
    CHECK(zero.coefficients().empty());
    CHECK(zero.degree() == -1);
    QPolynomial a{1, 2, 0, 0};
    CHECK(a.degree() == 1);
    CHECK(a - a == zero);
    CHECK((QPolynomial{1, 1} * QPolynomial{1, -1}) == QPolynomial{1, 0, -1});
    CHECK(QPolynomial({1, 1, 2, 1, 1}).to_string() == "1 + q + 2q^2 + q^3 + q^4");
    CHECK(QPolynomial({0, -1, 3}).to_string() == "-q + 3q^2");
    CHECK(QPolynomial({3, 2, 1}).at_one() == 6);
    CHECK(QPolynomial({3, 2, 1}).evaluate(2) == 11);
}

TEST_CASE("exact polynomial division") {
    const QPolynomial f = QPolynomial{1, 1} * QPolynomial{2, 0, 3};
    CHECK(divide_exact(f, QPolynomial{1, 1}) == QPolynomial{2, 0, 3});
    CHECK_THROWS_AS(divide_exact(QPolynomial{1, 0, 1}, QPolynomial{1, 1}), FormulaViolation);
    CHECK_THROWS_AS(divmod(QPolynomial{1}, QPolynomial{}), DomainError);
    // non-monic divisor with a non-integral quotient
    CHECK_THROWS_AS(divmod(QPolynomial{0, 1}, QPolynomial{0, 2}), FormulaViolation);
}

TEST_CASE("q_binomial examples") {
    CHECK(q_binomial(2, 1) == QPolynomial{1, 1});
    CHECK(q_binomial(4, 2) == QPolynomial{1, 1, 2, 1, 1});
    CHECK(q_binomial(4, 2) == oracle::subset_q_binomial(4, 2));
    for (long n = 0; n <= 8; ++n) {
        CHECK(q_binomial(n, n) == QPolynomial{1});
        CHECK(q_binomial(n, 0) == QPolynomial{1});
    }
    CHECK(q_binomial(3, 4).is_zero());
    CHECK(q_binomial(3, -1).is_zero());
}

TEST_CASE("q_binomial properties for n <= 30") {
    for (long n = 0; n <= 30; ++n) {
        for (long k = 0; k <= n; ++k) {
            const QPolynomial g = q_binomial(n, k);
            REQUIRE(g.at_one() == binomial(n, k));
            REQUIRE(g.is_palindromic());
            REQUIRE(g == q_binomial_pascal(n, k));
        }
    }
    for (long n = 0; n <= 12; ++n) {
        for (long k = 0; k <= n; ++k) {
            REQUIRE(q_binomial(n, k) == oracle::subset_q_binomial(n, k));
        }
    }
}

TEST_CASE("det_exact examples") {
    CHECK(det_exact(IntMatrix{{3, 1}, {1, 2}}) == 5);
    CHECK(det_exact(IntMatrix{{2, 1}, {1, 3}}) == 5);
    CHECK(det_exact(IntMatrix(0)) == 1);
    for (std::size_t n = 0; n <= 12; ++n) {
        CHECK(det_exact(IntMatrix::identity(n)) == 1);
    }
    CHECK_THROWS_AS((IntMatrix{{1, 2}, {3}}), DomainError);
    CHECK_THROWS_AS(IntMatrix::from_rows({{1, 2, 3}, {4, 5, 6}}), DomainError);
}

TEST_CASE("det_exact agrees with permutation expansion") {
    std::mt19937 rng(20240611);
    std::uniform_int_distribution<long> entry(-9, 9);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = static_cast<std::size_t>(trial % 6);
        std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n));
        for (auto& r : rows) {
            for (auto& v : r) {
                v = entry(rng);
            }
        }
        REQUIRE(det_exact(IntMatrix::from_rows(rows)) == oracle::permutation_det(rows));
    }
}

TEST_CASE("bareiss path agrees with permutation expansion above the cofactor limit") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> entry(-5, 5);
    for (int trial = 0; trial < 8; ++trial) {
        const std::size_t n = 7 + static_cast<std::size_t>(trial % 2);
        std::vector<std::vector<Integer>> rows(n, std::vector<Integer>(n));
        for (auto& r : rows) {
            for (auto& v : r) {
                v = entry(rng);
            }
        }
        if (trial == 0) {
            rows[0][0] = 0;  // forces a pivot swap
            rows[1][0] = 0;
        }
        REQUIRE(det_exact(IntMatrix::from_rows(rows)) == oracle::permutation_det(rows));
    }
    // singular matrix
    std::vector<std::vector<Integer>> sing(8, std::vector<Integer>(8, 1));
    CHECK(det_exact(IntMatrix::from_rows(sing)) == 0);
}

TEST_CASE("det_qpoly") {
    CHECK(det_qpoly(QPolyMatrix{{q_binomial(2, 1)}}) == QPolynomial{1, 1});
    CHECK(det_qpoly(QPolyMatrix::identity(4)) == QPolynomial{1});
    // lambda = (2,1): entries q^C(j-i+1,2) [lambda_j+1, j-i+1]
    const QPolyMatrix m{{q_binomial(3, 1), QPolynomial::monomial(1) * q_binomial(2, 2)},
                        {QPolynomial{1}, q_binomial(2, 1)}};
    CHECK(det_qpoly(m) == QPolynomial{1, 1, 2, 1});

    std::mt19937 rng(99);
    std::uniform_int_distribution<long> c(-3, 3);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = trial < 5 ? 4 : 7;  // cofactor and fraction-free paths
        std::vector<std::vector<QPolynomial>> rows(n, std::vector<QPolynomial>(n));
        for (auto& r : rows) {
            for (auto& v : r) {
                v = QPolynomial{c(rng), c(rng), c(rng)};
            }
        }
        REQUIRE(det_qpoly(QPolyMatrix::from_rows(rows)) == oracle::permutation_det(rows));
    }
}

TEST_CASE("hessenberg catalan determinant") {
    CHECK(hessenberg_catalan_det(1) == 1);
    CHECK(hessenberg_catalan_det(3) == 5);
    CHECK(hessenberg_catalan_det(4) == 14);
    for (long n = 1; n <= 12; ++n) {
        Integer c = binomial(2 * n, n) / (n + 1);
        REQUIRE(hessenberg_catalan_det(n) == c);
    }
    CHECK_THROWS_AS(hessenberg_catalan_det(0), DomainError);
}

TEST_CASE("power series arithmetic") {
    const std::size_t N = 8;
    const std::vector<long> fc{1, 3, -2, 5};
    const PowerSeries f = PowerSeries::from_integers(fc, N);
    CHECK((f - f) == PowerSeries(N));

    std::vector<long> ones(N, 1);
    const PowerSeries geometric = PowerSeries::from_integers(ones, N);
    const std::vector<long> one_minus_x{1, -1};
    CHECK((PowerSeries::from_integers(one_minus_x, N) * geometric) == PowerSeries::constant(1, N));
    CHECK(divide(PowerSeries::constant(1, N), PowerSeries::from_integers(one_minus_x, N)) == geometric);

    const std::vector<long> num{0, 0, 0, 2, 2};
    const PowerSeries q = divide_by_monomial(PowerSeries::from_integers(num, N), 3) * Rational(1, 2);
    CHECK(q.order() == N - 3);
    CHECK(q == PowerSeries::from_integers(std::vector<long>{1, 1}, N - 3));

    CHECK_THROWS_AS(divide_by_monomial(PowerSeries::from_integers(std::vector<long>{0, 1}, N), 2), FormulaViolation);
    CHECK_THROWS_AS(divide(f, PowerSeries::monomial(1, 1, N)), DomainError);
}

TEST_CASE("truncation order is respected") {
    const PowerSeries a = PowerSeries::constant(1, 10);
    const PowerSeries b = PowerSeries::constant(1, 4);
    CHECK((a + b).order() == 4);
    CHECK((a * b).order() == 4);
    CHECK_THROWS_AS(b[4], DomainError);
    CHECK_THROWS_AS(b.truncated(5), DomainError);
}

TEST_CASE("series sqrt examples") {
    CHECK(sqrt(PowerSeries::constant(1, 6)) == PowerSeries::constant(1, 6));
    const std::vector<long> f{1, -4};
    const std::vector<long> expect{1, -2, -2, -4, -10, -28};
    CHECK(sqrt(PowerSeries::from_integers(f, 6)) == PowerSeries::from_integers(expect, 6));
    CHECK_THROWS_AS(sqrt(PowerSeries::constant(4, 3)), DomainError);
    CHECK(sqrt(PowerSeries(0)).order() == 0);
}

TEST_CASE("series sqrt squares back for random inputs") {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<long> c(-6, 6);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t order = 12;
        std::vector<Rational> coeffs(order);
        coeffs[0] = 1;
        for (std::size_t i = 1; i < order; ++i) {
            coeffs[i] = c(rng);
        }
        const PowerSeries f(coeffs, order);
        const PowerSeries g = sqrt(f);
        REQUIRE(g.coefficients()[0] == 1);
        REQUIRE((g * g) == f);
        const auto rec = oracle::recurrence_sqrt(coeffs);
        REQUIRE(std::equal(rec.begin(), rec.end(), g.coefficients().begin()));
    }
}

TEST_CASE("integrality check") {
    const PowerSeries half(std::vector<Rational>{Rational(1), Rational(1, 2)}, 2);
    CHECK_FALSE(half.is_integral());
    CHECK_THROWS_AS(half.integer_coefficients(), FormulaViolation);
}
