#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "simcore/gap_poset.hpp"
#include "simcore/integer.hpp"
#include "simcore/matrix.hpp"
#include "simcore/partition.hpp"
#include "simcore/qpoly.hpp"
#include "simcore/report.hpp"

namespace simcore {

// ---- determinant formulas ------------------------------------------------

/// k x k matrix with 1-based entry C(lambda_j + 1, j - i + 1).
IntMatrix kreweras_matrix(const Partition& lambda);
/// Number of partitions contained in lambda, as det(kreweras_matrix(lambda)).
Integer kreweras_count(const Partition& lambda);

/// k x k matrix with entry q^C(j-i+1, 2) [lambda_j + 1 over j - i + 1]_q.
QPolyMatrix qdet_matrix(const Partition& lambda);
/// Sum over mu <= lambda of q^|mu|, as det(qdet_matrix(lambda)).
QPolynomial qdet_coarea(const Partition& lambda);

/// Sum over mu <= lambda of q^|mu| by enumerating the subpartitions.
QPolynomial subpartition_size_polynomial(const Partition& lambda);

/// sum_{k=1..n} (-1)^k C(k+1, n-k) C_k. Vanishes for n >= 2.
Integer catalan_identity(long n);

// ---- two-generator semigroups ---------------------------------------------

/// Representations of m as s*k + t*l with k, l >= 0, from the closed form
/// m/st - {t' m / s} - {s' m / t} + 1 with t' t = 1 (mod s), s' s = 1 (mod t).
/// Exact rational arithmetic; throws DomainError unless gcd(s,t) = 1.
Integer popoviciu(long s, long t, long m);

/// Same count by direct enumeration of k.
Integer representation_count(long s, long t, long m);

/// Inverse of a modulo m in [1, m-1] (0 when m == 1).
long mod_inverse(long a, long m);

struct FrobeniusCheck {
    Integer formula;      // st - s - t
    long largest_gap;     // from the gap sieve
    bool matches;
};
FrobeniusCheck frobenius_pair(long s, long t);

/// Exactly (s-1)(t-1)/2 of 1..(s-1)(t-1) are gaps of <s,t>.
bool sylvester_check(long s, long t);

/// Entry (i, j) of the (s+1) x (s-1) rectangle: (s+1)(j-1) + i.
long rectangle_entry(long s, long i, long j);
/// Column paired with j by the symmetry, s - j.
long symmetry_partner(long s, long j);

/// For odd s >= 3: (s+1)(j-1)+i is a gap of <s,s+2> iff (s+1)(s-1-j)+i is not,
/// for 1 <= i <= s+1, 1 <= j <= s-1. Throws DomainError for even s.
CheckReport symmetry_check(long s);

// ---- multi-Catalan ---------------------------------------------------------

struct MotzkinIdentity {
    Integer multi_catalan;  // C_s^(2)
    Integer binomial_sum;   // sum_k C(s, 2k) C_k
    bool holds;
};
MotzkinIdentity motzkin_identity_check(long s);

/// First n_terms coefficients of
/// (2 - 2x - A(x) - sqrt(A(x)^2 - 4x^2)) / (2 x^(r-1)),
/// A(x) = 1 - x + (x^2 - x^(r-1)) / (1 - x), with r = p + 1.
/// The closed form with parameter r reproduces C_s^(r-1); callers pass the
/// poset parameter p. Throws FormulaViolation if the division by 2x^(r-1) is
/// inexact or a coefficient is fractional.
std::vector<Integer> gf_coefficients(long p, std::size_t n_terms);

// ---- simultaneous cores ----------------------------------------------------

/// Every S-core, found by a depth-first search over first-column hook sets
/// closed under h -> h - s, each confirmed by a full hook scan. Uses neither
/// the gap sieve nor the poset. Throws DomainError when gcd(S) > 1.
std::vector<Partition> enumerate_cores_by_hooksets(const GeneratorSet& gens,
                                                   unsigned long long cap = kDefaultIdealCap);

/// Every S-core, as ideal_to_core over the lower ideals of P_S.
std::vector<Partition> enumerate_cores_by_ideals(const GeneratorSet& gens,
                                                 unsigned long long cap = kDefaultIdealCap);

struct ConjectureResult {
    long s;
    Integer lhs;              // total size of (s,s+1,s+2)-cores via ideals of T_{s,2}
    Integer lhs_by_hooksets;  // same total via the hook-set search
    Integer rhs;              // sum_{j=0}^{s-2} C(j+3,3) C_j^(2)
    std::size_t core_count;
    bool lhs_confirmed() const { return lhs == lhs_by_hooksets; }
    bool holds() const { return lhs_confirmed() && lhs == rhs; }
};
ConjectureResult conjecture_total_size(long s, unsigned long long cap = kDefaultIdealCap);

// ---- suites ----------------------------------------------------------------

struct SuiteOptions {
    unsigned jobs = 1;
    long kreweras_box = 5;        // shapes inside box x box
    long qdet_box = 4;
    long pair_max_sum = 16;       // coprime (s,t) with s + t <= this
    long coarea_max_sum = 14;
    long identity_max_n = 30;
    long hessenberg_max_n = 12;
    long popoviciu_max_t = 12;
    long symmetry_max_s = 25;
    long multi_catalan_max_s = 12;
    long multi_catalan_max_p = 4;
    long motzkin_max_s = 20;
    std::size_t gf_terms = 20;
    long gf_max_p = 3;
    long gd_max_n = 10;
    long gd_max_k = 4;
    long gd_power_max = 6;
    long gd_bijection_max_n = 8;
    long gd_bijection_max_k = 3;
    long conjecture_min_s = 3;
    long conjecture_max_s = 10;
    unsigned long long cap = kDefaultIdealCap;
};

CheckReport check_kreweras(const SuiteOptions& opt = {});
CheckReport check_qdet(const SuiteOptions& opt = {});
CheckReport check_coarea(const SuiteOptions& opt = {});
CheckReport check_catalan_identity(const SuiteOptions& opt = {});
CheckReport check_hessenberg(const SuiteOptions& opt = {});
CheckReport check_popoviciu(const SuiteOptions& opt = {});
CheckReport check_frobenius_sylvester(const SuiteOptions& opt = {});
CheckReport check_symmetry(const SuiteOptions& opt = {});
CheckReport check_multi_catalan(const SuiteOptions& opt = {});
CheckReport check_motzkin(const SuiteOptions& opt = {});
CheckReport check_gf(const SuiteOptions& opt = {});
CheckReport check_gd_counts(const SuiteOptions& opt = {});
CheckReport check_gd_small(const SuiteOptions& opt = {});
CheckReport check_gd_bijection(const SuiteOptions& opt = {});
CheckReport check_conjecture(const SuiteOptions& opt = {});
CheckReport check_equinumerous_pairs(const SuiteOptions& opt = {});
CheckReport check_equinumerous_consecutive(const SuiteOptions& opt = {});
CheckReport check_anchor_values(const SuiteOptions& opt = {});

/// Kreweras determinant of the diagonal partition against C(s+t,s)/(s+t).
CheckReport check_diagonal_kreweras(const SuiteOptions& opt = {});

/// Every suite above, in a fixed order.
std::vector<CheckReport> run_all(const SuiteOptions& opt = {});

}  // namespace simcore
