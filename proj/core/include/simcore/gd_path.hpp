#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "simcore/gap_poset.hpp"
#include "simcore/integer.hpp"
#include "simcore/rect_path.hpp"

namespace simcore {

/// One step of a generalized Dyck path: North = (0,k), East = (k,0), or
/// Diagonal = (i,i) with 1 <= i <= k-1.
struct GdStep {
    enum class Kind : char { North, East, Diagonal };
    Kind kind;
    long length;

    friend bool operator==(const GdStep&, const GdStep&) = default;
    friend auto operator<=>(const GdStep&, const GdStep&) = default;
};

/// Path from (0,0) to (n,n) over the steps N_k, E_k, D_1..D_(k-1) whose
/// every visited lattice point satisfies y >= x. k = 1 gives Dyck paths.
class GeneralizedDyckPath {
public:
    /// Throws DomainError for a foreign step, a point below y = x, or a wrong endpoint.
    GeneralizedDyckPath(long n, long k, std::vector<GdStep> steps);

    long n() const noexcept { return n_; }
    long k() const noexcept { return k_; }
    std::span<const GdStep> steps() const noexcept { return steps_; }

    friend bool operator==(const GeneralizedDyckPath&, const GeneralizedDyckPath&) = default;
    friend auto operator<=>(const GeneralizedDyckPath&, const GeneralizedDyckPath&) = default;

    /// Space-separated step names, e.g. "D2 N3 E3 D2".
    std::string to_string() const;

private:
    long n_;
    long k_;
    std::vector<GdStep> steps_;
};

/// GD_{n,k} by the first-return recursion
/// GD_n = sum_{s=1..n} GD_{s-k} GD_{n-s}, with GD_n = 1 for n <= 0.
Integer count_gd(long n, long k);

inline constexpr unsigned long long kDefaultGdCap = 10'000'000;

void for_each_gd(long n, long k, const std::function<void(const GeneralizedDyckPath&)>& visit,
                 unsigned long long cap = kDefaultGdCap);

std::vector<GeneralizedDyckPath> enumerate_gd(long n, long k, unsigned long long cap = kDefaultGdCap);

/// Replaces D_i by N^i E^i, N_k by N^k and E_k by E^k.
std::vector<Step> inflate(const GeneralizedDyckPath& path);

/// The lower ideal of T_{n,k} read off the inflated path.
///
/// Diagonal d = y - x of the n x n grid holds the cells (x, x + d),
/// x = 0..n-d-1. Only the diagonals d = ck + 1 carry labels; cell x on it gets
/// c(n+k) + x + 1, which runs through the c-th block of gaps of T_{n,k}. The
/// ideal is the set of labels on cells lying under the inflated path. The
/// path hugging y = x maps to the empty ideal and the highest path to the
/// full gap set.
LowerIdeal gd_to_ideal(const GeneralizedDyckPath& path);

/// Label of the cell in column x on diagonal d, or 0 when the cell is unlabeled.
long gd_cell_label(long n, long k, long x, long d);

/// "N<k>", "E<k>", "D<i>".
std::string step_name(const GdStep& step);
/// Accepts "N<k>"/"E<k>" as well as the literal "Nk"/"Ek".
GdStep parse_gd_step(const std::string& name, long k);

}  // namespace simcore
