#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "simcore/integer.hpp"
#include "simcore/partition.hpp"
#include "simcore/qpoly.hpp"

namespace simcore {

/// Unit lattice step: N = (0,1), E = (1,0).
enum class Step : char { N = 'N', E = 'E' };

/// Lattice path from (0,0) to (s,t) in the rectangle of width s and height t,
/// staying weakly above the line y = (t/s) x.
///
/// The cells left of the path form an english Ferrers diagram read from the
/// top row down; that partition is contained in diagonal_partition(s, t).
class RectPath {
public:
    /// Throws DomainError for a wrong step count or a step below the line.
    RectPath(long s, long t, std::vector<Step> steps);

    long s() const noexcept { return s_; }
    long t() const noexcept { return t_; }
    std::span<const Step> steps() const noexcept { return steps_; }

    /// mu_j = number of cells left of the path in row j counted from the top.
    Partition partition_above() const;

    friend bool operator==(const RectPath&, const RectPath&) = default;
    friend auto operator<=>(const RectPath&, const RectPath&) = default;

    /// "NNENE..."
    std::string to_string() const;

private:
    long s_;
    long t_;
    std::vector<Step> steps_;
};

/// Number of (s,t)-Dyck paths, C(s+t, s) / (s+t). Needs gcd(s,t) = 1.
Integer count_rect_paths(long s, long t);

/// Partition of the cells above the path hugging the diagonal: parts
/// floor(s(t-j)/t) for j = 1..t-1, zero parts dropped.
Partition diagonal_partition(long s, long t);

inline constexpr unsigned long long kDefaultPathCap = 10'000'000;

/// Depth-first in N-before-E order. Throws CapExceeded before item cap + 1.
void for_each_rect_path(long s, long t, const std::function<void(const RectPath&)>& visit,
                        unsigned long long cap = kDefaultPathCap);

std::vector<RectPath> enumerate_rect_paths(long s, long t, unsigned long long cap = kDefaultPathCap);

/// Cells between the path and the top-left corner; |partition_above()|.
long coarea(const RectPath& path);

/// Sum of q^coarea over every (s,t)-Dyck path, by enumeration.
QPolynomial coarea_polynomial(long s, long t, unsigned long long cap = kDefaultPathCap);

std::string step_name(Step s);
Step parse_step(const std::string& name);

}  // namespace simcore
