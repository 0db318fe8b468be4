#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "simcore/integer.hpp"

namespace simcore {

/// Integer partition with weakly decreasing positive parts.
///
/// Rows and columns are 1-based and counted from the longest row, which is
/// drawn at the bottom in french orientation and at the top in english.
class Partition {
public:
    Partition() = default;
    /// Throws DomainError unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<long> parts);
    Partition(std::initializer_list<long> parts);

    /// Drops trailing zero parts, then validates.
    static Partition from_weak(std::vector<long> parts);

    std::span<const long> parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    bool empty() const noexcept { return parts_.empty(); }
    long size() const noexcept;
    /// lambda_i for 1 <= i <= length(); zero beyond.
    long part(std::size_t i) const noexcept;

    Partition conjugate() const;
    bool has_cell(long row, long col) const noexcept;

    /// Componentwise containment: every part of this is at most the matching part of other.
    bool contained_in(const Partition& other) const noexcept;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

    /// "(6,3,1,1)"; the empty partition prints as "()".
    std::string to_string() const;

private:
    std::vector<long> parts_;
};

/// Finite set of distinct positive integers, kept sorted increasingly.
class HookSet {
public:
    HookSet() = default;
    /// Throws DomainError on duplicates or non-positive entries.
    explicit HookSet(std::vector<long> elements);
    HookSet(std::initializer_list<long> elements);

    std::span<const long> elements() const noexcept { return elems_; }
    std::size_t size() const noexcept { return elems_.size(); }
    bool empty() const noexcept { return elems_.empty(); }
    bool contains(long v) const noexcept;

    friend bool operator==(const HookSet&, const HookSet&) = default;
    friend auto operator<=>(const HookSet&, const HookSet&) = default;

    std::string to_string() const;

private:
    std::vector<long> elems_;
};

/// arm + leg + 1 for the cell in row `row`, column `col`.
/// Throws DomainError when the cell is not in the diagram.
long hook_length(const Partition& p, long row, long col);

/// Hook lengths of every cell, row by row.
std::vector<std::vector<long>> hook_table(const Partition& p);

/// No hook length is divisible by s (full scan of every cell).
bool is_core(const Partition& p, long s);

/// Simultaneous core for every generator; `gens` must be non-empty.
bool is_multicore(const Partition& p, std::span<const long> gens);

/// Core test on the first-column hook set: h in H with h >= s forces h - s in H.
bool is_core_by_hooks(const HookSet& h, long s);

/// A cell whose hook length is divisible by s, if any.
struct HookWitness {
    long row;
    long col;
    long hook;
    long divisor;
};
std::vector<HookWitness> divisible_hooks(const Partition& p, std::span<const long> gens);

/// { lambda_i + k - i : 1 <= i <= k }.
HookSet first_column_hooks(const Partition& p);

/// Inverse of first_column_hooks.
Partition partition_from_hooks(const HookSet& h);

/// Number of partitions contained in p, by dynamic programming over parts.
Integer count_subpartitions(const Partition& p);

/// Calls `visit` once per partition contained in p (including empty and p).
/// Enumeration order: lexicographic on the padded part vector.
void for_each_subpartition(const Partition& p, const std::function<void(const Partition&)>& visit);

inline constexpr unsigned long long kDefaultSubpartitionCap = 1'000'000;

/// Materialized subpartitions; throws CapExceeded when the count exceeds cap.
std::vector<Partition> subpartitions(const Partition& p, unsigned long long cap = kDefaultSubpartitionCap);

/// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(long n);

enum class Orientation { French, English };

/// Ferrers diagram as text. With hooks each cell prints its hook length,
/// otherwise a '#'.
std::string render_diagram(const Partition& p, Orientation orientation, bool with_hooks);

}  // namespace simcore
