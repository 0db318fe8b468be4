#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "simcore/integer.hpp"
#include "simcore/partition.hpp"

namespace simcore {

/// Non-empty set of positive integers generating a numerical semigroup.
class GeneratorSet {
public:
    /// Sorts and deduplicates; throws DomainError on an empty set or a
    /// non-positive element.
    explicit GeneratorSet(std::vector<long> gens);
    GeneratorSet(std::initializer_list<long> gens);

    std::span<const long> values() const noexcept { return gens_; }
    long min() const noexcept { return gens_.front(); }
    long max() const noexcept { return gens_.back(); }
    long gcd() const noexcept { return gcd_; }
    /// The gap set is finite exactly when the generators are coprime.
    bool finite() const noexcept { return gcd_ == 1; }
    bool contains(long v) const noexcept;

    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

    /// "{5,7,13}"
    std::string to_string() const;

private:
    std::vector<long> gens_;
    long gcd_ = 0;
};

/// Downward-closed subset of a gap poset, elements sorted increasingly.
class LowerIdeal {
public:
    LowerIdeal() = default;
    explicit LowerIdeal(std::vector<long> elements);

    std::span<const long> elements() const noexcept { return elems_; }
    std::size_t size() const noexcept { return elems_.size(); }
    bool contains(long v) const noexcept;

    friend bool operator==(const LowerIdeal&, const LowerIdeal&) = default;
    friend auto operator<=>(const LowerIdeal&, const LowerIdeal&) = default;

    std::string to_string() const;

private:
    std::vector<long> elems_;
};

/// The gaps of the semigroup generated by S, ordered by the relation
/// a covers b iff a - b is a generator. The partial order is the
/// reflexive-transitive closure of that relation.
class GapPoset {
public:
    using Cover = std::pair<long, long>;  // (upper, lower)

    const GeneratorSet& generators() const noexcept { return gens_; }
    std::span<const long> gaps() const noexcept { return gaps_; }
    /// Pairs (a, b) with a - b in S, sorted by (a, b).
    std::span<const Cover> covers() const noexcept { return covers_; }
    std::size_t size() const noexcept { return gaps_.size(); }
    bool empty() const noexcept { return gaps_.empty(); }

    bool is_gap(long m) const noexcept;
    /// Largest gap, or -1 for an empty poset.
    long frobenius() const noexcept;

    /// Gaps directly below a (a - s for each generator s, when a gap).
    std::vector<long> lower_covers(long a) const;

    /// b <= a in the partial order. Both must be gaps.
    bool leq(long b, long a) const;

    /// Subset of gaps, closed under going down a cover.
    bool is_lower_ideal(std::span<const long> elements) const;

    /// Covers that are not implied by a longer chain.
    std::vector<Cover> hasse_edges() const;

    friend GapPoset build_gap_poset(const GeneratorSet& gens);

private:
    GapPoset(GeneratorSet gens, std::vector<long> gaps);

    GeneratorSet gens_;
    std::vector<long> gaps_;
    std::vector<Cover> covers_;
};

/// Gap set by a representability sieve, stopped once min(S) consecutive
/// representable integers have been seen. Throws InfinitePosetError when
/// gcd(S) > 1.
GapPoset build_gap_poset(const GeneratorSet& gens);

/// T_{s,p}: the gap poset of {s, s+1, ..., s+p}.
GapPoset consecutive_poset(long s, long p);

inline constexpr unsigned long long kDefaultIdealCap = 10'000'000;

/// Number of lower ideals, without materializing them.
Integer count_lower_ideals(const GapPoset& poset);

/// Calls visit once per lower ideal. Gaps are decided in increasing order,
/// inclusion branch first, so the order is deterministic. Throws CapExceeded
/// before visiting item cap + 1.
void for_each_lower_ideal(const GapPoset& poset, const std::function<void(const LowerIdeal&)>& visit,
                          unsigned long long cap = kDefaultIdealCap);

/// Every lower ideal in lexicographic order; throws CapExceeded when the
/// total exceeds cap.
std::vector<LowerIdeal> enumerate_lower_ideals(const GapPoset& poset, unsigned long long cap = kDefaultIdealCap);

/// The S-core whose first-column hook set is the ideal. Throws DomainError
/// if the set is not a lower ideal of the poset.
Partition ideal_to_core(const GapPoset& poset, const LowerIdeal& ideal);

/// First-column hooks of an S-core as a lower ideal. Throws DomainError
/// naming an offending hook and divisor when p is not an S-core.
LowerIdeal core_to_ideal(const Partition& p, const GapPoset& poset);

/// C_s^(p) = |J(T_{s,p})| by the first-gap recursion
/// C_s = sum_{i=1..s} C_{i-p} C_{s-i}, with C_s = 1 for s <= 0.
Integer multi_catalan(long s, long p);

/// multi_catalan(0..n-1, p) in one pass.
std::vector<Integer> multi_catalan_sequence(long n, long p);

/// Hasse diagram in graphviz DOT. With `reduce`, covers implied by longer
/// chains are dropped.
std::string to_dot(const GapPoset& poset, bool reduce = false);

/// {"generators": [...], "gaps": [...], "covers": [[a, b], ...]}
std::string to_json(const GapPoset& poset);

}  // namespace simcore
