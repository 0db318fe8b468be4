#include "simcore/gap_poset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string_view>
#include <unordered_map>

#include <json.hpp>

#include "simcore/errors.hpp"

namespace simcore {

GeneratorSet::GeneratorSet(std::vector<long> gens) : gens_(std::move(gens)) {
    if (gens_.empty()) {
        throw DomainError("generator set must be non-empty");
    }
    std::sort(gens_.begin(), gens_.end());
    gens_.erase(std::unique(gens_.begin(), gens_.end()), gens_.end());
    if (gens_.front() < 1) {
        throw DomainError("generators must be positive integers");
    }
    gcd_ = 0;
    for (long g : gens_) {
        gcd_ = std::gcd(gcd_, g);
    }
}

GeneratorSet::GeneratorSet(std::initializer_list<long> gens) : GeneratorSet(std::vector<long>(gens)) {}

bool GeneratorSet::contains(long v) const noexcept { return std::binary_search(gens_.begin(), gens_.end(), v); }

std::string GeneratorSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(gens_[i]);
    }
    return out + "}";
}

LowerIdeal::LowerIdeal(std::vector<long> elements) : elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
}

bool LowerIdeal::contains(long v) const noexcept { return std::binary_search(elems_.begin(), elems_.end(), v); }

std::string LowerIdeal::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(elems_[i]);
    }
    return out + "}";
}

GapPoset::GapPoset(GeneratorSet gens, std::vector<long> gaps) : gens_(std::move(gens)), gaps_(std::move(gaps)) {
    for (long a : gaps_) {
        for (long s : gens_.values()) {
            if (a - s >= 1 && is_gap(a - s)) {
                covers_.emplace_back(a, a - s);
            }
        }
    }
    std::sort(covers_.begin(), covers_.end());
}

bool GapPoset::is_gap(long m) const noexcept { return std::binary_search(gaps_.begin(), gaps_.end(), m); }

long GapPoset::frobenius() const noexcept { return gaps_.empty() ? -1 : gaps_.back(); }

std::vector<long> GapPoset::lower_covers(long a) const {
    std::vector<long> out;
    for (long s : gens_.values()) {
        if (a - s >= 1 && is_gap(a - s)) {
            out.push_back(a - s);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool GapPoset::leq(long b, long a) const {
    if (!is_gap(a) || !is_gap(b)) {
        throw DomainError("order comparison between non-gaps " + std::to_string(b) + " and " + std::to_string(a));
    }
    if (b > a) {
        return false;
    }
    // b <= a iff a - b is a non-negative combination whose partial sums,
    // subtracted from a, stay inside the gap set.
    std::vector<char> reach(static_cast<std::size_t>(a - b) + 1, 0);
    reach[0] = 1;  // offset 0 is a itself
    for (long d = 1; d <= a - b; ++d) {
        if (!is_gap(a - d)) {
            continue;
        }
        for (long s : gens_.values()) {
            if (s <= d && reach[static_cast<std::size_t>(d - s)]) {
                reach[static_cast<std::size_t>(d)] = 1;
                break;
            }
        }
    }
    return reach[static_cast<std::size_t>(a - b)] != 0;
}

bool GapPoset::is_lower_ideal(std::span<const long> elements) const {
    std::vector<long> sorted(elements.begin(), elements.end());
    std::sort(sorted.begin(), sorted.end());
    for (long a : sorted) {
        if (!is_gap(a)) {
            return false;
        }
        for (long b : lower_covers(a)) {
            if (!std::binary_search(sorted.begin(), sorted.end(), b)) {
                return false;
            }
        }
    }
    return true;
}

std::vector<GapPoset::Cover> GapPoset::hasse_edges() const {
    std::vector<Cover> out;
    for (const auto& [a, b] : covers_) {
        bool implied = false;
        for (long mid : lower_covers(a)) {
            if (mid != b && mid > b && leq(b, mid)) {
                implied = true;
                break;
            }
        }
        if (!implied) {
            out.emplace_back(a, b);
        }
    }
    return out;
}

GapPoset build_gap_poset(const GeneratorSet& gens) {
    if (!gens.finite()) {
        throw InfinitePosetError(gens.gcd(), "generators " + gens.to_string() + " share the common divisor " +
                                                 std::to_string(gens.gcd()) +
                                                 "; the gap set is finite only for relatively prime generators");
    }
    std::vector<char> representable{1};
    std::vector<long> gaps;
    long run = 0;
    for (long m = 1; run < gens.min(); ++m) {
        bool rep = false;
        for (long s : gens.values()) {
            if (s > m) {
                break;
            }
            if (representable[static_cast<std::size_t>(m - s)]) {
                rep = true;
                break;
            }
        }
        representable.push_back(rep ? 1 : 0);
        if (rep) {
            ++run;
        } else {
            run = 0;
            gaps.push_back(m);
        }
    }
    return GapPoset(gens, std::move(gaps));
}

GapPoset consecutive_poset(long s, long p) {
    if (s < 1 || p < 1) {
        throw DomainError("consecutive poset needs s >= 1 and p >= 1");
    }
    std::vector<long> gens;
    for (long g = s; g <= s + p; ++g) {
        gens.push_back(g);
    }
    return build_gap_poset(GeneratorSet(std::move(gens)));
}

namespace {

// Decides gaps in increasing order. A gap may join the ideal only when each of
// its lower covers already has, and every lower cover lies within the last
// max(S) integers, so that window is the whole frontier state.
class IdealWalker {
public:
    explicit IdealWalker(const GapPoset& poset)
        : poset_(poset), gaps_(poset.gaps()), width_(static_cast<std::size_t>(poset.generators().max())) {}

    bool can_include(std::size_t i, const std::string& window) const {
        const long a = gaps_[i];
        for (long s : poset_.generators().values()) {
            const long b = a - s;
            if (b >= 1 && poset_.is_gap(b) && window[width_ - static_cast<std::size_t>(s)] != '1') {
                return false;
            }
        }
        return true;
    }

    // Window for gap i+1 given the window for gap i and the decision at gap i.
    std::string advance(std::size_t i, const std::string& window, bool included) const {
        std::string next = window;
        next.push_back(included ? '1' : '0');
        const long upto = i + 1 < gaps_.size() ? gaps_[i + 1] : gaps_[i] + 1;
        for (long m = gaps_[i] + 1; m < upto; ++m) {
            next.push_back('0');
        }
        return next.substr(next.size() - width_);
    }

    std::string initial_window() const {
        // The window ends just below the first gap, which is always 1.
        return std::string(width_, '0');
    }

    std::size_t gap_count() const noexcept { return gaps_.size(); }
    long gap(std::size_t i) const noexcept { return gaps_[i]; }

private:
    const GapPoset& poset_;
    std::span<const long> gaps_;
    std::size_t width_;
};

Integer count_from(const IdealWalker& walker, std::size_t i, const std::string& window,
                   std::vector<std::unordered_map<std::string, Integer>>& memo) {
    if (i == walker.gap_count()) {
        return 1;
    }
    auto& cache = memo[i];
    if (auto it = cache.find(window); it != cache.end()) {
        return it->second;
    }
    Integer total = count_from(walker, i + 1, walker.advance(i, window, false), memo);
    if (walker.can_include(i, window)) {
        total += count_from(walker, i + 1, walker.advance(i, window, true), memo);
    }
    cache.emplace(window, total);
    return total;
}

struct ListState {
    const IdealWalker& walker;
    const std::function<void(const LowerIdeal&)>& visit;
    unsigned long long cap;
    unsigned long long emitted = 0;
    std::vector<long> current;
};

// Include-before-exclude depth-first order.
void list_from(ListState& st, std::size_t i, const std::string& window) {
    if (i == st.walker.gap_count()) {
        if (st.emitted == st.cap) {
            throw CapExceeded(st.cap, "lower ideal enumeration exceeded the cap of " + std::to_string(st.cap));
        }
        ++st.emitted;
        st.visit(LowerIdeal(st.current));
        return;
    }
    if (st.walker.can_include(i, window)) {
        st.current.push_back(st.walker.gap(i));
        list_from(st, i + 1, st.walker.advance(i, window, true));
        st.current.pop_back();
    }
    list_from(st, i + 1, st.walker.advance(i, window, false));
}

}  // namespace

Integer count_lower_ideals(const GapPoset& poset) {
    if (poset.empty()) {
        return 1;
    }
    IdealWalker walker(poset);
    std::vector<std::unordered_map<std::string, Integer>> memo(walker.gap_count());
    return count_from(walker, 0, walker.initial_window(), memo);
}

void for_each_lower_ideal(const GapPoset& poset, const std::function<void(const LowerIdeal&)>& visit,
                          unsigned long long cap) {
    if (poset.empty()) {
        if (cap == 0) {
            throw CapExceeded(cap, "lower ideal enumeration exceeded the cap of 0");
        }
        visit(LowerIdeal{});
        return;
    }
    IdealWalker walker(poset);
    ListState st{walker, visit, cap, 0, {}};
    list_from(st, 0, walker.initial_window());
}

std::vector<LowerIdeal> enumerate_lower_ideals(const GapPoset& poset, unsigned long long cap) {
    std::vector<LowerIdeal> out;
    for_each_lower_ideal(poset, [&](const LowerIdeal& ideal) { out.push_back(ideal); }, cap);
    std::sort(out.begin(), out.end());
    return out;
}

Partition ideal_to_core(const GapPoset& poset, const LowerIdeal& ideal) {
    if (!poset.is_lower_ideal(ideal.elements())) {
        throw DomainError(ideal.to_string() + " is not a lower ideal of the gap poset of " +
                          poset.generators().to_string());
    }
    std::vector<long> elems(ideal.elements().begin(), ideal.elements().end());
    return partition_from_hooks(HookSet(std::move(elems)));
}

LowerIdeal core_to_ideal(const Partition& p, const GapPoset& poset) {
    const auto bad = divisible_hooks(p, poset.generators().values());
    if (!bad.empty()) {
        const auto& w = bad.front();
        throw DomainError(p.to_string() + " is not a " + poset.generators().to_string() + "-core: cell (" +
                          std::to_string(w.row) + "," + std::to_string(w.col) + ") has hook " +
                          std::to_string(w.hook) + ", divisible by " + std::to_string(w.divisor));
    }
    const HookSet hooks = first_column_hooks(p);
    std::vector<long> elems(hooks.elements().begin(), hooks.elements().end());
    if (!poset.is_lower_ideal(elems)) {
        throw FormulaViolation("first-column hooks " + hooks.to_string() + " of the core " + p.to_string() +
                               " are not a lower ideal");
    }
    return LowerIdeal(std::move(elems));
}

std::vector<Integer> multi_catalan_sequence(long n, long p) {
    if (p < 1) {
        throw DomainError("multi-Catalan numbers need p >= 1");
    }
    std::vector<Integer> c;
    c.reserve(static_cast<std::size_t>(std::max(n, 0L)));
    auto at = [&](long s) -> const Integer& {
        static const Integer one = 1;
        return s <= 0 ? one : c[static_cast<std::size_t>(s)];
    };
    for (long s = 0; s < n; ++s) {
        if (s == 0) {
            c.emplace_back(1);
            continue;
        }
        Integer total = 0;
        for (long i = 1; i <= s; ++i) {
            total += at(i - p) * at(s - i);
        }
        c.push_back(std::move(total));
    }
    return c;
}

Integer multi_catalan(long s, long p) {
    if (p < 1) {
        throw DomainError("multi-Catalan numbers need p >= 1");
    }
    if (s <= 0) {
        return 1;
    }
    return multi_catalan_sequence(s + 1, p).back();
}

std::string to_dot(const GapPoset& poset, bool reduce) {
    std::ostringstream out;
    out << "digraph \"P_" << poset.generators().to_string() << "\" {\n";
    out << "  rankdir=BT;\n";
    out << "  node [shape=circle];\n";
    for (long g : poset.gaps()) {
        out << "  " << g << " [label=\"" << g << "\"];\n";
    }
    const auto edges = reduce ? poset.hasse_edges() : std::vector<GapPoset::Cover>(poset.covers().begin(),
                                                                                    poset.covers().end());
    for (const auto& [a, b] : edges) {
        out << "  " << a << " -> " << b << ";\n";
    }
    out << "}\n";
    return out.str();
}

std::string to_json(const GapPoset& poset) {
    nlohmann::json j;
    j["generators"] = std::vector<long>(poset.generators().values().begin(), poset.generators().values().end());
    j["gaps"] = std::vector<long>(poset.gaps().begin(), poset.gaps().end());
    auto covers = nlohmann::json::array();
    for (const auto& [a, b] : poset.covers()) {
        covers.push_back({a, b});
    }
    j["covers"] = std::move(covers);
    return j.dump();
}

}  // namespace simcore
