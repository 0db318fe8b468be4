#include "simcore/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <utility>

#include "simcore/errors.hpp"

namespace simcore {

Partition::Partition(std::vector<long> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) {
            throw DomainError("partition parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw DomainError("partition parts must be weakly decreasing");
        }
    }
}

Partition::Partition(std::initializer_list<long> parts) : Partition(std::vector<long>(parts)) {}

Partition Partition::from_weak(std::vector<long> parts) {
    while (!parts.empty() && parts.back() == 0) {
        parts.pop_back();
    }
    return Partition(std::move(parts));
}

long Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0L); }

long Partition::part(std::size_t i) const noexcept {
    return i >= 1 && i <= parts_.size() ? parts_[i - 1] : 0;
}

Partition Partition::conjugate() const {
    std::vector<long> conj;
    if (!parts_.empty()) {
        conj.resize(static_cast<std::size_t>(parts_.front()), 0);
        for (long p : parts_) {
            for (long j = 0; j < p; ++j) {
                ++conj[static_cast<std::size_t>(j)];
            }
        }
    }
    return Partition(std::move(conj));
}

bool Partition::has_cell(long row, long col) const noexcept {
    return row >= 1 && col >= 1 && static_cast<std::size_t>(row) <= parts_.size() &&
           col <= parts_[static_cast<std::size_t>(row - 1)];
}

bool Partition::contained_in(const Partition& other) const noexcept {
    if (parts_.size() > other.parts_.size()) {
        return false;
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] > other.parts_[i]) {
            return false;
        }
    }
    return true;
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

HookSet::HookSet(std::vector<long> elements) : elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    if (!elems_.empty() && elems_.front() < 1) {
        throw DomainError("hook set elements must be positive");
    }
    if (std::adjacent_find(elems_.begin(), elems_.end()) != elems_.end()) {
        throw DomainError("hook set elements must be distinct");
    }
}

HookSet::HookSet(std::initializer_list<long> elements) : HookSet(std::vector<long>(elements)) {}

bool HookSet::contains(long v) const noexcept { return std::binary_search(elems_.begin(), elems_.end(), v); }

std::string HookSet::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < elems_.size(); ++i) {
        if (i > 0) {
            out += ",";
        }
        out += std::to_string(elems_[i]);
    }
    return out + "}";
}

long hook_length(const Partition& p, long row, long col) {
    if (!p.has_cell(row, col)) {
        throw DomainError("cell (" + std::to_string(row) + "," + std::to_string(col) + ") is not in " +
                          p.to_string());
    }
    const long arm = p.part(static_cast<std::size_t>(row)) - col;
    long leg = 0;
    for (auto r = static_cast<std::size_t>(row) + 1; r <= p.length() && p.part(r) >= col; ++r) {
        ++leg;
    }
    return arm + leg + 1;
}

std::vector<std::vector<long>> hook_table(const Partition& p) {
    const Partition conj = p.conjugate();
    std::vector<std::vector<long>> table(p.length());
    for (std::size_t i = 1; i <= p.length(); ++i) {
        const long len = p.part(i);
        auto& row = table[i - 1];
        row.reserve(static_cast<std::size_t>(len));
        for (long j = 1; j <= len; ++j) {
            row.push_back((len - j) + (conj.part(static_cast<std::size_t>(j)) - static_cast<long>(i)) + 1);
        }
    }
    return table;
}

bool is_core(const Partition& p, long s) {
    if (s < 1) {
        throw DomainError("core modulus must be at least 1");
    }
    for (const auto& row : hook_table(p)) {
        for (long h : row) {
            if (h % s == 0) {
                return false;
            }
        }
    }
    return true;
}

bool is_multicore(const Partition& p, std::span<const long> gens) {
    if (gens.empty()) {
        throw DomainError("simultaneous core test needs at least one generator");
    }
    return std::all_of(gens.begin(), gens.end(), [&](long s) { return is_core(p, s); });
}

bool is_core_by_hooks(const HookSet& h, long s) {
    if (s < 1) {
        throw DomainError("core modulus must be at least 1");
    }
    for (long x : h.elements()) {
        if (x >= s && !h.contains(x - s)) {
            return false;
        }
    }
    return true;
}

std::vector<HookWitness> divisible_hooks(const Partition& p, std::span<const long> gens) {
    std::vector<HookWitness> out;
    const auto table = hook_table(p);
    for (std::size_t i = 0; i < table.size(); ++i) {
        for (std::size_t j = 0; j < table[i].size(); ++j) {
            for (long s : gens) {
                if (table[i][j] % s == 0) {
                    out.push_back({static_cast<long>(i) + 1, static_cast<long>(j) + 1, table[i][j], s});
                }
            }
        }
    }
    return out;
}

HookSet first_column_hooks(const Partition& p) {
    const auto k = static_cast<long>(p.length());
    std::vector<long> h;
    h.reserve(p.length());
    for (long i = 1; i <= k; ++i) {
        h.push_back(p.part(static_cast<std::size_t>(i)) + k - i);
    }
    return HookSet(std::move(h));
}

Partition partition_from_hooks(const HookSet& h) {
    const auto elems = h.elements();
    const auto k = static_cast<long>(elems.size());
    std::vector<long> parts;
    parts.reserve(elems.size());
    // elems is increasing, so lambda_i takes the i-th largest hook.
    for (long i = 1; i <= k; ++i) {
        parts.push_back(elems[static_cast<std::size_t>(k - i)] - (k - i));
    }
    return Partition(std::move(parts));
}

Integer count_subpartitions(const Partition& p) {
    if (p.empty()) {
        return 1;
    }
    // ways[v] = number of valid prefixes whose latest part equals v.
    std::vector<Integer> ways(static_cast<std::size_t>(p.part(1)) + 1, 0);
    for (long v = 0; v <= p.part(1); ++v) {
        ways[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t i = 2; i <= p.length(); ++i) {
        std::vector<Integer> next(ways.size(), 0);
        Integer suffix = 0;
        // next[v] = sum of ways[u] for u >= v, restricted to v <= lambda_i
        for (long u = static_cast<long>(ways.size()) - 1; u >= 0; --u) {
            suffix += ways[static_cast<std::size_t>(u)];
            if (u <= p.part(i)) {
                next[static_cast<std::size_t>(u)] = suffix;
            }
        }
        ways = std::move(next);
    }
    Integer total = 0;
    for (const auto& w : ways) {
        total += w;
    }
    return total;
}

namespace {

void visit_sub(const Partition& p, std::vector<long>& cur, std::size_t i,
               const std::function<void(const Partition&)>& visit) {
    if (i > p.length()) {
        visit(Partition::from_weak(cur));
        return;
    }
    const long upper = std::min(p.part(i), i == 1 ? p.part(1) : cur[i - 2]);
    for (long v = 0; v <= upper; ++v) {
        cur[i - 1] = v;
        visit_sub(p, cur, i + 1, visit);
    }
}

void partitions_rec(long remaining, long max_part, std::vector<long>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (long v = std::min(remaining, max_part); v >= 1; --v) {
        cur.push_back(v);
        partitions_rec(remaining - v, v, cur, out);
        cur.pop_back();
    }
}

}  // namespace

void for_each_subpartition(const Partition& p, const std::function<void(const Partition&)>& visit) {
    std::vector<long> cur(p.length(), 0);
    visit_sub(p, cur, 1, visit);
}

std::vector<Partition> subpartitions(const Partition& p, unsigned long long cap) {
    const Integer total = count_subpartitions(p);
    if (total > Integer(std::to_string(cap))) {
        throw CapExceeded(cap, p.to_string() + " has " + total.get_str() + " subpartitions, above the cap of " +
                                   std::to_string(cap) + "; use for_each_subpartition to stream them");
    }
    std::vector<Partition> out;
    out.reserve(static_cast<std::size_t>(total.get_ui()));
    for_each_subpartition(p, [&](const Partition& mu) { out.push_back(mu); });
    return out;
}

std::vector<Partition> partitions_of(long n) {
    std::vector<Partition> out;
    if (n < 0) {
        return out;
    }
    std::vector<long> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::string render_diagram(const Partition& p, Orientation orientation, bool with_hooks) {
    if (p.empty()) {
        return "(empty)\n";
    }
    const auto table = hook_table(p);
    std::size_t width = 1;
    if (with_hooks) {
        for (const auto& row : table) {
            for (long h : row) {
                width = std::max(width, std::to_string(h).size());
            }
        }
    }
    std::vector<std::string> lines;
    for (const auto& row : table) {
        std::ostringstream line;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j > 0) {
                line << ' ';
            }
            std::string cell = with_hooks ? std::to_string(row[j]) : "#";
            line << std::string(width - cell.size(), ' ') << cell;
        }
        lines.push_back(line.str());
    }
    if (orientation == Orientation::French) {
        std::reverse(lines.begin(), lines.end());
    }
    std::string out;
    for (const auto& l : lines) {
        out += l + "\n";
    }
    return out;
}

}  // namespace simcore
