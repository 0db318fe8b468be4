#include "simcore/gd_path.hpp"

#include <stdexcept>
#include <utility>

#include "simcore/errors.hpp"

namespace simcore {

GeneralizedDyckPath::GeneralizedDyckPath(long n, long k, std::vector<GdStep> steps)
    : n_(n), k_(k), steps_(std::move(steps)) {
    if (n < 1 || k < 1) {
        throw DomainError("generalized Dyck paths need n >= 1 and k >= 1");
    }
    long x = 0;
    long y = 0;
    for (const auto& st : steps_) {
        switch (st.kind) {
            case GdStep::Kind::North:
                if (st.length != k) {
                    throw DomainError("vertical steps have length k = " + std::to_string(k));
                }
                y += k;
                break;
            case GdStep::Kind::East:
                if (st.length != k) {
                    throw DomainError("horizontal steps have length k = " + std::to_string(k));
                }
                x += k;
                break;
            case GdStep::Kind::Diagonal:
                if (st.length < 1 || st.length > k - 1) {
                    throw DomainError("diagonal step D" + std::to_string(st.length) + " needs 1 <= i <= k-1");
                }
                x += st.length;
                y += st.length;
                break;
        }
        if (y < x || x > n || y > n) {
            throw DomainError("path " + to_string() + " leaves the region y >= x inside the n x n square");
        }
    }
    if (x != n || y != n) {
        throw DomainError("path " + to_string() + " does not end at (n,n)");
    }
}

std::string GeneralizedDyckPath::to_string() const {
    std::string out;
    for (const auto& st : steps_) {
        if (!out.empty()) {
            out += ' ';
        }
        out += step_name(st);
    }
    return out;
}

Integer count_gd(long n, long k) {
    if (k < 1) {
        throw DomainError("generalized Dyck paths need k >= 1");
    }
    if (n <= 0) {
        return 1;
    }
    std::vector<Integer> gd(static_cast<std::size_t>(n) + 1);
    auto at = [&](long m) -> Integer { return m <= 0 ? Integer(1) : gd[static_cast<std::size_t>(m)]; };
    gd[0] = 1;
    for (long m = 1; m <= n; ++m) {
        Integer total = 0;
        for (long first_return = 1; first_return <= m; ++first_return) {
            total += at(first_return - k) * at(m - first_return);
        }
        gd[static_cast<std::size_t>(m)] = std::move(total);
    }
    return gd[static_cast<std::size_t>(n)];
}

namespace {

struct GdWalk {
    long n;
    long k;
    const std::function<void(const GeneralizedDyckPath&)>& visit;
    unsigned long long cap;
    unsigned long long emitted = 0;
    std::vector<GdStep> steps;

    void go(long x, long y) {
        if (x == n && y == n) {
            if (emitted == cap) {
                throw CapExceeded(cap, "generalized Dyck path enumeration exceeded the cap of " +
                                           std::to_string(cap));
            }
            ++emitted;
            visit(GeneralizedDyckPath(n, k, steps));
            return;
        }
        if (y + k <= n) {
            steps.push_back({GdStep::Kind::North, k});
            go(x, y + k);
            steps.pop_back();
        }
        if (x + k <= n && y >= x + k) {
            steps.push_back({GdStep::Kind::East, k});
            go(x + k, y);
            steps.pop_back();
        }
        for (long i = 1; i <= k - 1 && y + i <= n; ++i) {
            steps.push_back({GdStep::Kind::Diagonal, i});
            go(x + i, y + i);
            steps.pop_back();
        }
    }
};

}  // namespace

void for_each_gd(long n, long k, const std::function<void(const GeneralizedDyckPath&)>& visit,
                 unsigned long long cap) {
    if (n < 1 || k < 1) {
        throw DomainError("generalized Dyck paths need n >= 1 and k >= 1");
    }
    GdWalk walk{n, k, visit, cap, 0, {}};
    walk.go(0, 0);
}

std::vector<GeneralizedDyckPath> enumerate_gd(long n, long k, unsigned long long cap) {
    std::vector<GeneralizedDyckPath> out;
    for_each_gd(n, k, [&](const GeneralizedDyckPath& p) { out.push_back(p); }, cap);
    return out;
}

std::vector<Step> inflate(const GeneralizedDyckPath& path) {
    std::vector<Step> out;
    out.reserve(static_cast<std::size_t>(2 * path.n()));
    for (const auto& st : path.steps()) {
        switch (st.kind) {
            case GdStep::Kind::North:
                out.insert(out.end(), static_cast<std::size_t>(st.length), Step::N);
                break;
            case GdStep::Kind::East:
                out.insert(out.end(), static_cast<std::size_t>(st.length), Step::E);
                break;
            case GdStep::Kind::Diagonal:
                out.insert(out.end(), static_cast<std::size_t>(st.length), Step::N);
                out.insert(out.end(), static_cast<std::size_t>(st.length), Step::E);
                break;
        }
    }
    return out;
}

long gd_cell_label(long n, long k, long x, long d) {
    if (d < 1 || (d - 1) % k != 0 || x < 0 || x + d > n - 1) {
        return 0;
    }
    const long block = (d - 1) / k;
    return block * (n + k) + x + 1;
}

LowerIdeal gd_to_ideal(const GeneralizedDyckPath& path) {
    const long n = path.n();
    const long k = path.k();
    // height[x] = y-coordinate of the inflated path along column x
    std::vector<long> height(static_cast<std::size_t>(n), 0);
    long x = 0;
    long y = 0;
    for (Step st : inflate(path)) {
        if (st == Step::N) {
            ++y;
        } else {
            height[static_cast<std::size_t>(x)] = y;
            ++x;
        }
    }
    std::vector<long> labels;
    for (long d = 1; d <= n - 1; d += k) {
        for (long col = 0; col + d <= n - 1; ++col) {
            if (col + d < height[static_cast<std::size_t>(col)]) {
                labels.push_back(gd_cell_label(n, k, col, d));
            }
        }
    }
    LowerIdeal ideal(std::move(labels));
    const GapPoset poset = consecutive_poset(n, k);
    if (!poset.is_lower_ideal(ideal.elements())) {
        throw std::logic_error("labels " + ideal.to_string() + " under path " + path.to_string() +
                               " are not a lower ideal of T_{" + std::to_string(n) + "," + std::to_string(k) +
                               "}");
    }
    return ideal;
}

std::string step_name(const GdStep& step) {
    switch (step.kind) {
        case GdStep::Kind::North:
            return "N" + std::to_string(step.length);
        case GdStep::Kind::East:
            return "E" + std::to_string(step.length);
        case GdStep::Kind::Diagonal:
            return "D" + std::to_string(step.length);
    }
    return "?";
}

GdStep parse_gd_step(const std::string& name, long k) {
    if (name.size() < 2) {
        throw DomainError("unknown generalized step '" + name + "'");
    }
    const char head = name.front();
    const std::string tail = name.substr(1);
    long len = 0;
    if (tail == "k" && (head == 'N' || head == 'E')) {
        len = k;
    } else {
        try {
            std::size_t used = 0;
            len = std::stol(tail, &used);
            if (used != tail.size()) {
                throw DomainError("unknown generalized step '" + name + "'");
            }
        } catch (const std::logic_error&) {
            throw DomainError("unknown generalized step '" + name + "'");
        }
    }
    switch (head) {
        case 'N':
        case 'E':
            if (len != k) {
                throw DomainError("step " + name + " needs length k = " + std::to_string(k));
            }
            return {head == 'N' ? GdStep::Kind::North : GdStep::Kind::East, len};
        case 'D':
            if (len < 1 || len > k - 1) {
                throw DomainError("diagonal step " + name + " needs 1 <= i <= " + std::to_string(k - 1));
            }
            return {GdStep::Kind::Diagonal, len};
        default:
            throw DomainError("unknown generalized step '" + name + "'");
    }
}

}  // namespace simcore
