#include "simcore/rect_path.hpp"

#include <numeric>
#include <utility>

#include "simcore/errors.hpp"

namespace simcore {
namespace {

void require_coprime(long s, long t) {
    if (s < 1 || t < 1) {
        throw DomainError("rectangle sides must be positive, got (" + std::to_string(s) + "," +
                          std::to_string(t) + ")");
    }
    if (std::gcd(s, t) != 1) {
        throw DomainError("s = " + std::to_string(s) + " and t = " + std::to_string(t) +
                          " are not coprime (gcd " + std::to_string(std::gcd(s, t)) + ")");
    }
}

}  // namespace

RectPath::RectPath(long s, long t, std::vector<Step> steps) : s_(s), t_(t), steps_(std::move(steps)) {
    require_coprime(s, t);
    if (steps_.size() != static_cast<std::size_t>(s + t)) {
        throw DomainError("an (s,t) path has s + t steps");
    }
    long x = 0;
    long y = 0;
    for (Step st : steps_) {
        if (st == Step::N) {
            ++y;
        } else {
            ++x;
        }
        if (x > s || y > t || s * y < t * x) {
            throw DomainError("path " + to_string() + " leaves the region above the diagonal");
        }
    }
}

Partition RectPath::partition_above() const {
    // Row j from the top spans heights [t-j, t-j+1].
    std::vector<long> mu(static_cast<std::size_t>(t_), 0);
    long x = 0;
    long y = 0;
    for (Step st : steps_) {
        if (st == Step::N) {
            mu[static_cast<std::size_t>(t_ - y - 1)] = x;
            ++y;
        } else {
            ++x;
        }
    }
    return Partition::from_weak(std::move(mu));
}

std::string RectPath::to_string() const {
    std::string out;
    out.reserve(steps_.size());
    for (Step st : steps_) {
        out.push_back(static_cast<char>(st));
    }
    return out;
}

Integer count_rect_paths(long s, long t) {
    require_coprime(s, t);
    Integer c = binomial(s + t, s);
    mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(s + t));
    return c;
}

Partition diagonal_partition(long s, long t) {
    require_coprime(s, t);
    std::vector<long> parts;
    for (long j = 1; j <= t - 1; ++j) {
        parts.push_back(s * (t - j) / t);
    }
    return Partition::from_weak(std::move(parts));
}

namespace {

struct RectWalk {
    long s;
    long t;
    const std::function<void(const RectPath&)>& visit;
    unsigned long long cap;
    unsigned long long emitted = 0;
    std::vector<Step> steps;

    void go(long x, long y) {
        if (x == s && y == t) {
            if (emitted == cap) {
                throw CapExceeded(cap, "(s,t)-path enumeration exceeded the cap of " + std::to_string(cap));
            }
            ++emitted;
            visit(RectPath(s, t, steps));
            return;
        }
        if (y < t) {
            steps.push_back(Step::N);
            go(x, y + 1);
            steps.pop_back();
        }
        if (x < s && s * y >= t * (x + 1)) {
            steps.push_back(Step::E);
            go(x + 1, y);
            steps.pop_back();
        }
    }
};

}  // namespace

void for_each_rect_path(long s, long t, const std::function<void(const RectPath&)>& visit,
                        unsigned long long cap) {
    require_coprime(s, t);
    RectWalk walk{s, t, visit, cap, 0, {}};
    walk.go(0, 0);
}

std::vector<RectPath> enumerate_rect_paths(long s, long t, unsigned long long cap) {
    std::vector<RectPath> out;
    for_each_rect_path(s, t, [&](const RectPath& p) { out.push_back(p); }, cap);
    return out;
}

long coarea(const RectPath& path) { return path.partition_above().size(); }

QPolynomial coarea_polynomial(long s, long t, unsigned long long cap) {
    std::vector<Integer> coeffs;
    for_each_rect_path(
        s, t,
        [&](const RectPath& p) {
            const auto a = static_cast<std::size_t>(coarea(p));
            if (coeffs.size() <= a) {
                coeffs.resize(a + 1, 0);
            }
            ++coeffs[a];
        },
        cap);
    return QPolynomial(std::move(coeffs));
}

std::string step_name(Step s) { return std::string(1, static_cast<char>(s)); }

Step parse_step(const std::string& name) {
    if (name == "N") {
        return Step::N;
    }
    if (name == "E") {
        return Step::E;
    }
    throw DomainError("unknown lattice step '" + name + "'");
}

}  // namespace simcore
