#pragma once

// Brute-force reference implementations used only by the tests. None of these
// call into the code path they are used to check.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "simcore/integer.hpp"
#include "simcore/partition.hpp"
#include "simcore/qpoly.hpp"

namespace oracle {

using simcore::Integer;
using simcore::Rational;

inline Integer pascal_binomial(long n, long k) {
    if (k < 0 || k > n) {
        return 0;
    }
    std::vector<Integer> row{1};
    for (long m = 1; m <= n; ++m) {
        std::vector<Integer> next(static_cast<std::size_t>(m) + 1, 0);
        next[0] = 1;
        next[static_cast<std::size_t>(m)] = 1;
        for (long j = 1; j < m; ++j) {
            next[static_cast<std::size_t>(j)] = row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)];
        }
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

/// Leibniz expansion over all permutations.
template <typename T>
T permutation_det(const std::vector<std::vector<T>>& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    T total(0);
    do {
        // sign by counting inversions
        std::size_t inv = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                inv += perm[i] > perm[j];
            }
        }
        T term(1);
        for (std::size_t i = 0; i < n; ++i) {
            term = term * m[i][perm[i]];
        }
        if (inv % 2) {
            total = total - term;
        } else {
            total = total + term;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

/// [n over k]_q as the sum over k-subsets A of {1..n} of q^(sum(A) - k(k+1)/2).
inline simcore::QPolynomial subset_q_binomial(long n, long k) {
    if (k < 0 || k > n) {
        return {};
    }
    std::vector<Integer> coeffs(static_cast<std::size_t>(k * (n - k)) + 1, 0);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) != k) {
            continue;
        }
        long sum = 0;
        for (long i = 0; i < n; ++i) {
            if (mask & (1u << i)) {
                sum += i + 1;
            }
        }
        ++coeffs[static_cast<std::size_t>(sum - k * (k + 1) / 2)];
    }
    return simcore::QPolynomial(std::move(coeffs));
}

/// Subpartitions by running every sequence 0 <= a_i <= lambda_i and keeping the
/// weakly decreasing ones. Returns size histogram.
inline std::vector<long> subpartition_histogram(const std::vector<long>& lambda) {
    long total = 0;
    for (long v : lambda) {
        total += v;
    }
    std::vector<long> hist(static_cast<std::size_t>(total) + 1, 0);
    std::vector<long> a(lambda.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == lambda.size()) {
            for (std::size_t j = 1; j < a.size(); ++j) {
                if (a[j] > a[j - 1]) {
                    return;
                }
            }
            long s = 0;
            for (long v : a) {
                s += v;
            }
            ++hist[static_cast<std::size_t>(s)];
            return;
        }
        for (long v = 0; v <= lambda[i]; ++v) {
            a[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return hist;
}

inline long subpartition_count(const std::vector<long>& lambda) {
    long c = 0;
    for (long v : subpartition_histogram(lambda)) {
        c += v;
    }
    return c;
}

/// sqrt of a series with f0 = 1 by the coefficient recurrence 2 g_n = f_n - sum g_i g_{n-i}.
inline std::vector<Rational> recurrence_sqrt(const std::vector<Rational>& f) {
    std::vector<Rational> g(f.size());
    if (f.empty()) {
        return g;
    }
    g[0] = 1;
    for (std::size_t n = 1; n < f.size(); ++n) {
        Rational acc = f[n];
        for (std::size_t i = 1; i < n; ++i) {
            acc -= g[i] * g[n - i];
        }
        g[n] = acc / 2;
    }
    return g;
}

/// m is a non-negative combination of gens, by plain recursion.
inline bool representable(long m, const std::vector<long>& gens, std::size_t from = 0) {
    if (m == 0) {
        return true;
    }
    for (std::size_t i = from; i < gens.size(); ++i) {
        if (gens[i] <= m && representable(m - gens[i], gens, i)) {
            return true;
        }
    }
    return false;
}

inline std::vector<long> gaps_up_to(const std::vector<long>& gens, long bound) {
    std::vector<long> out;
    for (long m = 1; m <= bound; ++m) {
        if (!representable(m, gens)) {
            out.push_back(m);
        }
    }
    return out;
}

/// Lower ideals of the gap order by testing every subset against the
/// transitive closure of a - b in gens (Floyd-Warshall).
inline std::vector<std::vector<long>> brute_ideals(const std::vector<long>& gaps, const std::vector<long>& gens) {
    const std::size_t n = gaps.size();
    std::vector<std::vector<char>> below(n, std::vector<char>(n, 0));  // below[a][b]: b <= a
    for (std::size_t a = 0; a < n; ++a) {
        below[a][a] = 1;
        for (std::size_t b = 0; b < n; ++b) {
            if (std::find(gens.begin(), gens.end(), gaps[a] - gaps[b]) != gens.end()) {
                below[a][b] = 1;
            }
        }
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                if (below[i][k] && below[k][j]) {
                    below[i][j] = 1;
                }
            }
        }
    }
    std::vector<std::vector<long>> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a) {
            if (!(mask >> a & 1)) {
                continue;
            }
            for (std::size_t b = 0; b < n; ++b) {
                if (below[a][b] && !(mask >> b & 1)) {
                    ok = false;
                    break;
                }
            }
        }
        if (ok) {
            std::vector<long> ideal;
            for (std::size_t a = 0; a < n; ++a) {
                if (mask >> a & 1) {
                    ideal.push_back(gaps[a]);
                }
            }
            out.push_back(ideal);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Hook length from the explicit cell set of the diagram.
inline long cell_hook(const std::vector<long>& parts, long row, long col) {
    std::set<std::pair<long, long>> cells;
    for (std::size_t r = 0; r < parts.size(); ++r) {
        for (long c = 1; c <= parts[r]; ++c) {
            cells.insert({static_cast<long>(r) + 1, c});
        }
    }
    long h = 1;
    for (long c = col + 1; cells.count({row, c}); ++c) {
        ++h;
    }
    for (long r = row + 1; cells.count({r, col}); ++r) {
        ++h;
    }
    return h;
}

/// Walks from (0,0) to (n,n) with steps (0,k), (k,0), (i,i), 1 <= i < k, staying
/// on y >= x, counted by dynamic programming over lattice points.
inline Integer gd_lattice_count(long n, long k) {
    std::vector<std::vector<Integer>> ways(static_cast<std::size_t>(n) + 1,
                                           std::vector<Integer>(static_cast<std::size_t>(n) + 1, 0));
    ways[0][0] = 1;
    for (long x = 0; x <= n; ++x) {
        for (long y = x; y <= n; ++y) {
            const Integer& w = ways[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
            if (w == 0) {
                continue;
            }
            auto add = [&](long nx, long ny) {
                if (nx <= n && ny <= n && ny >= nx) {
                    ways[static_cast<std::size_t>(nx)][static_cast<std::size_t>(ny)] += w;
                }
            };
            add(x, y + k);
            add(x + k, y);
            for (long i = 1; i < k; ++i) {
                add(x + i, y + i);
            }
        }
    }
    return ways[static_cast<std::size_t>(n)][static_cast<std::size_t>(n)];
}

/// (s,t)-Dyck paths by filtering all arrangements of s E's and t N's.
inline long brute_rect_path_count(long s, long t) {
    long count = 0;
    const long len = s + t;
    for (std::uint32_t mask = 0; mask < (1u << len); ++mask) {
        if (std::popcount(mask) != s) {
            continue;  // bit set = E
        }
        long x = 0;
        long y = 0;
        bool ok = true;
        for (long i = 0; i < len && ok; ++i) {
            if (mask >> i & 1) {
                ++x;
            } else {
                ++y;
            }
            ok = s * y >= t * x;
        }
        count += ok;
    }
    return count;
}

}  // namespace oracle
