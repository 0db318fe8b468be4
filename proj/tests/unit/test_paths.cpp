#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "oracles.hpp"
#include "simcore/errors.hpp"
#include "simcore/gd_path.hpp"
#include "simcore/rect_path.hpp"
#include "simcore/svg.hpp"

using namespace simcore;

namespace {

std::vector<Step> parse_steps(const std::string& s) {
    std::vector<Step> out;
    for (char c : s) {
        out.push_back(c == 'N' ? Step::N : Step::E);
    }
    return out;
}

GdStep N(long k) { return {GdStep::Kind::North, k}; }
GdStep E(long k) { return {GdStep::Kind::East, k}; }
GdStep D(long i) { return {GdStep::Kind::Diagonal, i}; }

}  // namespace

TEST_CASE("rect path counts") {
    CHECK(count_rect_paths(3, 5) == 7);
    CHECK(count_rect_paths(5, 7) == 66);
    for (long t = 1; t <= 9; ++t) {
        CHECK(count_rect_paths(1, t) == 1);
    }
    CHECK_THROWS_AS(count_rect_paths(4, 6), DomainError);
    for (long s = 1; s < 16; ++s) {
        for (long t = 1; s + t <= 16; ++t) {
            if (std::gcd(s, t) == 1) {
                REQUIRE(count_rect_paths(s, t) == oracle::brute_rect_path_count(s, t));
                REQUIRE(enumerate_rect_paths(s, t).size() == count_rect_paths(s, t));
            }
        }
    }
}

TEST_CASE("diagonal partition") {
    CHECK(diagonal_partition(7, 5) == Partition{5, 4, 2, 1});
    CHECK(diagonal_partition(3, 5) == Partition{2, 1, 1});
    CHECK(diagonal_partition(1, 6).empty());
    CHECK_THROWS_AS(diagonal_partition(4, 6), DomainError);
}

TEST_CASE("rect path validation") {
    CHECK_NOTHROW(RectPath(3, 5, parse_steps("NNNNNEEE")));
    CHECK_THROWS_AS(RectPath(3, 5, parse_steps("ENNNNNEE")), DomainError);
    CHECK_THROWS_AS(RectPath(3, 5, parse_steps("NNNNEE")), DomainError);
    CHECK_THROWS_AS(RectPath(2, 4, parse_steps("NNNNEE")), DomainError);
    CHECK(RectPath(3, 5, parse_steps("NNNNNEEE")).to_string() == "NNNNNEEE");
}

TEST_CASE("enumeration yields distinct valid paths") {
    const auto paths = enumerate_rect_paths(5, 7);
    CHECK(paths.size() == 66);
    CHECK(std::set<RectPath>(paths.begin(), paths.end()).size() == 66);
    CHECK(enumerate_rect_paths(1, 2).size() == 1);
    CHECK(enumerate_rect_paths(3, 5).size() == 7);
    CHECK_THROWS_AS(enumerate_rect_paths(5, 7, 10), CapExceeded);
    const Partition box = diagonal_partition(5, 7);
    std::set<Partition> above;
    for (const auto& p : paths) {
        REQUIRE(p.partition_above().contained_in(box));
        above.insert(p.partition_above());
    }
    CHECK(above.size() == 66);
}

TEST_CASE("coarea") {
    const auto paths = enumerate_rect_paths(7, 5);
    // N-first order: the first path hugs the boundary, the last the diagonal
    CHECK(coarea(paths.front()) == 0);
    CHECK(paths.front().to_string() == "NNNNNEEEEEEE");
    CHECK(coarea(paths.back()) == 12);
    CHECK(paths.back().partition_above() == Partition{5, 4, 2, 1});
    CHECK(coarea_polynomial(3, 5) == QPolynomial{1, 1, 2, 2, 1});
}

TEST_CASE("coarea distribution matches subpartition sizes") {
    for (long s = 1; s < 14; ++s) {
        for (long t = 1; s + t <= 14; ++t) {
            if (std::gcd(s, t) != 1) {
                continue;
            }
            std::vector<long> hist;
            for_each_rect_path(s, t, [&](const RectPath& p) {
                const auto c = static_cast<std::size_t>(coarea(p));
                if (hist.size() <= c) {
                    hist.resize(c + 1, 0);
                }
                ++hist[c];
            });
            std::vector<long> parts;
            const Partition lambda = diagonal_partition(s, t);
            parts.assign(lambda.parts().begin(), lambda.parts().end());
            REQUIRE(hist == oracle::subpartition_histogram(parts));
        }
    }
}

TEST_CASE("generalized Dyck path counts") {
    CHECK(count_gd(4, 1) == 14);
    CHECK(count_gd(2, 3) == 2);
    CHECK(count_gd(4, 3) == 8);
    CHECK(count_gd(0, 3) == 1);
    CHECK(count_gd(-2, 3) == 1);
    for (long k = 1; k <= 4; ++k) {
        for (long n = 1; n <= 10; ++n) {
            REQUIRE(count_gd(n, k) == oracle::gd_lattice_count(n, k));
            REQUIRE(count_gd(n, k) == multi_catalan(n, k));
            REQUIRE(enumerate_gd(n, k).size() == count_gd(n, k));
        }
    }
    for (long k = 1; k <= 6; ++k) {
        for (long n = 1; n <= k; ++n) {
            REQUIRE(enumerate_gd(n, k).size() == pow2(static_cast<unsigned long>(n - 1)));
        }
    }
    CHECK_THROWS_AS(enumerate_gd(8, 2, 5), CapExceeded);
}

TEST_CASE("generalized Dyck path validation") {
    CHECK_NOTHROW(GeneralizedDyckPath(1, 1, {N(1), E(1)}));
    CHECK_THROWS_AS(GeneralizedDyckPath(1, 1, {E(1), N(1)}), DomainError);
    CHECK_THROWS_AS(GeneralizedDyckPath(2, 3, {D(3)}), DomainError);
    CHECK_THROWS_AS(GeneralizedDyckPath(3, 3, {N(2), E(3)}), DomainError);
    CHECK_THROWS_AS(GeneralizedDyckPath(3, 3, {N(3)}), DomainError);
    const auto single = enumerate_gd(1, 1);
    REQUIRE(single.size() == 1);
    CHECK(single[0] == GeneralizedDyckPath(1, 1, {N(1), E(1)}));
}

TEST_CASE("inflation") {
    CHECK(inflate(GeneralizedDyckPath(1, 2, {D(1)})) == parse_steps("NE"));
    CHECK(inflate(GeneralizedDyckPath(3, 3, {N(3), E(3)})) == parse_steps("NNNEEE"));
    const GeneralizedDyckPath p(7, 3, {D(2), N(3), E(3), D(2)});
    CHECK(inflate(p) == parse_steps("NNEENNNEEENNEE"));
    CHECK(p.to_string() == "D2 N3 E3 D2");

    for (long k = 1; k <= 4; ++k) {
        for (long n = 1; n <= 8; ++n) {
            std::set<std::vector<Step>> seen;
            for (const auto& path : enumerate_gd(n, k)) {
                const auto steps = inflate(path);
                REQUIRE(steps.size() == static_cast<std::size_t>(2 * n));
                long x = 0;
                long y = 0;
                for (Step s : steps) {
                    (s == Step::N ? y : x) += 1;
                    REQUIRE(y >= x);
                }
                REQUIRE(x == n);
                REQUIRE(y == n);
                seen.insert(steps);
            }
            REQUIRE(seen.size() == count_gd(n, k));
        }
    }
}

TEST_CASE("labeling") {
    // n = 3, k = 2: diagonal 1 carries 1, 2; diagonal 3 is empty
    CHECK(gd_cell_label(3, 2, 0, 1) == 1);
    CHECK(gd_cell_label(3, 2, 1, 1) == 2);
    CHECK(gd_cell_label(3, 2, 0, 2) == 0);
    // n = 7, k = 2: second labeled diagonal starts at n + k + 1
    CHECK(gd_cell_label(7, 2, 0, 3) == 10);
    CHECK(gd_cell_label(7, 2, 3, 3) == 13);
}

TEST_CASE("gd_to_ideal extremes") {
    for (long k = 1; k <= 3; ++k) {
        for (long n = 1; n <= 7; ++n) {
            const GapPoset t = consecutive_poset(n, k);
            const LowerIdeal full(std::vector<long>(t.gaps().begin(), t.gaps().end()));
            // path along y = x
            std::vector<GdStep> hug;
            for (long i = 0; i < n; ++i) {
                if (k == 1) {
                    hug.push_back(N(1));
                    hug.push_back(E(1));
                } else {
                    hug.push_back(D(1));
                }
            }
            CHECK(gd_to_ideal(GeneralizedDyckPath(n, k, hug)) == LowerIdeal{});
            // the path with the most area under it takes every label
            long best_area = -1;
            LowerIdeal best;
            for (const auto& path : enumerate_gd(n, k)) {
                long area = 0;
                long y = 0;
                for (Step st : inflate(path)) {
                    if (st == Step::N) {
                        ++y;
                    } else {
                        area += y;
                    }
                }
                if (area > best_area) {
                    best_area = area;
                    best = gd_to_ideal(path);
                }
            }
            CHECK(best == full);
        }
    }
    CHECK(gd_to_ideal(GeneralizedDyckPath(3, 3, {N(3), E(3)})) == LowerIdeal({1, 2}));
}

TEST_CASE("gd_to_ideal bijection") {
    {
        const auto paths = enumerate_gd(4, 3);
        std::set<LowerIdeal> image;
        for (const auto& p : paths) {
            image.insert(gd_to_ideal(p));
        }
        const auto ideals = enumerate_lower_ideals(consecutive_poset(4, 3));
        CHECK(paths.size() == 8);
        CHECK(image == std::set<LowerIdeal>(ideals.begin(), ideals.end()));
    }
    for (long k = 1; k <= 3; ++k) {
        for (long n = 1; n <= 8; ++n) {
            const GapPoset t = consecutive_poset(n, k);
            std::set<LowerIdeal> image;
            std::size_t paths = 0;
            for_each_gd(n, k, [&](const GeneralizedDyckPath& p) {
                image.insert(gd_to_ideal(p));
                ++paths;
            });
            REQUIRE(image.size() == paths);
            std::vector<long> gaps(t.gaps().begin(), t.gaps().end());
            const auto brute = gaps.size() <= 16 ? oracle::brute_ideals(
                                                     gaps, {t.generators().values().begin(), t.generators().values().end()})
                                                 : std::vector<std::vector<long>>{};
            if (!brute.empty()) {
                std::set<LowerIdeal> expect;
                for (const auto& b : brute) {
                    expect.insert(LowerIdeal(b));
                }
                REQUIRE(image == expect);
            } else {
                const auto ideals = enumerate_lower_ideals(t);
                REQUIRE(image == std::set<LowerIdeal>(ideals.begin(), ideals.end()));
            }
        }
    }
}

TEST_CASE("step names") {
    CHECK(step_name(Step::N) == "N");
    CHECK(parse_step("E") == Step::E);
    CHECK_THROWS_AS(parse_step("X"), DomainError);
    CHECK(step_name(N(3)) == "N3");
    CHECK(step_name(D(2)) == "D2");
    CHECK(parse_gd_step("N3", 3) == N(3));
    CHECK(parse_gd_step("Nk", 3) == N(3));
    CHECK(parse_gd_step("Ek", 2) == E(2));
    CHECK(parse_gd_step("D1", 3) == D(1));
    CHECK_THROWS_AS(parse_gd_step("D3", 3), DomainError);
    CHECK_THROWS_AS(parse_gd_step("N2", 3), DomainError);
    CHECK_THROWS_AS(parse_gd_step("Q", 3), DomainError);
}

TEST_CASE("svg output") {
    const auto rect = enumerate_rect_paths(3, 5);
    const std::string one = rect_path_svg(rect.back(), {24.0, 12.0, true});
    CHECK(one.rfind("<svg", 0) == 0);
    CHECK(one.find("polyline") != std::string::npos);
    CHECK(one.find("</svg>") != std::string::npos);
    const std::string grid = rect_paths_grid_svg(rect, 4);
    CHECK(std::count(grid.begin(), grid.end(), '\n') > 7);
    const auto gd = enumerate_gd(4, 3);
    const std::string g = gd_paths_grid_svg(gd, 4, {16.0, 8.0, true});
    std::size_t polylines = 0;
    for (std::size_t pos = g.find("<polyline"); pos != std::string::npos; pos = g.find("<polyline", pos + 1)) {
        ++polylines;
    }
    CHECK(polylines == 8);
    CHECK(gd_path_svg(gd.front()).find("</svg>") != std::string::npos);
}
