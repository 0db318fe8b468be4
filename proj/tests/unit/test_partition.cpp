#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "simcore/errors.hpp"
#include "simcore/partition.hpp"

using namespace simcore;

namespace {

std::vector<long> as_vector(const Partition& p) { return {p.parts().begin(), p.parts().end()}; }

std::vector<Partition> all_up_to(long max_size) {
    std::vector<Partition> out;
    for (long n = 0; n <= max_size; ++n) {
        for (auto& p : partitions_of(n)) {
            out.push_back(std::move(p));
        }
    }
    return out;
}

}  // namespace

TEST_CASE("partition validation") {
    CHECK_THROWS_AS(Partition({2, 3}), DomainError);
    CHECK_THROWS_AS(Partition({2, 0}), DomainError);
    CHECK(Partition::from_weak({3, 1, 0, 0}) == Partition{3, 1});
    CHECK(Partition{}.empty());
    CHECK(Partition{6, 3, 1, 1}.size() == 11);
    CHECK(Partition{6, 3, 1, 1}.conjugate() == Partition{4, 2, 2, 1, 1, 1});
    CHECK(partitions_of(5).size() == 7);
    CHECK(partitions_of(0).size() == 1);
}

TEST_CASE("hook lengths") {
    CHECK(hook_length(Partition{6, 3, 1, 1}, 1, 1) == 9);
    CHECK(hook_length(Partition{1}, 1, 1) == 1);
    CHECK(hook_length(Partition{2, 1}, 1, 1) == 3);
    CHECK_THROWS_AS(hook_length(Partition{2, 1}, 2, 2), DomainError);
    CHECK_THROWS_AS(hook_length(Partition{}, 1, 1), DomainError);

    // Every hook agrees with a count over the explicit cell set.
    for (const auto& p : all_up_to(9)) {
        const auto table = hook_table(p);
        for (std::size_t r = 1; r <= p.length(); ++r) {
            for (long c = 1; c <= p.part(r); ++c) {
                const long expect = oracle::cell_hook(as_vector(p), static_cast<long>(r), c);
                REQUIRE(hook_length(p, static_cast<long>(r), c) == expect);
                REQUIRE(table[r - 1][static_cast<std::size_t>(c - 1)] == expect);
            }
        }
    }
}

TEST_CASE("core predicates") {
    CHECK(is_core(Partition{6, 3, 1, 1}, 4));
    for (long s = 1; s <= 10; ++s) {
        CHECK(is_core(Partition{}, s));
    }
    for (long s : {5, 7, 13}) {
        CHECK(is_core(Partition{8, 4, 3, 1}, s));
    }
    const std::vector<long> gens{5, 7, 13};
    CHECK(is_multicore(Partition{8, 4, 3, 1}, gens));
    CHECK_FALSE(is_multicore(Partition{1}, std::vector<long>{1}));
    CHECK(is_multicore(Partition{1}, std::vector<long>{2, 3}));
    CHECK_FALSE(is_multicore(Partition{2, 1}, std::vector<long>{3}));
    CHECK_THROWS_AS(is_multicore(Partition{1}, std::vector<long>{}), DomainError);
    CHECK_THROWS_AS(is_core(Partition{1}, 0), DomainError);

    const auto bad = divisible_hooks(Partition{2, 1}, std::vector<long>{3});
    REQUIRE(bad.size() == 1);
    CHECK(bad[0].row == 1);
    CHECK(bad[0].col == 1);
    CHECK(bad[0].hook == 3);
}

TEST_CASE("full hook scan agrees with the hook-set criterion") {
    for (const auto& p : all_up_to(15)) {
        const HookSet h = first_column_hooks(p);
        for (long s = 1; s <= 7; ++s) {
            REQUIRE(is_core(p, s) == is_core_by_hooks(h, s));
        }
    }
}

TEST_CASE("first-column hooks and inverse") {
    CHECK(first_column_hooks(Partition{6, 3, 1, 1}) == HookSet{1, 2, 5, 9});
    CHECK(first_column_hooks(Partition{}) == HookSet{});
    CHECK(first_column_hooks(Partition{8, 4, 3, 1}) == HookSet{1, 4, 6, 11});
    CHECK(partition_from_hooks(HookSet{1, 4, 6, 11}) == Partition{8, 4, 3, 1});
    CHECK(partition_from_hooks(HookSet{}) == Partition{});
    CHECK(partition_from_hooks(HookSet{1, 2, 3, 7}) == Partition{4, 1, 1, 1});
    CHECK(first_column_hooks(Partition{4, 1, 1, 1}) == HookSet{1, 2, 3, 7});
    CHECK_THROWS_AS(HookSet({1, 1}), DomainError);
    CHECK_THROWS_AS(HookSet({0, 2}), DomainError);
}

TEST_CASE("hook-set bijection round trips") {
    for (const auto& p : all_up_to(20)) {
        REQUIRE(partition_from_hooks(first_column_hooks(p)) == p);
    }
    for (unsigned mask = 0; mask < (1u << 10); ++mask) {
        std::vector<long> elems;
        for (long i = 0; i < 10; ++i) {
            if (mask >> i & 1u) {
                elems.push_back(i + 1);
            }
        }
        const HookSet h(elems);
        REQUIRE(first_column_hooks(partition_from_hooks(h)) == h);
    }
}

TEST_CASE("subpartitions") {
    const auto sub21 = subpartitions(Partition{2, 1});
    CHECK(sub21.size() == 5);
    const std::set<Partition> expect{Partition{}, Partition{1}, Partition{2}, Partition{1, 1}, Partition{2, 1}};
    CHECK(std::set<Partition>(sub21.begin(), sub21.end()) == expect);
    CHECK(subpartitions(Partition{}).size() == 1);
    CHECK(subpartitions(Partition{2, 1, 1}).size() == 7);
    CHECK(count_subpartitions(Partition{2, 1, 1}) == 7);
    CHECK_THROWS_AS(subpartitions(Partition{5, 5, 5, 5, 5}, 10), CapExceeded);

    for (const auto& p : all_up_to(10)) {
        const long expect = oracle::subpartition_count(as_vector(p));
        REQUIRE(count_subpartitions(p) == expect);
        long streamed = 0;
        for_each_subpartition(p, [&](const Partition& mu) {
            REQUIRE(mu.contained_in(p));
            ++streamed;
        });
        REQUIRE(streamed == expect);
    }
}

TEST_CASE("diagram rendering") {
    const Partition p{3, 1};
    CHECK(render_diagram(p, Orientation::English, false) == "# # #\n#\n");
    CHECK(render_diagram(p, Orientation::French, false) == "#\n# # #\n");
    CHECK(render_diagram(p, Orientation::French, true) == "1\n4 2 1\n");
    CHECK(render_diagram(Partition{6, 3, 1, 1}, Orientation::French, true) ==
          "1\n2\n5 2 1\n9 6 5 3 2 1\n");
    CHECK(render_diagram(Partition{10}, Orientation::English, true) == "10  9  8  7  6  5  4  3  2  1\n");
    CHECK(render_diagram(Partition{}, Orientation::French, true) == "(empty)\n");
}
