#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "kcrank/crank_table.hpp"
#include "kcrank/partitions.hpp"
#include "table1_data.hpp"

using namespace kcrank;

TEST_CASE("partition enumeration") {
    SUBCASE("n=0 yields one empty partition") {
        int count = 0;
        for_each_partition(0, [&](const Partition& p) {
            CHECK(p.empty());
            ++count;
        });
        CHECK(count == 1);
    }
    SUBCASE("n=4 yields the five partitions in descending order") {
        std::vector<std::vector<int>> got;
        for_each_partition(4, [&](const Partition& p) { got.push_back(p.parts); });
        std::vector<std::vector<int>> want = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
        CHECK(got == want);
    }
    SUBCASE("counts match the parts-count recurrence") {
        PartsCountTable pc(9);
        for (int n = 0; n <= 9; ++n) {
            long count = 0;
            std::set<std::vector<int>> distinct;
            for_each_partition(n, [&](const Partition& p) {
                ++count;
                distinct.insert(p.parts);
                CHECK(p.weight() == n);
            });
            CHECK(distinct.size() == static_cast<std::size_t>(count));  // no duplicates
            Integer via_pc;
            for (int t = 0; t <= 9; ++t) via_pc += pc.count(n, t);
            CHECK(via_pc == count);
        }
        long count9 = 0;
        for_each_partition(9, [&](const Partition&) { ++count9; });
        CHECK(count9 == 30);
    }
}

TEST_CASE("colored enumeration") {
    SUBCASE("k=2, n=2 has five objects") {
        int count = 0;
        for_each_colored(2, 2, [&](const ColoredPartition& cp) {
            CHECK(cp.weight() == 2);
            CHECK(cp.colors() == 2);
            ++count;
        });
        CHECK(count == 5);
    }
    SUBCASE("k=2, n=1 has cranks {1,-1}") {
        std::multiset<int> cranks;
        for_each_colored(2, 1, [&](const ColoredPartition& cp) { cranks.insert(k_crank(cp)); });
        CHECK(cranks == std::multiset<int>{-1, 1});
    }
    SUBCASE("n=0 has one object for any k") {
        for (int k : {1, 2, 5}) {
            int count = 0;
            for_each_colored(k, 0, [&](const ColoredPartition&) { ++count; });
            CHECK(count == 1);
        }
    }
    SUBCASE("counts match p_k") {
        for (int k : {1, 2, 3}) {
            std::vector<Integer> pk = pk_table(k, 8);
            for (int n = 0; n <= 8; ++n) {
                long count = 0;
                for_each_colored(k, n, [&](const ColoredPartition&) { ++count; });
                CHECK(pk[n] == count);
            }
        }
    }
}

TEST_CASE("statistics") {
    SUBCASE("k-crank") {
        ColoredPartition cp{{Partition({1, 1}), Partition({2}), Partition()}};
        CHECK(k_crank(cp) == 1);
        CHECK(k_crank(swap_first_two(cp)) == -1);
        CHECK(swap_first_two(swap_first_two(cp)) == cp);
        CHECK(k_crank(ColoredPartition{{Partition(), Partition()}}) == 0);
        CHECK_THROWS_AS(k_crank(ColoredPartition{{Partition({3})}}), NeedsTwoComponentsError);
    }
    SUBCASE("Andrews-Garvan crank") {
        CHECK(ag_crank(Partition({3, 1})) == 0);
        CHECK(ag_crank(Partition({4})) == 4);
        CHECK(ag_crank(Partition({1, 1, 1, 1})) == -4);
        CHECK(ag_crank(Partition({2, 1, 1})) == -2);
        CHECK_THROWS_AS(ag_crank(Partition()), EmptyPartitionError);
    }
    SUBCASE("Dyson rank") {
        CHECK(dyson_rank(Partition({4})) == 3);
        CHECK(dyson_rank(Partition({2, 2})) == 0);
        CHECK(dyson_rank(Partition({1, 1, 1})) == -2);
        CHECK_THROWS_AS(dyson_rank(Partition()), EmptyPartitionError);
    }
    SUBCASE("partition validation") {
        CHECK_THROWS_AS(Partition({1, 2}), Error);
        CHECK_THROWS_AS(Partition({2, 0}), Error);
    }
}

TEST_CASE("parts-count table") {
    PartsCountTable pc(12);
    CHECK(pc.count(5, 2) == 2);
    CHECK(pc.count(9, 3) == 7);
    for (int n = 1; n <= 12; ++n) CHECK(pc.count(n, 1) == 1);
    CHECK(pc.count(0, 0) == 1);
    for (int n = 0; n <= 12; ++n)
        for (int t = n + 1; t <= 12; ++t) CHECK(pc.count(n, t) == 0);
}

TEST_CASE("pk_table") {
    CHECK(pk_table(1, 4)[4] == 5);
    CHECK(pk_table(2, 2)[2] == 5);
    for (int k : {1, 2, 3, 7}) CHECK(pk_table(k, 0)[0] == 1);
    SUBCASE("matches the series route") {
        for (int k : {1, 2, 5}) {
            std::vector<Integer> dp = pk_table(k, 40);
            QSeries series = pochhammer({+1, 1, 1, -k}, 40);
            for (int n = 0; n <= 40; ++n) CHECK(dp[n] == series[n]);
        }
    }
}

TEST_CASE("distinct odd parity counts") {
    OdParityCounts od = distinct_odd_parity_counts(60);
    CHECK(od.odd[3] == 1);
    CHECK(od.even[3] == 0);
    CHECK(od.even[0] == 1);
    CHECK(od.even[4] == 1);  // {3,1}
    SUBCASE("sum matches (-q;q^2)") {
        QSeries gen = pochhammer({-1, 1, 2, 1}, 60);
        for (int n = 0; n <= 60; ++n) CHECK(od.even[n] + od.odd[n] == gen[n]);
    }
    SUBCASE("half-sum and half-difference identities") {
        QSeries plus = pochhammer({-1, 1, 2, 1}, 60) + pochhammer({+1, 1, 2, 1}, 60);
        QSeries minus = pochhammer({-1, 1, 2, 1}, 60) - pochhammer({+1, 1, 2, 1}, 60);
        QSeries half_plus = int_divide(plus, Integer(2));
        QSeries half_minus = int_divide(minus, Integer(2));
        for (int n = 0; n <= 60; ++n) {
            CHECK(half_plus[n] == od.even[n]);
            CHECK(half_minus[n] == od.odd[n]);
        }
    }
}

TEST_CASE("k-crank histogram symmetry via the swap bijection") {
    for (int k : {2, 3}) {
        for (int n = 0; n <= 8; ++n) {
            std::map<int, long> hist;
            long checked = 0;
            for_each_colored(k, n, [&](const ColoredPartition& cp) {
                hist[k_crank(cp)] += 1;
                ColoredPartition swapped = swap_first_two(cp);
                CHECK(swapped.weight() == cp.weight());
                CHECK(k_crank(swapped) == -k_crank(cp));
                ++checked;
            });
            CHECK(checked > 0);
            for (const auto& [m, count] : hist) CHECK(hist[-m] == count);
        }
    }
}

TEST_CASE("brute force table") {
    SUBCASE("k=2 reproduces the reference table entirely") {
        KCrankTable t = brute_force_table(2, 12);
        const auto& ref = table1_reference();
        for (int n = 0; n <= 12; ++n)
            for (int m = 0; m <= n; ++m) CHECK(t.entry(m, n) == ref[n][m]);
    }
    SUBCASE("spot values") {
        KCrankTable t = brute_force_table(3, 4);
        CHECK(t.entry(0, 2) == 3);
        CHECK(t.entry(0, 0) == 1);
        CHECK(t.row_sum(0) == 1);
    }
    SUBCASE("budget guard") {
        CHECK_THROWS_AS(brute_force_table(2, 25), BudgetExceededError);
        KCrankTable raised = brute_force_table(2, 13, 13);  // raising it is allowed
        CHECK(raised.order() == 13);
    }
}
