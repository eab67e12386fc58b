#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kcrank/bivariate.hpp"
#include "kcrank/moments.hpp"
#include "kcrank/partitions.hpp"

using namespace kcrank;

TEST_CASE("gen_binom") {
    CHECK(gen_binom(-3, 2) == 6);
    CHECK(gen_binom(5, 2) == 10);
    for (long a : {-7L, 0L, 3L, 12L}) CHECK(gen_binom(a, 0) == 1);
    CHECK(gen_binom(1, 2) == 0);
    CHECK(gen_binom(-1, 3) == -1);
    SUBCASE("Pascal's rule for all integer upper arguments") {
        for (long a = -15; a <= 15; ++a)
            for (int b = 1; b <= 12; ++b)
                CHECK(gen_binom(a, b) == gen_binom(a - 1, b - 1) + gen_binom(a - 1, b));
    }
}

TEST_CASE("symmetrized moments") {
    KCrankTable t = build(2, 30);
    SUBCASE("odd j vanishes") {
        for (int j : {1, 3, 5}) {
            std::vector<Integer> mu = mu_symmetrized(j, t);
            for (const Integer& v : mu) CHECK(v == 0);
        }
    }
    SUBCASE("j=0 counts everything") {
        std::vector<Integer> mu = mu_symmetrized(0, t);
        std::vector<Integer> pk = pk_table(2, 30);
        for (int n = 0; n <= 30; ++n) CHECK(mu[n] == pk[n]);
    }
    SUBCASE("j=2, n=2 by hand") { CHECK(mu_symmetrized(2, t)[2] == 5); }
}

TEST_CASE("weighted moments, direct route") {
    KCrankTable t = build(2, 30);
    SUBCASE("j=0 reduces to the mod-2 residue difference, k=2 and k=3") {
        std::vector<Integer> mu = mu_weighted_direct(0, t);
        QSeries diff = residue_difference_series(t, 2, 0, 1);
        for (int n = 0; n <= 30; ++n) CHECK(mu[n] == diff[n]);
        KCrankTable t3 = build(3, 30);
        std::vector<Integer> mu3 = mu_weighted_direct(0, t3);
        QSeries diff3 = residue_difference_series(t3, 2, 0, 1);
        for (int n = 0; n <= 30; ++n) CHECK(mu3[n] == diff3[n]);
    }
    SUBCASE("j=1 spot values from the reference rows") {
        std::vector<Integer> mu = mu_weighted_direct(1, t);
        CHECK(mu[1] == -1);
        CHECK(mu[2] == 3);
        CHECK(mu[3] == -7);
    }
}

TEST_CASE("weighted moments, generating function routes") {
    SUBCASE("j=0 is the bare prefactor") {
        CHECK(mu_weighted_gf1(0, 2, 12) == invert(power(pochhammer({-1, 1, 1, 1}, 12), 2)));
        CHECK(mu_weighted_gf2(0, 2, 12) == mu_weighted_gf1(0, 2, 12));
    }
    SUBCASE("j=1, k=2 low coefficients") {
        QSeries g1 = mu_weighted_gf1(1, 2, 3);
        CHECK(g1[1] == -1);
        CHECK(g1[2] == 3);
        CHECK(g1[3] == -7);
        QSeries g2 = mu_weighted_gf2(1, 2, 3);
        CHECK(g2 == g1);
    }
    SUBCASE("the gf2 inner sum for j=1 starts -q + q^2 - 4q^3") {
        // recover the inner sum by multiplying the prefactor away
        QSeries g2 = mu_weighted_gf2(1, 2, 3);
        QSeries prefactor_inv = power(pochhammer({-1, 1, 1, 1}, 3), 2);
        CHECK(g2 * prefactor_inv == QSeries::of({0, -1, 1, -4}));
    }
}

TEST_CASE("three-way equality of the routes") {
    CrankKernel kernel(25);
    WeightedMomentGf gfs(3, 25);
    for (int k = 1; k <= 3; ++k) {
        KCrankTable t = k == 1 ? to_table(crank_gf(1, 25), 1) : kernel.table_for(k);
        for (int j = 0; j <= 3; ++j) {
            std::vector<Integer> direct = mu_weighted_direct(j, t);
            QSeries g1 = gfs.gf1(j, k);
            QSeries g2 = gfs.gf2(j, k);
            for (int n = 0; n <= 25; ++n) {
                CAPTURE(k);
                CAPTURE(j);
                CAPTURE(n);
                CHECK(direct[n] == g1[n]);
                CHECK(g1[n] == g2[n]);
            }
        }
    }
    SUBCASE("k=4 and k=5 at a smaller order") {
        CrankKernel small(20);
        WeightedMomentGf gsmall(2, 20);
        for (int k : {4, 5}) {
            KCrankTable t = small.table_for(k);
            for (int j = 0; j <= 2; ++j) {
                std::vector<Integer> direct = mu_weighted_direct(j, t);
                QSeries g1 = gsmall.gf1(j, k);
                QSeries g2 = gsmall.gf2(j, k);
                for (int n = 0; n <= 20; ++n) {
                    CHECK(direct[n] == g1[n]);
                    CHECK(g1[n] == g2[n]);
                }
            }
        }
    }
}

TEST_CASE("positivity of the signed weighted moments") {
    SUBCASE("k in {2,3}") {
        CrankKernel kernel(40);
        for (int k : {2, 3}) {
            KCrankTable t = kernel.table_for(k);
            for (int j = 0; j <= 5; ++j) {
                std::vector<Integer> mu = mu_weighted_direct(j, t);
                for (int n = j; n <= 40; ++n) {
                    Integer signed_val = (n % 2 == 0) ? mu[n] : Integer(-mu[n]);
                    CHECK(signed_val > 0);
                }
            }
        }
    }
    SUBCASE("k=1 with the series convention") {
        KCrankTable t = to_table(crank_gf(1, 40), 1);
        for (int j = 0; j <= 5; ++j) {
            std::vector<Integer> mu = mu_weighted_direct(j, t);
            for (int n = j; n <= 40; ++n) {
                Integer signed_val = (n % 2 == 0) ? mu[n] : Integer(-mu[n]);
                CHECK(signed_val > 0);
            }
        }
    }
}

TEST_CASE("mean-square identity") {
    SUBCASE("k=2, n=2 and the small cases") {
        KCrankTable t = build(2, 10);
        std::vector<DysonPair> pairs = dyson_second_moment_check(t, pk_table(2, 10));
        CHECK(pairs[2].lhs == 20);
        CHECK(pairs[2].rhs == 20);
        CHECK(pairs[0].lhs == 0);
        CHECK(pairs[0].rhs == 0);
        for (int n = 0; n <= 10; ++n) CHECK(pairs[n].lhs == pairs[n].rhs);
    }
    SUBCASE("k=1, n=4 via the crank values of the five partitions") {
        KCrankTable t = to_table(crank_gf(1, 6), 1);
        std::vector<DysonPair> pairs = dyson_second_moment_check(t, pk_table(1, 6));
        CHECK(pairs[4].lhs == 40);
        CHECK(pairs[4].rhs == 40);
        for (int n = 0; n <= 6; ++n) CHECK(pairs[n].lhs == pairs[n].rhs);
    }
    SUBCASE("holds exactly for k <= 6, n <= 60, with the divisibility remark") {
        CrankKernel kernel(60);
        for (int k = 1; k <= 6; ++k) {
            KCrankTable t =
                k == 1 ? to_table(crank_gf(1, 60), 1) : kernel.table_for(k);
            std::vector<Integer> pk = pk_table(k, 60);
            std::vector<DysonPair> pairs = dyson_second_moment_check(t, pk);
            for (int n = 0; n <= 60; ++n) {
                CHECK(pairs[n].lhs == pairs[n].rhs);
                CHECK((Integer(2) * n * pk[n]) % k == 0);
            }
        }
    }
}
