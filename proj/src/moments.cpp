#include "kcrank/moments.hpp"

namespace kcrank {

Integer gen_binom(long a, int b) {
    if (b < 0) throw Error("gen_binom needs b >= 0");
    Integer num = 1;
    for (int i = 0; i < b; ++i) num *= Integer(a - i);
    Integer fact = 1;
    for (int i = 2; i <= b; ++i) fact *= i;
    Integer out;
    // a(a-1)...(a-b+1) is always divisible by b!
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), fact.get_mpz_t());
    return out;
}

namespace {
long floor_div2(long v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }
}

std::vector<Integer> mu_symmetrized(int j, const KCrankTable& table) {
    if (j < 0) throw Error("moment order must be >= 0");
    long shift = floor_div2(j - 1);
    std::vector<Integer> out(static_cast<std::size_t>(table.order()) + 1);
    for (int n = 0; n <= table.order(); ++n) {
        Integer acc;
        for (int m = -n; m <= n; ++m) {
            const Integer& v = table.entry(m, n);
            if (sgn(v) == 0) continue;
            acc += gen_binom(m + shift, j) * v;
        }
        out[n] = acc;
    }
    return out;
}

std::vector<Integer> mu_weighted_direct(int j, const KCrankTable& table) {
    if (j < 0) throw Error("moment half-order must be >= 0");
    std::vector<Integer> out(static_cast<std::size_t>(table.order()) + 1);
    for (int n = 0; n <= table.order(); ++n) {
        Integer acc;
        for (int m = -n; m <= n; ++m) {
            const Integer& v = table.entry(m, n);
            if (sgn(v) == 0) continue;
            Integer term = gen_binom(m + j - 1, 2 * j) * v;
            if (m & 1)
                acc -= term;
            else
                acc += term;
        }
        out[n] = acc;
    }
    return out;
}

namespace {

using Coeffs = std::vector<Integer>;

// gf1 tuples: weakly increasing n_1 <= ... <= n_d with running total <= order.
// `prod` carries q^{n_1+...+n_d} / prod (1+q^{n_i})^2 for the chosen prefix.
void gf1_rec(int depth, int j_max, int min_next, int budget, const Coeffs& prod,
             std::vector<Coeffs>& inner, int order) {
    if (depth == j_max) return;
    for (int n = min_next; n <= budget; ++n) {
        Coeffs next = prod;
        detail::shift_up(next, n);
        detail::div_one_plus_pow(next, n);
        detail::div_one_plus_pow(next, n);
        Coeffs& acc = inner[depth + 1];
        if ((depth + 1) & 1) {
            for (int i = 0; i <= order; ++i) acc[i] -= next[i];
        } else {
            for (int i = 0; i <= order; ++i) acc[i] += next[i];
        }
        gf1_rec(depth + 1, j_max, n, budget - n, next, inner, order);
    }
}

// gf2 tuples: strictly increasing m_1 < ... < m_d <= order. `series` carries
// prod 1/(1-q^{m_i}); the leaf factor (-1)^{m_d} c q^{m_d} lands per tuple.
void gf2_rec(int depth, int j_max, int prev, const Integer& scalar, const Coeffs& series,
             std::vector<Coeffs>& inner, int order) {
    if (depth == j_max) return;
    for (int m = prev + 1; m <= order; ++m) {
        Coeffs next = series;
        detail::div_one_minus_pow(next, m);
        Integer c = depth == 0 ? Integer(m) : Integer(scalar * (m - prev));
        Coeffs& acc = inner[depth + 1];
        if (m & 1) {
            for (int i = 0; i + m <= order; ++i)
                mpz_submul(acc[i + m].get_mpz_t(), c.get_mpz_t(), next[i].get_mpz_t());
        } else {
            for (int i = 0; i + m <= order; ++i)
                mpz_addmul(acc[i + m].get_mpz_t(), c.get_mpz_t(), next[i].get_mpz_t());
        }
        gf2_rec(depth + 1, j_max, m, c, next, inner, order);
    }
}

}  // namespace

WeightedMomentGf::WeightedMomentGf(int j_max, int order) : j_max_(j_max), order_(order) {
    if (j_max < 0) throw Error("j_max must be >= 0");
    if (order < 0) throw Error("order must be >= 0");

    std::vector<Coeffs> raw1(static_cast<std::size_t>(j_max) + 1,
                             Coeffs(static_cast<std::size_t>(order) + 1));
    std::vector<Coeffs> raw2 = raw1;
    raw1[0][0] = 1;
    raw2[0][0] = 1;

    Coeffs one(static_cast<std::size_t>(order) + 1);
    one[0] = 1;
    gf1_rec(0, j_max, 1, order, one, raw1, order);
    gf2_rec(0, j_max, 0, Integer(1), one, raw2, order);

    inner1_.reserve(raw1.size());
    inner2_.reserve(raw2.size());
    for (auto& c : raw1) inner1_.emplace_back(std::move(c));
    for (auto& c : raw2) inner2_.emplace_back(std::move(c));
}

QSeries WeightedMomentGf::prefactor(int k) const {
    QSeries p = pochhammer({+1, 1, 1, 2 - k}, order_);
    return p * pochhammer({-1, 1, 1, -2}, order_);
}

QSeries WeightedMomentGf::gf1(int j, int k) const {
    if (j < 0 || j > j_max_) throw Error("j out of precomputed range");
    return prefactor(k) * inner1_[j];
}

QSeries WeightedMomentGf::gf2(int j, int k) const {
    if (j < 0 || j > j_max_) throw Error("j out of precomputed range");
    return prefactor(k) * inner2_[j];
}

QSeries mu_weighted_gf1(int j, int k, int order) {
    return WeightedMomentGf(j, order).gf1(j, k);
}

QSeries mu_weighted_gf2(int j, int k, int order) {
    return WeightedMomentGf(j, order).gf2(j, k);
}

std::vector<DysonPair> dyson_second_moment_check(const KCrankTable& table,
                                                 const std::vector<Integer>& pk) {
    if (static_cast<int>(pk.size()) <= table.order())
        throw Error("p_k sequence shorter than the table");
    std::vector<DysonPair> out(static_cast<std::size_t>(table.order()) + 1);
    for (int n = 0; n <= table.order(); ++n) {
        Integer sum;
        for (int m = 1; m <= n; ++m) {
            Integer sq = Integer(m) * m;
            if (table.k() >= 2) {
                sum += 2 * sq * table.entry(m, n);
            } else {
                sum += sq * (table.entry(m, n) + table.entry(-m, n));
            }
        }
        out[n].lhs = Integer(table.k()) * sum;
        out[n].rhs = Integer(2) * n * pk[n];
    }
    return out;
}

}  // namespace kcrank
