#pragma once

#include <vector>

#include "kcrank/crank_table.hpp"
#include "kcrank/qseries.hpp"

namespace kcrank {

/// Generalized binomial coefficient: the polynomial a(a-1)...(a-b+1)/b!,
/// defined for any integer a (nonzero for negative a). This is the form the
/// moment definitions require; the "0 when a < b" convention would falsify
/// the j = 0 reduction.
Integer gen_binom(long a, int b);

/// Symmetrized moments mu_{j,k}(n) = sum_m C(m + floor((j-1)/2), j) M_k(m,n)
/// for n = 0..table order. Identically zero for odd j by symmetry.
std::vector<Integer> mu_symmetrized(int j, const KCrankTable& table);

/// Parity-weighted moments mu_{2j,k}(-1,n) = sum_m C(m+j-1, 2j) (-1)^m M_k(m,n)
/// summed directly over the table; j is the half-order (the 2j-th moment).
std::vector<Integer> mu_weighted_direct(int j, const KCrankTable& table);

/// The two generating-function routes for mu_{2j,k}(-1,n). Both share the
/// prefactor 1/((q;q)^{k-2} (-q;q)^2); the inner sums depend on j only and
/// are precomputed once for all j <= j_max:
///   gf1: sum over n_j >= ... >= n_1 >= 1 of (-1)^j q^{n_1+...+n_j} / prod (1+q^{n_i})^2,
///        total n_1+...+n_j <= order;
///   gf2: sum over m_j > ... > m_1 >= 1, m_j <= order, of
///        (-1)^{m_j} m_1 (m_2-m_1)...(m_j-m_{j-1}) q^{m_j} / prod (1-q^{m_i}).
/// Every discarded tuple has q-valuation beyond the order, so both routes are
/// exact at the truncation order.
class WeightedMomentGf {
public:
    WeightedMomentGf(int j_max, int order);

    int order() const { return order_; }
    int j_max() const { return j_max_; }

    QSeries gf1(int j, int k) const;
    QSeries gf2(int j, int k) const;

private:
    QSeries prefactor(int k) const;

    int j_max_;
    int order_;
    std::vector<QSeries> inner1_;
    std::vector<QSeries> inner2_;
};

QSeries mu_weighted_gf1(int j, int k, int order);
QSeries mu_weighted_gf2(int j, int k, int order);

/// Both sides of the mean-square identity in integer form:
/// lhs = k * sum_m m^2 M_k(m,n), rhs = 2 n p_k(n).
struct DysonPair {
    Integer lhs;
    Integer rhs;
};
std::vector<DysonPair> dyson_second_moment_check(const KCrankTable& table,
                                                 const std::vector<Integer>& pk);

}  // namespace kcrank
