#pragma once

#include <vector>

#include "kcrank/crank_table.hpp"
#include "kcrank/qseries.hpp"

namespace kcrank {

/// Laurent polynomial in z with QSeries coefficients, truncated at q^order.
/// The z-support is automatically bounded by the q-order (a unit of |m| costs
/// at least one part), so columns live on m in [-order, order]. Immutable
/// after construction; columns are independent.
class BivariateSeries {
public:
    explicit BivariateSeries(int order);

    int order() const { return order_; }

    /// Coefficient of z^m q^n. Throws OrderExceededError for n > order;
    /// absent columns (|m| > order) read as zero.
    const Integer& coeff(int m, int n) const;

    const QSeries& column(int m) const;
    QSeries& column_slot(int m);

private:
    int order_;
    std::vector<QSeries> cols_;  // index m + order_
};

/// Expansion of C_k(z,q) = (q;q)^{2-k} / ((zq;q)(z^{-1}q;q)) truncated at
/// q^order, computed through the two q-exponential sums
///   1/(zq;q) = sum_t z^t q^t/(q;q)_t,  1/(z^{-1}q;q) = sum_s z^{-s} q^s/(q;q)_s,
/// whose indices need t, s <= order only. Covers the ordinary crank as k = 1.
BivariateSeries crank_gf(int k, int order, int jobs = 1);

/// Repackage the coefficients into a KCrankTable for the given k.
KCrankTable to_table(const BivariateSeries& b, int k);

}  // namespace kcrank
