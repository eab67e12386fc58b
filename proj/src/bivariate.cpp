#include "kcrank/bivariate.hpp"

#include "kcrank/parallel.hpp"

namespace kcrank {

BivariateSeries::BivariateSeries(int order) : order_(order) {
    if (order < 0) throw Error("bivariate order must be >= 0");
    cols_.assign(static_cast<std::size_t>(2 * order) + 1, QSeries(order));
}

namespace {
const Integer kZero{};
}

const Integer& BivariateSeries::coeff(int m, int n) const {
    if (n < 0 || n > order_)
        throw OrderExceededError("q-exponent " + std::to_string(n) +
                                 " exceeds bivariate order " + std::to_string(order_));
    if (m < -order_ || m > order_) return kZero;
    return cols_[static_cast<std::size_t>(m + order_)][n];
}

const QSeries& BivariateSeries::column(int m) const {
    if (m < -order_ || m > order_) throw OrderExceededError("z-exponent out of range");
    return cols_[static_cast<std::size_t>(m + order_)];
}

QSeries& BivariateSeries::column_slot(int m) {
    return cols_[static_cast<std::size_t>(m + order_)];
}

BivariateSeries crank_gf(int k, int order, int jobs) {
    if (k < 1) throw Error("crank_gf needs k >= 1");
    const int N = order;
    BivariateSeries b(N);

    // E_t = q^t/(q;q)_t, the q-series of partitions with exactly t parts,
    // built by iterated exact division rather than the combinatorial
    // recurrence so this route stays independent of the convolution build.
    std::vector<std::vector<Integer>> e(static_cast<std::size_t>(N) + 1);
    e[0].assign(static_cast<std::size_t>(N) + 1, Integer{});
    e[0][0] = 1;
    for (int t = 1; t <= N; ++t) {
        e[t] = e[t - 1];
        detail::shift_up(e[t], 1);
        detail::div_one_minus_pow(e[t], t);
    }

    QSeries prefactor = pochhammer({+1, 1, 1, 2 - k}, N);

    // column m of the product of the two sums is sum_s E_{s+m} E_s
    parallel_for(0, N + 1, jobs, [&](int m) {
        std::vector<Integer> acc(static_cast<std::size_t>(N) + 1);
        for (int s = 0; m + 2 * s <= N; ++s)
            detail::add_product(acc, e[s + m], e[s], s + m, s);
        b.column_slot(m) = QSeries(std::move(acc)) * prefactor;
    });
    for (int m = 1; m <= N; ++m) b.column_slot(-m) = b.column(m);
    return b;
}

KCrankTable to_table(const BivariateSeries& b, int k) {
    KCrankTable t(k, b.order());
    for (int n = 0; n <= b.order(); ++n) {
        if (k >= 2) {
            for (int m = 0; m <= n; ++m) t.slot(m, n) = b.coeff(m, n);
        } else {
            for (int m = -n; m <= n; ++m) t.slot(m, n) = b.coeff(m, n);
        }
    }
    return t;
}

}  // namespace kcrank
