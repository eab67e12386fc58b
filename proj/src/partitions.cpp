#include "kcrank/partitions.hpp"

#include <algorithm>

#include "kcrank/crank_table.hpp"

namespace kcrank {

int k_crank(const ColoredPartition& cp) {
    if (cp.colors() < 2)
        throw NeedsTwoComponentsError("k-crank needs at least two components, got " +
                                      std::to_string(cp.colors()));
    return cp.components[0].length() - cp.components[1].length();
}

int ag_crank(const Partition& p) {
    if (p.empty()) throw EmptyPartitionError("crank of the empty partition is undefined");
    int ones = static_cast<int>(std::count(p.parts.begin(), p.parts.end(), 1));
    if (ones == 0) return p.parts.front();
    int larger = 0;
    for (int part : p.parts)
        if (part > ones) ++larger;
    return larger - ones;
}

int dyson_rank(const Partition& p) {
    if (p.empty()) throw EmptyPartitionError("rank of the empty partition is undefined");
    return p.parts.front() - p.length();
}

ColoredPartition swap_first_two(ColoredPartition cp) {
    if (cp.colors() < 2)
        throw NeedsTwoComponentsError("the crank involution needs two components");
    std::swap(cp.components[0], cp.components[1]);
    return cp;
}

PartsCountTable::PartsCountTable(int order) : order_(order) {
    if (order < 0) throw Error("parts-count order must be >= 0");
    rows_.resize(static_cast<std::size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) rows_[n].resize(static_cast<std::size_t>(order) + 1);
    rows_[0][0] = 1;
    for (int n = 1; n <= order; ++n)
        for (int t = 1; t <= n; ++t) {
            rows_[n][t] = rows_[n - 1][t - 1];
            if (n - t >= 0) rows_[n][t] += rows_[n - t][t];
        }
}

const Integer& PartsCountTable::count(int n, int t) const {
    if (n < 0 || n > order_ || t < 0 || t > order_)
        throw OrderExceededError("parts-count index out of range");
    return rows_[n][t];
}

std::vector<Integer> pk_table(int k, int N) {
    if (k < 1) throw Error("pk_table needs k >= 1");
    if (N < 0) throw Error("pk_table needs N >= 0");
    // k copies of every part size, one geometric pass each
    std::vector<Integer> c(static_cast<std::size_t>(N) + 1);
    c[0] = 1;
    for (int part = 1; part <= N; ++part)
        for (int copy = 0; copy < k; ++copy)
            detail::div_one_minus_pow(c, part);
    return c;
}

namespace {
void distinct_odd_rec(int budget, int min_part, int count, std::vector<Integer>& even,
                      std::vector<Integer>& odd, int weight) {
    (count % 2 == 0 ? even : odd)[weight] += 1;
    for (int part = min_part; part <= budget; part += 2)
        distinct_odd_rec(budget - part, part + 2, count + 1, even, odd, weight + part);
}
}  // namespace

OdParityCounts distinct_odd_parity_counts(int N) {
    if (N < 0) throw Error("order must be >= 0");
    OdParityCounts out;
    out.even.resize(static_cast<std::size_t>(N) + 1);
    out.odd.resize(static_cast<std::size_t>(N) + 1);
    // enumerate distinct odd parts ascending; the recursion records every
    // prefix exactly once
    distinct_odd_rec(N, 1, 0, out.even, out.odd, 0);
    return out;
}

KCrankTable brute_force_table(int k, int N, int max_order) {
    if (k < 2) throw Error("brute_force_table needs k >= 2");
    if (N < 0) throw Error("order must be >= 0");
    if (N > max_order)
        throw BudgetExceededError("enumeration guard: order " + std::to_string(N) +
                                  " exceeds budget " + std::to_string(max_order));
    KCrankTable t(k, N);
    for (int n = 0; n <= N; ++n) {
        std::vector<Integer> hist(static_cast<std::size_t>(2 * n) + 1);
        for_each_colored(k, n, [&](const ColoredPartition& cp) {
            hist[static_cast<std::size_t>(k_crank(cp) + n)] += 1;
        });
        for (int m = 0; m <= n; ++m) {
            if (hist[n + m] != hist[n - m])
                throw Error("enumerated k-crank histogram is not symmetric");
            t.slot(m, n) = hist[n + m];
        }
    }
    return t;
}

}  // namespace kcrank
