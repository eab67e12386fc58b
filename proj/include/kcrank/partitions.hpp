#pragma once

#include <numeric>
#include <utility>
#include <vector>

#include "kcrank/qseries.hpp"

namespace kcrank {

class KCrankTable;  // crank_table.hpp

/// A partition: weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p) : parts(std::move(p)) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1) throw Error("partition parts must be >= 1");
            if (i && parts[i] > parts[i - 1])
                throw Error("partition parts must be weakly decreasing");
        }
    }

    int weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    int length() const { return static_cast<int>(parts.size()); }
    bool empty() const { return parts.empty(); }
    bool operator==(const Partition&) const = default;
};

/// A k-colored partition: an ordered k-tuple of partitions.
struct ColoredPartition {
    std::vector<Partition> components;

    int colors() const { return static_cast<int>(components.size()); }
    int weight() const {
        int w = 0;
        for (const auto& p : components) w += p.weight();
        return w;
    }
    bool operator==(const ColoredPartition&) const = default;
};

/// Part-count difference of the first two components. Throws
/// NeedsTwoComponentsError for fewer than two components.
int k_crank(const ColoredPartition& cp);

/// Andrews-Garvan crank: the largest part if no ones occur, otherwise the
/// number of parts larger than the number of ones, minus the number of ones.
int ag_crank(const Partition& p);

/// Dyson rank: largest part minus number of parts.
int dyson_rank(const Partition& p);

/// The crank-negating involution: swap the first two components.
ColoredPartition swap_first_two(ColoredPartition cp);

namespace detail {
template <typename F>
void partitions_rec(int n, int max_part, std::vector<int>& buf, F& visit) {
    if (n == 0) {
        Partition p;
        p.parts = buf;
        visit(static_cast<const Partition&>(p));
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        buf.push_back(part);
        partitions_rec(n - part, part, buf, visit);
        buf.pop_back();
    }
}

template <typename F>
void for_each_partition_impl(int n, F&& visit) {
    std::vector<int> buf;
    partitions_rec(n, n == 0 ? 1 : n, buf, visit);
}

template <typename F>
void colored_rec(int k, int n, int idx, std::vector<Partition>& comps, F& visit) {
    if (idx == k - 1) {
        for_each_partition_impl(n, [&](const Partition& p) {
            comps[idx] = p;
            ColoredPartition cp;
            cp.components = comps;
            visit(static_cast<const ColoredPartition&>(cp));
        });
        return;
    }
    for (int w = n; w >= 0; --w) {
        for_each_partition_impl(w, [&](const Partition& p) {
            comps[idx] = p;
            colored_rec(k, n - w, idx + 1, comps, visit);
        });
    }
}
}  // namespace detail

/// Visit every partition of n exactly once, lexicographically descending
/// ([n] first, [1,...,1] last).
template <typename F>
void for_each_partition(int n, F&& visit) {
    if (n < 0) throw Error("partition weight must be >= 0");
    detail::for_each_partition_impl(n, std::forward<F>(visit));
}

/// Visit every k-tuple of partitions with total weight n exactly once, in a
/// fixed deterministic order (component weights descending, each component
/// lexicographically descending).
template <typename F>
void for_each_colored(int k, int n, F&& visit) {
    if (k < 1) throw Error("colored partitions need k >= 1");
    if (n < 0) throw Error("weight must be >= 0");
    std::vector<Partition> comps(static_cast<std::size_t>(k));
    detail::colored_rec(k, n, 0, comps, visit);
}

/// p#(n,t): partitions of n with exactly t parts, for 0 <= n,t <= order,
/// filled by the recurrence p#(n,t) = p#(n-1,t-1) + p#(n-t,t).
class PartsCountTable {
public:
    explicit PartsCountTable(int order);
    int order() const { return order_; }
    const Integer& count(int n, int t) const;

private:
    int order_;
    std::vector<std::vector<Integer>> rows_;  // rows_[n][t]
};

/// Coefficients of 1/(q;q)_inf^k, i.e. k-colored partition counts p_k(0..N).
std::vector<Integer> pk_table(int k, int N);

/// OD_0(n) / OD_1(n): partitions of n into distinct odd parts with an even /
/// odd number of parts, by direct enumeration.
struct OdParityCounts {
    std::vector<Integer> even;  // OD_0
    std::vector<Integer> odd;   // OD_1
};
OdParityCounts distinct_odd_parity_counts(int N);

/// Ground-truth M_k table by full enumeration of k-colored partitions.
/// Guarded: throws BudgetExceededError when N exceeds max_order (default 20);
/// callers may raise the budget knowingly.
KCrankTable brute_force_table(int k, int N, int max_order = 20);

}  // namespace kcrank
