#pragma once

#include <iosfwd>
#include <vector>

#include "kcrank/qseries.hpp"

namespace kcrank {

/// Exact values M_k(m,n) for 0 <= n <= order, |m| <= n.
///
/// For k >= 2 only the m >= 0 half is stored and reads reflect (the k-crank
/// histogram is symmetric); for k = 1 the full Laurent row is stored, since
/// the ordinary-crank rows come from the series expansion and carry the n=1
/// anomaly. Immutable once built.
class KCrankTable {
public:
    /// Zero-filled table shell; rows are installed by the builders.
    KCrankTable(int k, int order);

    int k() const { return k_; }
    int order() const { return order_; }

    /// M_k(m,n). Throws OrderExceededError for n outside [0, order];
    /// returns 0 for |m| > n.
    const Integer& entry(int m, int n) const;

    Integer row_sum(int n) const;

    /// Mutable access for builders; index m must be stored directly
    /// (m >= 0 for k >= 2, any |m| <= n for k = 1).
    Integer& slot(int m, int n);

    bool operator==(const KCrankTable&) const = default;

private:
    int k_;
    int order_;
    std::vector<std::vector<Integer>> rows_;
};

/// Residue counts M_k(r, d, n) for 0 <= r < d, n <= order.
class ResidueTable {
public:
    ResidueTable(int k, int modulus, int order);

    int k() const { return k_; }
    int modulus() const { return d_; }
    int order() const { return order_; }
    const Integer& count(int r, int n) const;
    Integer& slot(int r, int n);

private:
    int k_;
    int d_;
    int order_;
    std::vector<std::vector<Integer>> values_;  // values_[r][n]
};

/// Exact M_k table via the part-count convolution
///   M_k(m,n) = sum_{w+c=n} D(m,w) p_{k-2}(c),
///   D(m,w)   = sum_{a+b=w} sum_t p#(a, t+|m|) p#(b, t).
/// Requires k >= 2 (ordinary crank comes from the bivariate expansion).
KCrankTable build(int k, int N, int jobs = 1);

/// The shared D(m,w) kernel, reusable across k. Small orders run the double
/// convolution in native 64/128-bit integers (exact within proven bounds);
/// force_exact routes through the all-mpz loops, which is also what orders
/// beyond the native bound use.
class CrankKernel {
public:
    explicit CrankKernel(int order, int jobs = 1, bool force_exact = false);
    int order() const { return order_; }
    KCrankTable table_for(int k) const;  // k >= 2

private:
    int order_;
    std::vector<std::vector<Integer>> d_;  // d_[m][w]
};

/// Aggregate a table into residue counts mod d (d >= 2), summing over the
/// full Laurent support.
ResidueTable residues(const KCrankTable& t, int d);

/// The series sum_n (M_k(r1,d,n) - M_k(r2,d,n)) q^n at the table's order.
QSeries residue_difference_series(const KCrankTable& t, int d, int r1, int r2);

/// Cache file format, one file per (k, N):
///   KCRANK v1 k=<k> N=<N>
///   <n>: v_0 v_1 ... v_n            (k >= 2)
///   <n>: full v_{-n} ... v_n        (k = 1)
///   END <row-count>
void write_cache(const KCrankTable& t, std::ostream& out);

/// Strict reader: throws CacheFormatError on a foreign magic line, a (k, N)
/// mismatch against the expectation, or any truncation/shape defect.
KCrankTable read_cache(std::istream& in, int expect_k, int expect_order);

}  // namespace kcrank
