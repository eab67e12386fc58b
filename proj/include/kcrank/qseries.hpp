#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "kcrank/errors.hpp"

namespace kcrank {

using Integer = mpz_class;

/// Truncated formal power series in q with exact integer coefficients.
///
/// The truncation order is part of the value: a QSeries of order N holds the
/// coefficients of q^0..q^N and nothing else. Binary operations work at the
/// minimum of the two orders and the result carries that order, so precision
/// loss is always visible in the type's state, never silent. Values are
/// immutable once constructed and safe to share across threads.
class QSeries {
public:
    /// Zero series of the given order (order >= 0).
    explicit QSeries(int order);

    /// Wrap explicit coefficients; order is coeffs.size() - 1.
    explicit QSeries(std::vector<Integer> coeffs);

    /// Test/convenience constructor from small ints.
    static QSeries of(std::initializer_list<long> coeffs);

    /// The series 1 at the given order.
    static QSeries unit(int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }

    /// Coefficient of q^n, 0 <= n <= order.
    const Integer& operator[](int n) const;

    const std::vector<Integer>& coeffs() const { return coeffs_; }

    /// Copy truncated to a smaller (or equal) order.
    QSeries truncated(int new_order) const;

    bool is_zero() const;

    QSeries operator-() const;
    friend QSeries operator+(const QSeries& a, const QSeries& b);
    friend QSeries operator-(const QSeries& a, const QSeries& b);
    friend QSeries operator*(const QSeries& a, const QSeries& b);  // Cauchy product
    QSeries operator*(const Integer& c) const;

    bool operator==(const QSeries&) const = default;

    std::string str() const;  // space-separated decimal coefficients

private:
    std::vector<Integer> coeffs_;
};

/// The Pochhammer symbol (sign * q^a ; q^b)_infinity, i.e. the product of
/// (1 - sign * q^{a+bi}) over i >= 0, raised to `exponent` (any integer).
struct PochhammerSpec {
    int sign;      // +1 or -1, the sign inside the symbol
    int a;         // offset, >= 1
    int b;         // step, >= 1
    int exponent;  // may be negative or zero
};

/// Multiplicative inverse up to the order. Throws NonUnitConstantError unless
/// the constant coefficient is +1 or -1.
QSeries invert(const QSeries& a);

/// Coefficient-wise exact quotient by a nonzero integer. Throws
/// NotDivisibleError naming the first offending index.
QSeries int_divide(const QSeries& a, const Integer& d);

/// a^e for any integer e; negative e routes through invert.
QSeries power(const QSeries& a, int e);

/// Expansion of the infinite product described by spec, truncated at `order`.
/// Only the finitely many factors with offset <= order contribute.
QSeries pochhammer(const PochhammerSpec& spec, int order);

/// J_s = (q^s;q^s)_inf.
QSeries j_product(int s, int order);

/// J_{s,t} = (q^s;q^t)_inf (q^{t-s};q^t)_inf (q^t;q^t)_inf, 1 <= s < t.
/// Throws BadModuliError otherwise.
QSeries j_product(int s, int t, int order);

/// q -> -q: negate coefficients at odd exponents.
QSeries substitute_neg_q(const QSeries& a);

/// Sub-series on the arithmetic progression dn + r: coefficient n of the
/// result is the coefficient of q^{dn+r} of a. The result order is
/// floor((order_a - r)/d); throws OrderExceededError when r > order_a since
/// no coefficient of the dissection is then known.
QSeries dissect(const QSeries& a, int d, int r);

namespace detail {
// In-place passes on coefficient vectors, exact over the integers. These are
// the building blocks for Pochhammer products and the moment identities.
void mul_one_minus_pow(std::vector<Integer>& c, int j);  // c *= (1 - q^j)
void div_one_minus_pow(std::vector<Integer>& c, int j);  // c *= 1/(1 - q^j)
void mul_one_plus_pow(std::vector<Integer>& c, int j);   // c *= (1 + q^j)
void div_one_plus_pow(std::vector<Integer>& c, int j);   // c *= 1/(1 + q^j)
void shift_up(std::vector<Integer>& c, int j);           // c *= q^j, truncated

// acc[n] += sum over i+k=n of a[i]*b[k], for n <= order of acc; a and b may
// be given with known valuations to skip leading zeros.
void add_product(std::vector<Integer>& acc, const std::vector<Integer>& a,
                 const std::vector<Integer>& b, int val_a = 0, int val_b = 0);
}  // namespace detail

}  // namespace kcrank
