#include "kcrank/qseries.hpp"

#include <algorithm>
#include <sstream>

namespace kcrank {

QSeries::QSeries(int order) {
    if (order < 0) throw Error("series order must be >= 0");
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

QSeries::QSeries(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw Error("series needs at least the constant coefficient");
}

QSeries QSeries::of(std::initializer_list<long> coeffs) {
    std::vector<Integer> c;
    c.reserve(coeffs.size());
    for (long v : coeffs) c.emplace_back(v);
    return QSeries(std::move(c));
}

QSeries QSeries::unit(int order) {
    QSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

const Integer& QSeries::operator[](int n) const {
    if (n < 0 || n > order())
        throw OrderExceededError("coefficient index " + std::to_string(n) +
                                 " exceeds series order " + std::to_string(order()));
    return coeffs_[static_cast<std::size_t>(n)];
}

QSeries QSeries::truncated(int new_order) const {
    if (new_order > order())
        throw OrderExceededError("cannot extend a truncated series");
    std::vector<Integer> c(coeffs_.begin(), coeffs_.begin() + new_order + 1);
    return QSeries(std::move(c));
}

bool QSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Integer& v) { return sgn(v) == 0; });
}

QSeries QSeries::operator-() const {
    std::vector<Integer> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return QSeries(std::move(c));
}

QSeries operator+(const QSeries& a, const QSeries& b) {
    int n = std::min(a.order(), b.order());
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
    return QSeries(std::move(c));
}

QSeries operator-(const QSeries& a, const QSeries& b) {
    int n = std::min(a.order(), b.order());
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) c[i] = a.coeffs_[i] - b.coeffs_[i];
    return QSeries(std::move(c));
}

QSeries operator*(const QSeries& a, const QSeries& b) {
    int n = std::min(a.order(), b.order());
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if (sgn(a.coeffs_[i]) == 0) continue;
        for (int k = 0; k + i <= n; ++k)
            mpz_addmul(c[i + k].get_mpz_t(), a.coeffs_[i].get_mpz_t(),
                       b.coeffs_[k].get_mpz_t());
    }
    return QSeries(std::move(c));
}

QSeries QSeries::operator*(const Integer& v) const {
    std::vector<Integer> c(coeffs_.size());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] * v;
    return QSeries(std::move(c));
}

std::string QSeries::str() const {
    std::ostringstream out;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out << ' ';
        out << coeffs_[i].get_str();
    }
    return out.str();
}

QSeries invert(const QSeries& a) {
    const Integer& a0 = a[0];
    if (a0 != 1 && a0 != -1)
        throw NonUnitConstantError("series inversion needs constant coefficient +/-1, got " +
                                   a0.get_str());
    int n = a.order();
    std::vector<Integer> b(static_cast<std::size_t>(n) + 1);
    b[0] = a0;  // 1/(+1) = +1, 1/(-1) = -1
    Integer acc;
    for (int i = 1; i <= n; ++i) {
        acc = 0;
        for (int k = 1; k <= i; ++k)
            mpz_addmul(acc.get_mpz_t(), a[k].get_mpz_t(), b[i - k].get_mpz_t());
        b[i] = -a0 * acc;
    }
    return QSeries(std::move(b));
}

QSeries int_divide(const QSeries& a, const Integer& d) {
    if (sgn(d) == 0) throw Error("int_divide by zero");
    int n = a.order();
    std::vector<Integer> c(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        if (!mpz_divisible_p(a[i].get_mpz_t(), d.get_mpz_t()))
            throw NotDivisibleError(i, "coefficient at q^" + std::to_string(i) + " (" +
                                           a[i].get_str() + ") is not divisible by " +
                                           d.get_str());
        mpz_divexact(c[i].get_mpz_t(), a[i].get_mpz_t(), d.get_mpz_t());
    }
    return QSeries(std::move(c));
}

QSeries power(const QSeries& a, int e) {
    if (e == 0) return QSeries::unit(a.order());
    bool neg = e < 0;
    unsigned long m = neg ? -(static_cast<long>(e)) : static_cast<unsigned long>(e);
    QSeries acc = a;
    // binary powering; the factor count is small so this is plenty
    QSeries result = QSeries::unit(a.order());
    while (m) {
        if (m & 1) result = result * acc;
        m >>= 1;
        if (m) acc = acc * acc;
    }
    return neg ? invert(result) : result;
}

namespace detail {

void mul_one_minus_pow(std::vector<Integer>& c, int j) {
    for (int i = static_cast<int>(c.size()) - 1; i >= j; --i) c[i] -= c[i - j];
}

void div_one_minus_pow(std::vector<Integer>& c, int j) {
    for (int i = j; i < static_cast<int>(c.size()); ++i) c[i] += c[i - j];
}

void mul_one_plus_pow(std::vector<Integer>& c, int j) {
    for (int i = static_cast<int>(c.size()) - 1; i >= j; --i) c[i] += c[i - j];
}

void div_one_plus_pow(std::vector<Integer>& c, int j) {
    for (int i = j; i < static_cast<int>(c.size()); ++i) c[i] -= c[i - j];
}

void shift_up(std::vector<Integer>& c, int j) {
    if (j == 0) return;
    for (int i = static_cast<int>(c.size()) - 1; i >= j; --i) c[i] = c[i - j];
    for (int i = 0; i < j && i < static_cast<int>(c.size()); ++i) c[i] = 0;
}

void add_product(std::vector<Integer>& acc, const std::vector<Integer>& a,
                 const std::vector<Integer>& b, int val_a, int val_b) {
    int n = static_cast<int>(acc.size()) - 1;
    int amax = std::min<int>(static_cast<int>(a.size()) - 1, n - val_b);
    for (int i = val_a; i <= amax; ++i) {
        if (sgn(a[i]) == 0) continue;
        int kmax = std::min<int>(static_cast<int>(b.size()) - 1, n - i);
        for (int k = val_b; k <= kmax; ++k)
            mpz_addmul(acc[i + k].get_mpz_t(), a[i].get_mpz_t(), b[k].get_mpz_t());
    }
}

}  // namespace detail

QSeries pochhammer(const PochhammerSpec& spec, int order) {
    if (spec.sign != 1 && spec.sign != -1)
        throw Error("pochhammer sign must be +1 or -1");
    if (spec.a < 1 || spec.b < 1)
        throw Error("pochhammer offset and step must be >= 1");
    if (spec.exponent == 0) return QSeries::unit(order);

    std::vector<Integer> c(static_cast<std::size_t>(order) + 1);
    c[0] = 1;
    int reps = spec.exponent > 0 ? spec.exponent : -spec.exponent;
    for (int r = 0; r < reps; ++r)
        for (long j = spec.a; j <= order; j += spec.b)
            spec.sign > 0 ? detail::mul_one_minus_pow(c, static_cast<int>(j))
                          : detail::mul_one_plus_pow(c, static_cast<int>(j));
    QSeries base{std::move(c)};
    return spec.exponent > 0 ? base : invert(base);
}

QSeries j_product(int s, int order) {
    if (s < 1) throw BadModuliError("J_s needs s >= 1");
    return pochhammer({+1, s, s, 1}, order);
}

QSeries j_product(int s, int t, int order) {
    if (s < 1 || t <= s)
        throw BadModuliError("J_{s,t} needs 1 <= s < t, got s=" + std::to_string(s) +
                             " t=" + std::to_string(t));
    QSeries p = pochhammer({+1, s, t, 1}, order);
    p = p * pochhammer({+1, t - s, t, 1}, order);
    return p * pochhammer({+1, t, t, 1}, order);
}

QSeries substitute_neg_q(const QSeries& a) {
    std::vector<Integer> c(a.coeffs());
    for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
    return QSeries(std::move(c));
}

QSeries dissect(const QSeries& a, int d, int r) {
    if (d < 1) throw Error("dissection modulus must be >= 1");
    if (r < 0 || r >= d) throw Error("dissection residue must satisfy 0 <= r < d");
    if (r > a.order())
        throw OrderExceededError("dissection residue exceeds the series order");
    int m = (a.order() - r) / d;
    std::vector<Integer> c(static_cast<std::size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) c[i] = a[d * i + r];
    return QSeries(std::move(c));
}

}  // namespace kcrank
