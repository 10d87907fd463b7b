#ifndef MACMAHON_QSERIES_HPP
#define MACMAHON_QSERIES_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <macmahon/rational.hpp>

namespace macmahon {

// Truncated formal power series sum_{n=0}^{order} c_n t^n, known modulo
// t^(order+1). Binary operations return the smaller of the input orders, so
// a result never claims coefficients that its inputs did not determine.
//
// Coeff must form a commutative ring with a zero default value, a unit
// constructible from Rational, and scaling by Rational. Rational itself and
// MultiPoly both qualify.
template <class Coeff>
class TruncatedSeries
{
public:
    explicit TruncatedSeries(int order = 0) : m_coeffs(check_order(order) + 1) {}

    explicit TruncatedSeries(std::vector<Coeff> coeffs) : m_coeffs(std::move(coeffs))
    {
        if (m_coeffs.empty()) {
            throw std::invalid_argument("a truncated series needs at least one coefficient");
        }
    }

    static TruncatedSeries constant(const Coeff &c, int order)
    {
        TruncatedSeries s(order);
        s.m_coeffs[0] = c;
        return s;
    }

    // c * t^power, or the zero series when power > order.
    static TruncatedSeries monomial(int power, const Coeff &c, int order)
    {
        TruncatedSeries s(order);
        if (power < 0) {
            throw std::invalid_argument("negative exponent in monomial");
        }
        if (power <= order) {
            s.m_coeffs[static_cast<std::size_t>(power)] = c;
        }
        return s;
    }

    int order() const { return static_cast<int>(m_coeffs.size()) - 1; }

    const Coeff &operator[](int n) const { return m_coeffs.at(static_cast<std::size_t>(n)); }
    Coeff &operator[](int n) { return m_coeffs.at(static_cast<std::size_t>(n)); }

    std::span<const Coeff> coeffs() const { return m_coeffs; }

    TruncatedSeries truncated(int order) const
    {
        if (order > this->order()) {
            throw std::invalid_argument("cannot extend a truncated series");
        }
        return TruncatedSeries(std::vector<Coeff>(m_coeffs.begin(), m_coeffs.begin() + order + 1));
    }

    friend TruncatedSeries operator+(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        const int ord = std::min(a.order(), b.order());
        TruncatedSeries r(ord);
        for (int n = 0; n <= ord; ++n) {
            r[n] = a[n] + b[n];
        }
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        const int ord = std::min(a.order(), b.order());
        TruncatedSeries r(ord);
        for (int n = 0; n <= ord; ++n) {
            r[n] = a[n] - b[n];
        }
        return r;
    }

    friend TruncatedSeries operator-(const TruncatedSeries &a)
    {
        TruncatedSeries r(a.order());
        for (int n = 0; n <= a.order(); ++n) {
            r[n] = -a[n];
        }
        return r;
    }

    // Schoolbook convolution; zero coefficients of `a` are skipped.
    friend TruncatedSeries operator*(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        const int ord = std::min(a.order(), b.order());
        TruncatedSeries r(ord);
        for (int i = 0; i <= ord; ++i) {
            if (is_zero(a[i])) {
                continue;
            }
            for (int j = 0; i + j <= ord; ++j) {
                if (!is_zero(b[j])) {
                    r[i + j] += a[i] * b[j];
                }
            }
        }
        return r;
    }

    friend TruncatedSeries operator*(const TruncatedSeries &a, const Rational &c)
    {
        TruncatedSeries r(a.order());
        for (int n = 0; n <= a.order(); ++n) {
            r[n] = a[n] * c;
        }
        return r;
    }

    friend TruncatedSeries operator*(const Rational &c, const TruncatedSeries &a) { return a * c; }

    TruncatedSeries &operator+=(const TruncatedSeries &b) { return *this = *this + b; }
    TruncatedSeries &operator-=(const TruncatedSeries &b) { return *this = *this - b; }
    TruncatedSeries &operator*=(const TruncatedSeries &b) { return *this = *this * b; }

    // Equality on the common truncation order.
    friend bool operator==(const TruncatedSeries &a, const TruncatedSeries &b)
    {
        const int ord = std::min(a.order(), b.order());
        for (int n = 0; n <= ord; ++n) {
            if (!(a[n] == b[n])) {
                return false;
            }
        }
        return true;
    }

private:
    static int check_order(int order)
    {
        if (order < 0) {
            throw std::invalid_argument("truncation order must be non-negative");
        }
        return order;
    }

    std::vector<Coeff> m_coeffs;
};

template <class Coeff>
TruncatedSeries<Coeff> pow(const TruncatedSeries<Coeff> &a, unsigned e)
{
    auto result = TruncatedSeries<Coeff>::constant(Coeff(Rational(1)), a.order());
    auto base = a;
    while (e != 0) {
        if (e & 1u) {
            result *= base;
        }
        e >>= 1;
        if (e != 0) {
            base *= base;
        }
    }
    return result;
}

// exp via n f_n = sum_{i=1}^n i a_i f_{n-i}, which is f' = f a'.
template <class Coeff>
TruncatedSeries<Coeff> exp(const TruncatedSeries<Coeff> &a)
{
    if (!is_zero(a[0])) {
        throw std::domain_error("exp requires a zero constant term");
    }
    TruncatedSeries<Coeff> f(a.order());
    f[0] = Coeff(Rational(1));
    for (int n = 1; n <= a.order(); ++n) {
        Coeff acc{};
        for (int i = 1; i <= n; ++i) {
            if (!is_zero(a[i])) {
                acc += a[i] * f[n - i] * Rational(i);
            }
        }
        f[n] = acc * Rational(1, n);
    }
    return f;
}

// Inverse of exp: n g_n = n a_n - sum_{i=1}^{n-1} i g_i a_{n-i}.
template <class Coeff>
TruncatedSeries<Coeff> log(const TruncatedSeries<Coeff> &a)
{
    if (!(a[0] == Coeff(Rational(1)))) {
        throw std::domain_error("log requires constant term 1");
    }
    TruncatedSeries<Coeff> g(a.order());
    for (int n = 1; n <= a.order(); ++n) {
        Coeff acc = a[n] * Rational(n);
        for (int i = 1; i < n; ++i) {
            if (!is_zero(g[i])) {
                acc -= g[i] * a[n - i] * Rational(i);
            }
        }
        g[n] = acc * Rational(1, n);
    }
    return g;
}

// Formal substitution outer(inner) by Horner's rule.
template <class Coeff>
TruncatedSeries<Coeff> compose(const TruncatedSeries<Rational> &outer, const TruncatedSeries<Coeff> &inner)
{
    if (!is_zero(inner[0])) {
        throw std::domain_error("compose requires an inner series with zero constant term");
    }
    const int ord = std::min(outer.order(), inner.order());
    auto result = TruncatedSeries<Coeff>::constant(Coeff(outer[ord]), ord);
    const auto in = inner.truncated(ord);
    for (int i = ord - 1; i >= 0; --i) {
        result = result * in;
        result[0] += Coeff(outer[i]);
    }
    return result;
}

// D = q d/dq.
template <class Coeff>
TruncatedSeries<Coeff> d_operator(const TruncatedSeries<Coeff> &a)
{
    TruncatedSeries<Coeff> r(a.order());
    for (int n = 1; n <= a.order(); ++n) {
        r[n] = a[n] * Rational(n);
    }
    return r;
}

template <class Coeff>
TruncatedSeries<Coeff> d_operator(const TruncatedSeries<Coeff> &a, unsigned times)
{
    auto r = a;
    for (unsigned i = 0; i < times; ++i) {
        r = d_operator(r);
    }
    return r;
}

using QSeries = TruncatedSeries<Rational>;

// q^0 + q^1 + ... + q^order.
QSeries geometric_series(int order);

// 1 / a; requires an invertible constant term.
QSeries inverse(const QSeries &a);

// a(q^factor), same order as a.
QSeries dilate(const QSeries &a, int factor);

// q^power * a, same order as a.
QSeries shift(const QSeries &a, int power);

// Series in X of 2 arcsin(X/2) = sum_n binom(2n,n) / (16^n (2n+1)) X^(2n+1).
QSeries arcsin2_series(int order);

// Series of 2 sin(y/2), the compositional inverse of arcsin2_series.
QSeries two_sin_half_series(int order);

std::string to_string(const QSeries &a, int max_terms = -1);

// Result of comparing two sides of a series identity.
struct IdentityReport
{
    std::string name;
    int order = 0;
    std::optional<int> first_mismatch;

    bool ok() const { return !first_mismatch.has_value(); }
};

std::optional<int> first_mismatch(const QSeries &lhs, const QSeries &rhs);
IdentityReport compare_series(std::string name, const QSeries &lhs, const QSeries &rhs);

// sum_{n=k}^{order} ((-1)^(n-k)/n) binom(2n, n-k) q^n / (1-q)^(2n), which
// collapses to q^k / k.
QSeries refinement_sum(int k, int order);
IdentityReport verify_refinement(int k, int order);

// -sum_{n>=1} ((-1)^n / n) binom(2n, n) X^n, equal to 2 log((1 + sqrt(1+4X))/2).
QSeries constant_term_series(int order);
IdentityReport verify_constant_term(int order);

} // namespace macmahon

#endif
