#include <macmahon/qseries.hpp>

#include <sstream>

namespace macmahon {

BigInt binomial(unsigned long n, unsigned long k)
{
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

BigInt factorial(unsigned long n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

BigInt ipow(const BigInt &base, unsigned long exp)
{
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
    return r;
}

BigInt ipow(long base, unsigned long exp) { return ipow(BigInt(base), exp); }

QSeries geometric_series(int order)
{
    QSeries s(order);
    for (int n = 0; n <= order; ++n) {
        s[n] = 1;
    }
    return s;
}

QSeries inverse(const QSeries &a)
{
    if (is_zero(a[0])) {
        throw std::domain_error("series with zero constant term is not invertible");
    }
    const Rational inv0 = 1 / a[0];
    QSeries r(a.order());
    r[0] = inv0;
    for (int n = 1; n <= a.order(); ++n) {
        Rational acc = 0;
        for (int i = 1; i <= n; ++i) {
            if (!is_zero(a[i])) {
                acc += a[i] * r[n - i];
            }
        }
        r[n] = -acc * inv0;
    }
    return r;
}

QSeries dilate(const QSeries &a, int factor)
{
    if (factor < 1) {
        throw std::invalid_argument("dilation factor must be positive");
    }
    QSeries r(a.order());
    for (int n = 0; n * factor <= a.order(); ++n) {
        r[n * factor] = a[n];
    }
    return r;
}

QSeries shift(const QSeries &a, int power)
{
    if (power < 0) {
        throw std::invalid_argument("negative shift");
    }
    QSeries r(a.order());
    for (int n = 0; n + power <= a.order(); ++n) {
        r[n + power] = a[n];
    }
    return r;
}

QSeries arcsin2_series(int order)
{
    if (order < 1) {
        throw std::invalid_argument("arcsin series needs order >= 1");
    }
    QSeries s(order);
    for (int n = 0; 2 * n + 1 <= order; ++n) {
        const BigInt den = ipow(16, static_cast<unsigned long>(n)) * (2 * n + 1);
        s[2 * n + 1] = make_rational(binomial(2 * n, n), den);
    }
    return s;
}

QSeries two_sin_half_series(int order)
{
    QSeries s(order);
    for (int n = 0; 2 * n + 1 <= order; ++n) {
        const BigInt den = ipow(4, static_cast<unsigned long>(n)) * factorial(2 * n + 1);
        s[2 * n + 1] = make_rational(n % 2 == 0 ? BigInt(1) : BigInt(-1), den);
    }
    return s;
}

std::string to_string(const QSeries &a, int max_terms)
{
    std::ostringstream os;
    int printed = 0;
    for (int n = 0; n <= a.order(); ++n) {
        if (is_zero(a[n])) {
            continue;
        }
        if (max_terms >= 0 && printed == max_terms) {
            break;
        }
        const Rational &c = a[n];
        if (printed == 0) {
            if (sgn(c) < 0) {
                os << "-";
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        const Rational mag = abs(c);
        if (n == 0 || mag != 1) {
            os << mag.get_str();
        }
        if (n >= 1) {
            os << (mag != 1 ? "*q" : "q");
            if (n > 1) {
                os << "^" << n;
            }
        }
        ++printed;
    }
    if (printed == 0) {
        os << "0";
    }
    os << " + O(q^" << a.order() + 1 << ")";
    return os.str();
}

std::optional<int> first_mismatch(const QSeries &lhs, const QSeries &rhs)
{
    const int ord = std::min(lhs.order(), rhs.order());
    for (int n = 0; n <= ord; ++n) {
        if (lhs[n] != rhs[n]) {
            return n;
        }
    }
    return std::nullopt;
}

IdentityReport compare_series(std::string name, const QSeries &lhs, const QSeries &rhs)
{
    return {std::move(name), std::min(lhs.order(), rhs.order()), first_mismatch(lhs, rhs)};
}

QSeries refinement_sum(int k, int order)
{
    if (k < 1) {
        throw std::invalid_argument("refinement identity needs k >= 1");
    }
    const QSeries one_minus_q = QSeries::constant(1, order) - QSeries::monomial(1, 1, order);
    const QSeries inv_sq = inverse(one_minus_q * one_minus_q);
    QSeries total(order);
    // q^n / (1-q)^(2n) starts at q^n, so terms with n > order vanish.
    QSeries term = pow(shift(inv_sq, 1), static_cast<unsigned>(k));
    const QSeries step = shift(inv_sq, 1);
    for (int n = k; n <= order; ++n) {
        Rational c = make_rational(binomial(2 * n, n - k), n);
        if ((n - k) % 2 != 0) {
            c = -c;
        }
        total += term * c;
        term *= step;
    }
    return total;
}

IdentityReport verify_refinement(int k, int order)
{
    return compare_series("refinement k=" + std::to_string(k), refinement_sum(k, order),
                          QSeries::monomial(k, Rational(1, k), order));
}

QSeries constant_term_series(int order)
{
    QSeries s(order);
    for (int n = 1; n <= order; ++n) {
        Rational c = make_rational(binomial(2 * n, n), n);
        s[n] = (n % 2 == 0) ? Rational(-c) : c;
    }
    return s;
}

IdentityReport verify_constant_term(int order)
{
    // exp(half of the series) is (1 + sqrt(1+4X))/2, the root g of g^2 - g = X.
    const QSeries g = exp(constant_term_series(order) * Rational(1, 2));
    return compare_series("constant term", g * g - g, QSeries::monomial(1, 1, order));
}

} // namespace macmahon
