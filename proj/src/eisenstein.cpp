#include <macmahon/eisenstein.hpp>

#include <stdexcept>

namespace macmahon {

QSeries eisenstein_g(const ResidueClassSet &classes, Sign eps, int k, int order)
{
    if (k < 1) {
        throw std::invalid_argument("eisenstein_g needs weight k >= 1");
    }
    QSeries g(order);
    for (int n = 1; n <= order; ++n) {
        g[n] = divisor_sum(classes, eps, static_cast<unsigned>(k - 1), n);
    }
    return g;
}

QSeries eisenstein_g_level1(int k, int order) { return eisenstein_g(ResidueClassSet(1, {0}), Sign::Plus, k, order); }

QSeries eisenstein_g_level2(int k, int order) { return eisenstein_g(ResidueClassSet(2, {1}), Sign::Plus, k, order); }

QSeries eisenstein_e(int k, int order)
{
    if (k < 2 || k % 2 != 0) {
        throw std::invalid_argument("eisenstein_e needs an even weight k >= 2");
    }
    const Rational scale = Rational(-2 * k) / bernoulli(static_cast<unsigned>(k));
    QSeries e = eisenstein_g_level1(k, order) * scale;
    e[0] = 1;
    return e;
}

QSeries e2n(int modulus, int order)
{
    if (modulus < 1) {
        throw std::invalid_argument("e2n needs a positive modulus");
    }
    const QSeries e2 = eisenstein_e(2, order);
    return e2 - dilate(e2, modulus) * Rational(modulus);
}

QSeries coprime_g(int modulus, int k, int order)
{
    return eisenstein_g(ResidueClassSet::units(modulus), Sign::Plus, k, order);
}

QSeries eta_product(const EtaProductSpec &spec, int order)
{
    if (spec.leading_power < 0 || order < spec.leading_power) {
        throw std::invalid_argument("eta_product needs 0 <= leading_power <= order");
    }
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
        if (spec.factors[i].multiplier < 1) {
            throw std::invalid_argument("eta_product multipliers must be positive");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (spec.factors[i].multiplier == spec.factors[j].multiplier) {
                throw std::invalid_argument("eta_product multipliers must be distinct");
            }
        }
    }
    const int len = order - spec.leading_power;
    std::vector<BigInt> c(static_cast<std::size_t>(len) + 1, 0);
    c[0] = 1;
    for (const auto &[mult, exponent] : spec.factors) {
        for (int j = 1; mult * j <= len; ++j) {
            const int t = mult * j;
            if (exponent > 0) {
                for (int e = 0; e < exponent; ++e) {
                    for (int n = len; n >= t; --n) {
                        c[n] -= c[n - t];
                    }
                }
            } else {
                for (int e = 0; e < -exponent; ++e) {
                    for (int n = t; n <= len; ++n) {
                        c[n] += c[n - t];
                    }
                }
            }
        }
    }
    QSeries r(order);
    for (int n = 0; n <= len; ++n) {
        r[n + spec.leading_power] = c[n];
    }
    return r;
}

EtaProductSpec delta2_spec() { return {{{1, 8}, {2, 8}}, 1}; }

EtaProductSpec delta3_spec() { return {{{1, 6}, {3, 6}}, 1}; }

std::string to_string(DecompositionStatus s)
{
    switch (s) {
    case DecompositionStatus::ExactMatch:
        return "ExactMatch";
    case DecompositionStatus::Mismatch:
        return "Mismatch";
    case DecompositionStatus::Underdetermined:
        return "Underdetermined";
    }
    return "?";
}

DecompositionResult decompose_in_basis(const QSeries &target, std::span<const QSeries> basis, int probe)
{
    const std::size_t m = basis.size();
    if (m == 0) {
        throw std::invalid_argument("decompose_in_basis: empty basis");
    }
    if (probe < static_cast<int>(m)) {
        throw std::invalid_argument("decompose_in_basis: probe length " + std::to_string(probe) +
                                    " is smaller than the basis size " + std::to_string(m));
    }
    int order = target.order();
    for (const auto &b : basis) {
        order = std::min(order, b.order());
    }
    if (order + 1 < probe) {
        throw std::invalid_argument("decompose_in_basis: series order " + std::to_string(order) +
                                    " too small for probe length " + std::to_string(probe));
    }

    // Reduced row echelon form built one probed power at a time; the last
    // entry of each row is the right-hand side.
    struct PivotRow
    {
        std::size_t column;
        std::vector<Rational> row;
    };
    std::vector<PivotRow> pivots;
    DecompositionResult result;

    for (int p = 0; p < probe; ++p) {
        std::vector<Rational> row(m + 1);
        for (std::size_t i = 0; i < m; ++i) {
            row[i] = basis[i][p];
        }
        row[m] = target[p];
        for (const auto &pv : pivots) {
            if (!is_zero(row[pv.column])) {
                const Rational f = row[pv.column];
                for (std::size_t i = 0; i <= m; ++i) {
                    row[i] -= f * pv.row[i];
                }
            }
        }
        std::size_t lead = 0;
        while (lead < m && is_zero(row[lead])) {
            ++lead;
        }
        if (lead == m) {
            if (!is_zero(row[m])) {
                result.status = DecompositionStatus::Mismatch;
                result.mismatch_power = p;
                result.verified_order = p - 1;
                return result;
            }
            continue;
        }
        const Rational inv = 1 / row[lead];
        for (auto &x : row) {
            x *= inv;
        }
        for (auto &pv : pivots) {
            if (!is_zero(pv.row[lead])) {
                const Rational f = pv.row[lead];
                for (std::size_t i = 0; i <= m; ++i) {
                    pv.row[i] -= f * row[i];
                }
            }
        }
        pivots.push_back({lead, std::move(row)});
    }

    if (pivots.size() < m) {
        result.status = DecompositionStatus::Underdetermined;
        result.verified_order = probe - 1;
        return result;
    }

    result.coefficients.assign(m, Rational(0));
    for (const auto &pv : pivots) {
        result.coefficients[pv.column] = pv.row[m];
    }
    QSeries combination(order);
    for (std::size_t i = 0; i < m; ++i) {
        combination += basis[i].truncated(order) * result.coefficients[i];
    }
    if (auto bad = first_mismatch(target.truncated(order), combination)) {
        result.status = DecompositionStatus::Mismatch;
        result.mismatch_power = *bad;
        result.verified_order = *bad - 1;
    } else {
        result.status = DecompositionStatus::ExactMatch;
        result.verified_order = order;
    }
    return result;
}

namespace {

std::vector<BasisElement> modular_basis_level2(int weight, int order)
{
    switch (weight) {
    case 2:
        return {{"E_{2,2}", e2n(2, order)}};
    case 4:
        return {{"E_4", eisenstein_e(4, order)}, {"G_4^(2)", eisenstein_g_level2(4, order)}};
    case 6:
        return {{"E_6", eisenstein_e(6, order)}, {"G_6^(2)", eisenstein_g_level2(6, order)}};
    case 8:
        return {{"E_8", eisenstein_e(8, order)},
                {"G_8^(2)", eisenstein_g_level2(8, order)},
                {"Delta_2", eta_product(delta2_spec(), order)}};
    default:
        throw std::invalid_argument("no level 2 modular basis catalogued for weight " + std::to_string(weight));
    }
}

std::string d_prefix(int j)
{
    if (j == 0) {
        return "";
    }
    return j == 1 ? "D " : "D^" + std::to_string(j) + " ";
}

} // namespace

std::vector<BasisElement> level2_quasimodular_basis(int max_weight, int order)
{
    if (max_weight < 2 || max_weight % 2 != 0 || max_weight > 8) {
        throw std::invalid_argument("level 2 basis catalogued for even weights 2..8");
    }
    std::vector<BasisElement> basis;
    const QSeries g2 = eisenstein_g_level2(2, order);
    for (int w = max_weight; w >= 2; w -= 2) {
        for (int j = 0; j <= w / 2 - 1; ++j) {
            for (auto &el : modular_basis_level2(w - 2 * j, order)) {
                basis.push_back({d_prefix(j) + el.label, d_operator(el.series, static_cast<unsigned>(j))});
            }
        }
        basis.push_back({d_prefix(w / 2 - 1) + "G_2^(2)", d_operator(g2, static_cast<unsigned>(w / 2 - 1))});
    }
    return basis;
}

Rational mk_level2_explicit(int k, long n, const BigInt &delta2_coeff)
{
    const BigInt s1 = sigma_odd_cofactor(1, n);
    const BigInt N = n;
    switch (k) {
    case 1:
        return Rational(s1);
    case 2:
        return make_rational(sigma_odd_cofactor(3, n) - (3 * N - 2) * s1, 24);
    case 3: {
        const BigInt num = sigma_odd_cofactor(5, n) - 5 * (3 * N - 8) * sigma_odd_cofactor(3, n) +
                           2 * (15 * N * N - 60 * N + 32) * s1;
        return make_rational(num, 5760);
    }
    case 4: {
        const BigInt num = 3 * sigma_odd_cofactor(7, n) - 119 * (N - 6) * sigma_odd_cofactor(5, n) +
                           357 * (3 * N * N - 30 * N + 56) * sigma_odd_cofactor(3, n) -
                           51 * (35 * N * N * N - 420 * N * N + 1176 * N - 576) * s1 + 14 * delta2_coeff;
        return make_rational(num, 16450560);
    }
    default:
        throw std::invalid_argument("explicit level 2 formulas exist for k = 1..4");
    }
}

std::vector<IdentityReport> verify_ramanujan(int order)
{
    const QSeries e2 = eisenstein_e(2, order);
    const QSeries e4 = eisenstein_e(4, order);
    const QSeries e6 = eisenstein_e(6, order);
    return {
        compare_series("D E2 = (E2^2 - E4)/12", d_operator(e2), (e2 * e2 - e4) * Rational(1, 12)),
        compare_series("D E4 = (E2 E4 - E6)/3", d_operator(e4), (e2 * e4 - e6) * Rational(1, 3)),
        compare_series("D E6 = (E2 E6 - E4^2)/2", d_operator(e6), (e2 * e6 - e4 * e4) * Rational(1, 2)),
    };
}

IdentityReport verify_g_vs_e(int k, int order)
{
    const Rational scale = -bernoulli(static_cast<unsigned>(k)) / (2 * k);
    const QSeries rhs = (eisenstein_e(k, order) - QSeries::constant(1, order)) * scale;
    return compare_series("G_" + std::to_string(k) + " = -(B_k/2k)(E_k - 1)", eisenstein_g_level1(k, order), rhs);
}

IdentityReport verify_moebius(int modulus, int k, int order)
{
    if (modulus < 2) {
        throw std::invalid_argument("the Moebius form of G_k^(N) needs N >= 2");
    }
    const Rational scale = -bernoulli(static_cast<unsigned>(k)) / (2 * k);
    const QSeries ek = eisenstein_e(k, order);
    QSeries rhs(order);
    for (long l : divisors(modulus)) {
        const int mu = moebius(l);
        if (mu != 0) {
            rhs += dilate(ek, static_cast<int>(l)) * Rational(mu);
        }
    }
    return compare_series("G_" + std::to_string(k) + "^(" + std::to_string(modulus) + ") Moebius form",
                          coprime_g(modulus, k, order), rhs * scale);
}

IdentityReport verify_epsilon_relation(const ResidueClassSet &classes, int k, int order)
{
    const QSeries plus = eisenstein_g(classes, Sign::Plus, k, order);
    const QSeries rhs = dilate(plus, 2) * Rational(ipow(2, static_cast<unsigned long>(k))) - plus;
    return compare_series("G_{S,N,-1," + std::to_string(k) + "} for S = " + classes.to_string(),
                          eisenstein_g(classes, Sign::Minus, k, order), rhs);
}

IdentityReport verify_e2_dilation(int modulus, int order)
{
    const QSeries e2 = eisenstein_e(2, order);
    return compare_series("E2(q^" + std::to_string(modulus) + ") = (E2 - E_{2,N})/N", dilate(e2, modulus),
                          (e2 - e2n(modulus, order)) * Rational(1, modulus));
}

} // namespace macmahon
