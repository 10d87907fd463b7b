#include <doctest.h>

#include <map>
#include <numeric>

#include <macmahon/eisenstein.hpp>
#include <macmahon/macmahon.hpp>

#include "oracles.hpp"

using namespace macmahon;

namespace {

// q^lead prod_j prod (1 - q^(m j))^e by repeated multiplication with
// (1 - q^step), integer arithmetic only.
std::vector<mpz_class> eta_oracle(std::vector<std::pair<int, int>> factors, int lead, int order)
{
    std::vector<mpz_class> p(static_cast<std::size_t>(order) + 1, 0);
    p[0] = 1;
    const int body = order - lead;
    for (const auto &[m, e] : factors) {
        for (int step = m; step <= body; step += m) {
            for (int rep = 0; rep < e; ++rep) {
                for (int n = body; n >= step; --n) {
                    p[static_cast<std::size_t>(n)] -= p[static_cast<std::size_t>(n - step)];
                }
            }
        }
    }
    std::vector<mpz_class> out(static_cast<std::size_t>(order) + 1, 0);
    for (int n = 0; n + lead <= order; ++n) {
        out[static_cast<std::size_t>(n + lead)] = p[static_cast<std::size_t>(n)];
    }
    return out;
}

std::vector<QSeries> series_of(const std::vector<BasisElement> &basis)
{
    std::vector<QSeries> out;
    for (const auto &b : basis) {
        out.push_back(b.series);
    }
    return out;
}

} // namespace

TEST_SUITE("eisenstein")
{
    TEST_CASE("G series")
    {
        const QSeries g2 = eisenstein_g_level1(2, 10);
        CHECK(g2[0] == 0);
        CHECK(g2[1] == 1);
        CHECK(g2[2] == 3);
        CHECK(g2[3] == 4);
        CHECK(g2[4] == 7);
        CHECK(eisenstein_g_level2(2, 10)[4] == 4);
        for (int N = 1; N <= 6; ++N) {
            const QSeries g = coprime_g(N, 4, 40);
            for (long n = 1; n <= 40; ++n) {
                mpz_class expected = 0;
                for (long d = 1; d <= n; ++d) {
                    if (n % d == 0 && std::gcd(n / d, static_cast<long>(N)) == 1) {
                        expected += d * d * d;
                    }
                }
                CHECK(g[static_cast<int>(n)] == Rational(expected));
            }
        }
        CHECK(coprime_g(1, 6, 30) == eisenstein_g_level1(6, 30));
        CHECK(coprime_g(2, 6, 30) == eisenstein_g_level2(6, 30));
    }

    TEST_CASE("normalized Eisenstein series")
    {
        const QSeries e2 = eisenstein_e(2, 5);
        CHECK(e2[0] == 1);
        CHECK(e2[1] == -24);
        CHECK(e2[2] == -72);
        CHECK(eisenstein_e(4, 5)[1] == 240);
        CHECK(eisenstein_e(6, 5)[1] == -504);
        CHECK_THROWS_AS(eisenstein_e(3, 5), std::invalid_argument);
        for (int k : {2, 4, 6, 8}) {
            CHECK(verify_g_vs_e(k, 60).ok());
        }
    }

    TEST_CASE("Ramanujan identities to order 100")
    {
        for (const auto &r : verify_ramanujan(100)) {
            CHECK_MESSAGE(r.ok(), r.name);
        }
    }

    TEST_CASE("epsilon relation")
    {
        for (const auto &p : oracle::random_params(43, 10, 6, 4)) {
            const auto r = verify_epsilon_relation(ResidueClassSet(p.modulus, p.residues), 2 * p.k, 60);
            CHECK_MESSAGE(r.ok(), r.name);
        }
    }

    TEST_CASE("Moebius form of the coprime series")
    {
        for (int N : {2, 3, 6}) {
            for (int k : {4, 6}) {
                CHECK(verify_moebius(N, k, 60).ok());
            }
        }
        CHECK_THROWS_AS(verify_moebius(1, 4, 10), std::invalid_argument);
    }

    TEST_CASE("E2 dilation")
    {
        for (int N = 1; N <= 6; ++N) {
            CHECK(verify_e2_dilation(N, 60).ok());
        }
    }

    TEST_CASE("eta products")
    {
        const QSeries d2 = eta_product(delta2_spec(), 40);
        const QSeries d3 = eta_product(delta3_spec(), 40);
        const auto o2 = eta_oracle({{1, 8}, {2, 8}}, 1, 40);
        const auto o3 = eta_oracle({{1, 6}, {3, 6}}, 1, 40);
        for (int n = 0; n <= 40; ++n) {
            CHECK(d2[n] == Rational(o2[static_cast<std::size_t>(n)]));
            CHECK(d3[n] == Rational(o3[static_cast<std::size_t>(n)]));
        }
        const std::vector<long> delta2 = {0, 1, -8, 12, 64, -210, -96, 1016, -512, -2043};
        const std::vector<long> delta3 = {0, 1, -6, 9, 4, 6, -54, -40, 168, 81};
        for (int n = 0; n < 10; ++n) {
            CHECK(d2[n] == delta2[static_cast<std::size_t>(n)]);
            CHECK(d3[n] == delta3[static_cast<std::size_t>(n)]);
        }
        // A negative exponent inverts the product.
        const QSeries inv = eta_product({{{1, -1}}, 0}, 30);
        CHECK(inv * eta_product({{{1, 1}}, 0}, 30) == QSeries::constant(1, 30));
        CHECK_THROWS_AS(eta_product({{{1, 1}, {1, 2}}, 0}, 10), std::invalid_argument);
        CHECK_THROWS_AS(eta_product({{{0, 1}}, 0}, 10), std::invalid_argument);
    }

    TEST_CASE("C_2 in the weight 4 basis")
    {
        const auto basis = level2_quasimodular_basis(4, 40);
        std::vector<std::string> labels;
        for (const auto &b : basis) {
            labels.push_back(b.label);
        }
        CHECK(labels == std::vector<std::string>{"E_4", "G_4^(2)", "D E_{2,2}", "D G_2^(2)", "E_{2,2}", "G_2^(2)"});
        const auto series = series_of(basis);
        const auto result = decompose_in_basis(variant_series('C', 2, 40), series, default_probe(series.size()));
        REQUIRE(result.status == DecompositionStatus::ExactMatch);
        CHECK(result.verified_order == 40);
        const std::vector<Rational> expected = {0, Rational(1, 24), 0, Rational(-1, 8), 0, Rational(1, 12)};
        CHECK(result.coefficients == expected);
    }

    TEST_CASE("C_3 and C_4")
    {
        const auto c3 = decompose_level2_macmahon(3, 50);
        REQUIRE(c3.result.status == DecompositionStatus::ExactMatch);
        std::map<std::string, Rational> want3 = {{"G_6^(2)", 1},       {"D G_4^(2)", -15},   {"G_4^(2)", 40},
                                                 {"D^2 G_2^(2)", 30},  {"D G_2^(2)", -120}, {"G_2^(2)", 64}};
        for (std::size_t i = 0; i < c3.labels.size(); ++i) {
            const Rational expected = want3.count(c3.labels[i]) ? want3[c3.labels[i]] / 5760 : Rational(0);
            CHECK_MESSAGE(c3.result.coefficients[i] == expected, c3.labels[i]);
        }

        // 3G_8 - 119(D-6)G_6 + 357(3D^2-30D+56)G_4 - 51(35D^3-420D^2+1176D-576)G_2 + 14 Delta_2, over 16450560.
        const auto c4 = decompose_level2_macmahon(4, 50);
        REQUIRE(c4.result.status == DecompositionStatus::ExactMatch);
        std::map<std::string, Rational> want4 = {
            {"G_8^(2)", 3},           {"D G_6^(2)", -119},        {"G_6^(2)", 714},
            {"D^2 G_4^(2)", 1071},    {"D G_4^(2)", -10710},      {"G_4^(2)", 19992},
            {"D^3 G_2^(2)", -1785},   {"D^2 G_2^(2)", 21420},     {"D G_2^(2)", -59976},
            {"G_2^(2)", 29376},       {"Delta_2", 14}};
        for (std::size_t i = 0; i < c4.labels.size(); ++i) {
            const Rational expected = want4.count(c4.labels[i]) ? want4[c4.labels[i]] / 16450560 : Rational(0);
            CHECK_MESSAGE(c4.result.coefficients[i] == expected, c4.labels[i]);
        }
    }

    TEST_CASE("decomposition outcomes")
    {
        const auto series = series_of(level2_quasimodular_basis(6, 40));
        for (std::size_t i = 0; i < series.size(); ++i) {
            const auto r = decompose_in_basis(series[i], series, default_probe(series.size()));
            REQUIRE(r.status == DecompositionStatus::ExactMatch);
            for (std::size_t j = 0; j < series.size(); ++j) {
                CHECK(r.coefficients[j] == (i == j ? 1 : 0));
            }
        }

        // Round trip on an arbitrary combination.
        QSeries target(40);
        for (std::size_t i = 0; i < series.size(); ++i) {
            target += series[i] * make_rational(static_cast<long>(i) - 3, 7);
        }
        const auto r = decompose_in_basis(target, series, default_probe(series.size()));
        REQUIRE(r.status == DecompositionStatus::ExactMatch);
        QSeries rebuilt(40);
        for (std::size_t i = 0; i < series.size(); ++i) {
            rebuilt += series[i] * r.coefficients[i];
        }
        CHECK(rebuilt == target);

        // Delta_2 is outside the span of weights <= 6.
        const auto cusp = decompose_in_basis(eta_product(delta2_spec(), 40), series, default_probe(series.size()));
        CHECK(cusp.status == DecompositionStatus::Mismatch);
        CHECK(cusp.mismatch_power.has_value());

        std::vector<QSeries> doubled = {series[0], series[0]};
        CHECK(decompose_in_basis(series[0], doubled, 6).status == DecompositionStatus::Underdetermined);
        CHECK_THROWS_AS(decompose_in_basis(series[0], series, 2), std::invalid_argument);
    }

    TEST_CASE("explicit level 2 formulas against brute force")
    {
        const QSeries d2 = eta_product(delta2_spec(), 50);
        for (int k = 1; k <= 4; ++k) {
            const MacMahonParams p = variant_params('C', k);
            for (long n = 1; n <= 50; ++n) {
                const Rational formula = mk_level2_explicit(k, n, d2[static_cast<int>(n)].get_num());
                CHECK(formula == Rational(macmahon_bruteforce(p, n)));
            }
        }
        CHECK_THROWS_AS(mk_level2_explicit(5, 3), std::invalid_argument);
    }
}
