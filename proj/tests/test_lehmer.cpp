#include <doctest.h>

#include <macmahon/eisenstein.hpp>
#include <macmahon/lehmer.hpp>
#include <macmahon/macmahon.hpp>

#include "oracles.hpp"

using namespace macmahon;

namespace {

const MultiPoly x2 = MultiPoly::variable(2);
const MultiPoly x4 = MultiPoly::variable(4);
const MultiPoly x6 = MultiPoly::variable(6);
const MultiPoly x8 = MultiPoly::variable(8);

MultiPoly c(long v) { return MultiPoly(v); }

// The printed forms, transcribed factor by factor.
std::vector<MultiPoly> printed_lambdas()
{
    const MultiPoly l1 = x2;
    const MultiPoly l2 = (c(6) * pow(x2, 2) + x2 - x4) * Rational(1, 12);
    const MultiPoly l3 =
        (c(60) * pow(x2, 3) + c(30) * pow(x2, 2) - c(2) * (c(15) * x4 - c(2)) * x2 - c(5) * x4 + x6) * Rational(1, 360);
    const MultiPoly l4 = (c(840) * pow(x2, 4) + c(840) * pow(x2, 3) - c(42) * (c(20) * x4 - c(7)) * pow(x2, 2) +
                          c(4) * (c(14) * x6 - c(105) * x4 + c(9)) * x2 + c(70) * pow(x4, 2) - c(49) * x4 +
                          c(14) * x6 - x8) *
                         Rational(1, 20160);
    return {l1, l2, l3, l4};
}

} // namespace

TEST_SUITE("multipoly")
{
    TEST_CASE("construction and invariants")
    {
        CHECK_THROWS_AS(MultiPoly::variable(3), std::invalid_argument);
        CHECK_THROWS_AS(MultiPoly::variable(0), std::invalid_argument);
        CHECK(is_zero(x2 - x2));
        CHECK((x2 + x4).terms().size() == 2);
        CHECK(MultiPoly(0).empty());
        CHECK(x6.max_variable() == 6);
        CHECK((x2 * x4 + c(3)).constant_term() == 3);
        CHECK((x2 * x2 * x4).total_degree() == 3);
    }

    TEST_CASE("ring laws")
    {
        const MultiPoly a = x2 * Rational(1, 3) + x4 - c(2);
        const MultiPoly b = x2 * x6 + Rational(5, 7);
        const MultiPoly d = x8 - x2 * x2;
        CHECK((a * b) * d == a * (b * d));
        CHECK(a * (b + d) == a * b + a * d);
        CHECK(a * b == b * a);
        CHECK(pow(a, 3) == a * a * a);
        CHECK(pow(a, 0) == c(1));
    }

    TEST_CASE("rendering")
    {
        CHECK((x2 * x2 * Rational(1, 2) + x2 * Rational(1, 12) - x4 * Rational(1, 12)).to_string() ==
              "1/2*x2^2 + 1/12*x2 - 1/12*x4");
        CHECK(MultiPoly(0).to_string() == "0");
        CHECK((c(2) * x2 - c(4)).to_normalized_string() == "2*x2 - 4");
    }

    TEST_CASE("variable scaling")
    {
        const MultiPoly p = x2 * x2 + x4;
        CHECK(p.scale_variables({Rational(2), Rational(3)}) == c(4) * x2 * x2 + c(3) * x4);
    }
}

TEST_SUITE("lehmer")
{
    TEST_CASE("Lambda_1..Lambda_4 match the printed polynomials")
    {
        const auto computed = lehmer_polynomials(4);
        const auto printed = printed_lambdas();
        REQUIRE(computed.size() == 4);
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(computed[i] == printed[i]);
        }
        CHECK(computed[0].to_normalized_string() == "x2");
        CHECK(computed[1].to_normalized_string() == "1/12*(6*x2^2 + x2 - x4)");
        CHECK(computed[2].to_normalized_string() == "1/360*(60*x2^3 + 30*x2^2 - 30*x2*x4 + 4*x2 - 5*x4 + x6)");
        CHECK(computed[3].to_normalized_string() ==
              "1/20160*(840*x2^4 + 840*x2^3 - 840*x2^2*x4 + 294*x2^2 - 420*x2*x4 + 56*x2*x6 + 70*x4^2 + 36*x2 - "
              "49*x4 + 14*x6 - x8)");
    }

    TEST_CASE("weights, leading term and variables")
    {
        const auto lambdas = lehmer_polynomials(8);
        for (int k = 1; k <= 8; ++k) {
            const MultiPoly &l = lambdas[static_cast<std::size_t>(k - 1)];
            CHECK(l.max_variable() <= static_cast<unsigned>(2 * k));
            CHECK(l.total_degree() == static_cast<unsigned>(k));
            int top_degree = 0;
            for (const auto &[mono, coeff] : l.terms()) {
                CHECK(weight(mono) <= static_cast<unsigned>(2 * k));
                top_degree += degree(mono) == static_cast<unsigned>(k);
            }
            CHECK(top_degree == 1);
            CHECK(l.coefficient(Monomial{static_cast<unsigned>(k)}) ==
                  Rational(1) / Rational(factorial(static_cast<unsigned long>(k))));
            CHECK(is_zero(l.constant_term()));
        }
    }

    TEST_CASE("log of the generating series returns the exponent")
    {
        const int kmax = 6;
        const auto lambdas = lehmer_polynomials(kmax);
        PolySeries gen = PolySeries::constant(MultiPoly(1), 2 * kmax);
        for (int k = 1; k <= kmax; ++k) {
            gen[2 * k] = lambdas[static_cast<std::size_t>(k - 1)];
        }
        CHECK(log(gen) == lehmer_exponent(kmax));
    }

    TEST_CASE("original Lehmer polynomials")
    {
        CHECK(omega_polynomial(1) == x2);
        const MultiPoly substituted = (c(6) * pow(x2 * Rational(-1, 6), 2) + x2 * Rational(-1, 6) - x4 * Rational(1, 30)) *
                                      Rational(1, 12);
        CHECK(omega_polynomial(2) == substituted * Rational(-360));
        CHECK(omega_polynomial(2) == c(-5) * x2 * x2 + c(5) * x2 + x4);
        for (int k = 1; k <= 4; ++k) {
            CHECK(is_zero(omega_polynomial(k).constant_term()));
        }
    }

    TEST_CASE("evaluation at series")
    {
        const int order = 40;
        const auto lambdas = lehmer_polynomials(2);
        const QSeries g2 = eisenstein_g_level2(2, order);
        CHECK(evaluate_at_series(lambdas[0], {{2, g2}}) == variant_series('C', 1, order));

        const auto direct = oracle::macmahon_dp(1, {0}, 1, 2, order);
        const QSeries a2 =
            evaluate_at_series(lambdas[1], {{2, eisenstein_g_level1(2, order)}, {4, eisenstein_g_level1(4, order)}});
        for (int n = 0; n <= order; ++n) {
            CHECK(a2[n] == Rational(direct[static_cast<std::size_t>(n)]));
        }

        const MultiPoly p = x2 * x4 + c(7);
        CHECK(evaluate_at_series(p, {{2, QSeries(10)}, {4, QSeries(10)}}) == QSeries::constant(7, 10));
        CHECK_THROWS_AS(evaluate_at_series(p, {{2, QSeries(10)}}), std::invalid_argument);
        CHECK_THROWS_AS(evaluate_at_series(p, {{2, QSeries(10)}, {4, QSeries(9)}}), std::invalid_argument);
    }
}
