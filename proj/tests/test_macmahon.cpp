#include <doctest.h>

#include <macmahon/macmahon.hpp>

#include "oracles.hpp"

using namespace macmahon;

namespace {

MacMahonParams make_params(const oracle::ParamSet &p)
{
    return {ResidueClassSet(p.modulus, p.residues), p.eps > 0 ? Sign::Plus : Sign::Minus, p.k};
}

} // namespace

TEST_SUITE("macmahon")
{
    TEST_CASE("parameter validation")
    {
        CHECK_THROWS_AS(MacMahonParams(ResidueClassSet(1, {0}), Sign::Plus, 0), std::invalid_argument);
        CHECK_THROWS_AS(variant_params('Z', 1), std::invalid_argument);
        CHECK_THROWS_AS(macmahon_series(variant_params('A', 1), 0), std::invalid_argument);
        CHECK_THROWS_AS(macmahon_bruteforce(variant_params('A', 1), 0), std::invalid_argument);
    }

    TEST_CASE("k = 1 gives divisor sums")
    {
        const QSeries a1 = macmahon_series(variant_params('A', 1), 30);
        const QSeries c1 = macmahon_series(variant_params('C', 1), 30);
        for (long n = 1; n <= 30; ++n) {
            CHECK(a1[static_cast<int>(n)] == Rational(oracle::sigma(1, n)));
            CHECK(c1[static_cast<int>(n)] == Rational(oracle::divisor_sum(2, {1}, 1, 1, n)));
        }
    }

    TEST_CASE("small values")
    {
        const MacMahonParams a2 = variant_params('A', 2);
        const MacMahonParams c2 = variant_params('C', 2);
        const MacMahonParams level3(ResidueClassSet(3, {1, 2}), Sign::Plus, 2);
        CHECK(macmahon_bruteforce(a2, 4) == 3);
        CHECK(macmahon_bruteforce(a2, 5) == 9);
        CHECK(macmahon_bruteforce(c2, 3) == 0);
        CHECK(macmahon_bruteforce(c2, 9) == 18);
        CHECK(macmahon_bruteforce(level3, 3) == 1);
        CHECK(macmahon_coefficients(c2, 9)[9] == 18);
    }

    TEST_CASE("named variant signs")
    {
        for (char v : std::string("ACEG")) {
            CHECK(variant_sign(v, 3) == 1);
        }
        CHECK(variant_sign('B', 3) == -1);
        CHECK(variant_sign('B', 2) == 1);
        // B_1 = sum q^m / (1 + q^m)^2 starts with +q.
        CHECK(variant_series('B', 1, 5)[1] == 1);
        CHECK(variant_series('B', 1, 5)[2] == -1);
    }

    TEST_CASE("series, brute force and the dynamic-programming oracle agree")
    {
        for (const auto &p : oracle::random_params(31, 12, 6, 3)) {
            const MacMahonParams params = make_params(p);
            const auto series = macmahon_coefficients(params, 40);
            const auto dp = oracle::macmahon_dp(p.modulus, p.residues, p.eps, p.k, 40);
            for (long n = 1; n <= 40; ++n) {
                CHECK(series[static_cast<std::size_t>(n)] == dp[static_cast<std::size_t>(n)]);
                CHECK(macmahon_bruteforce(params, n) == dp[static_cast<std::size_t>(n)]);
            }
        }
    }

    TEST_CASE("support starts at the sum of the k smallest widths")
    {
        for (const auto &p : oracle::random_params(37, 12, 6, 4)) {
            const MacMahonParams params = make_params(p);
            const long start = minimal_support(params);
            if (start > 40) {
                continue;
            }
            const auto series = macmahon_coefficients(params, 40);
            for (long n = 0; n < start; ++n) {
                CHECK(series[static_cast<std::size_t>(n)] == 0);
            }
            CHECK(abs(series[static_cast<std::size_t>(start)]) == 1);
        }
        CHECK(minimal_support(variant_params('A', 3)) == 6);
        CHECK(minimal_support(variant_params('E', 2)) == 5);
    }

    TEST_CASE("main identity for the named variants")
    {
        for (char v : std::string("ABCDEFGH")) {
            for (int k = 1; k <= 3; ++k) {
                CHECK_MESSAGE(verify_variant_identity(v, k, 40).ok(), v, k);
            }
        }
        for (int k = 1; k <= 4; ++k) {
            CHECK(verify_main_identity(variant_params('A', k), 60).ok());
        }
    }

    TEST_CASE("main identity on random parameters")
    {
        for (const auto &p : oracle::random_params(41, 12, 6, 4)) {
            const auto report = verify_main_identity(make_params(p), 40);
            CHECK_MESSAGE(report.ok(), report.name);
        }
    }

    TEST_CASE("a perturbed side is reported at the perturbed power")
    {
        auto sides = main_identity_sides(variant_params('E', 2), 30);
        sides.lehmer[17] += 1;
        const auto report = compare_series("E_2", sides.direct, sides.lehmer);
        REQUIRE_FALSE(report.ok());
        CHECK(*report.first_mismatch == 17);
    }
}
