#include <doctest.h>

#include <macmahon/detector.hpp>
#include <macmahon/numtheory.hpp>

#include "oracles.hpp"

using namespace macmahon;

namespace {

const ExpressionId level1_quadratic{ExpressionKind::Level1Quadratic};
const ExpressionId level1_cubic{ExpressionKind::Level1Cubic};
const ExpressionId level2_quadratic{ExpressionKind::Level2Quadratic};
const ExpressionId level2_quartic{ExpressionKind::Level2Quartic};
const ExpressionId level3_quadratic{ExpressionKind::Level3Quadratic};
const ExpressionId lattice_1mod4{ExpressionKind::Lattice1Mod4};
const ExpressionId lattice_3mod4{ExpressionKind::Lattice3Mod4};

std::vector<ExpressionId> all_fixed()
{
    return {level1_quadratic, level1_cubic, level2_quadratic, level2_quartic,
            level3_quadratic, lattice_1mod4, lattice_3mod4};
}

// Trichotomy restated from primality alone, independent of the library.
Sign3 oracle_sign(const ExpressionId &id, long n, const std::vector<bool> &prime)
{
    const bool p = prime[static_cast<std::size_t>(n)];
    auto power_of = [](long m, long base) {
        while (m % base == 0) {
            m /= base;
        }
        return m == 1;
    };
    switch (id.kind) {
    case ExpressionKind::Level1Quadratic:
    case ExpressionKind::Level1Cubic:
        return p ? Sign3::Zero : Sign3::Positive;
    case ExpressionKind::Level2Quadratic:
    case ExpressionKind::Level2Quartic:
        return p && n != 2 ? Sign3::Zero : (power_of(n, 2) ? Sign3::Negative : Sign3::Positive);
    case ExpressionKind::Level3Quadratic:
        return p && n != 3 ? Sign3::Zero : (power_of(n, 3) ? Sign3::Negative : Sign3::Positive);
    case ExpressionKind::Lattice1Mod4:
    case ExpressionKind::Lattice3Mod4: {
        const long a = id.kind == ExpressionKind::Lattice1Mod4 ? 1 : 3;
        return n % 4 != a ? Sign3::Negative : (p ? Sign3::Zero : Sign3::Positive);
    }
    case ExpressionKind::LelievreGeneral: {
        if (p && id.modulus % n != 0) {
            return Sign3::Zero;
        }
        long m = n;
        for (long q = 2; q <= m; ++q) {
            if (m % q == 0) {
                if (id.modulus % q != 0) {
                    return Sign3::Positive;
                }
                while (m % q == 0) {
                    m /= q;
                }
            }
        }
        return Sign3::Negative;
    }
    }
    return Sign3::Zero;
}

// Level 1 and level 2 quadratic expressions rebuilt from the DP oracle.
mpz_class oracle_quadratic(const ExpressionId &id, long n)
{
    const bool level2 = id.kind == ExpressionKind::Level2Quadratic;
    const long modulus = level2 ? 2 : (id.kind == ExpressionKind::Level3Quadratic ? 3 : 1);
    const std::vector<long> residues = level2 ? std::vector<long>{1} : (modulus == 3 ? std::vector<long>{1, 2} : std::vector<long>{0});
    const int order = static_cast<int>(n);
    const mpz_class m1 = oracle::macmahon_dp(modulus, residues, 1, 1, order)[static_cast<std::size_t>(n)];
    const mpz_class m2 = oracle::macmahon_dp(modulus, residues, 1, 2, order)[static_cast<std::size_t>(n)];
    const mpz_class N = n;
    if (level2) {
        return (N * N - 4 * N + 3) * m1 - 24 * m2;
    }
    return (N * N - 3 * N + 2) * m1 - (modulus == 3 ? 12 : 8) * m2;
}

} // namespace

TEST_SUITE("detector")
{
    TEST_CASE("reference values")
    {
        CHECK(evaluate_expression(level2_quadratic, 2).value == -2);
        CHECK(evaluate_expression(level2_quadratic, 3).value == 0);
        CHECK(evaluate_expression(level2_quadratic, 9).value == 192);
        CHECK(evaluate_expression(level1_quadratic, 4).value == 18);
        CHECK(evaluate_expression(level1_quadratic, 5).value == 0);
        CHECK(evaluate_expression(level3_quadratic, 3).value == -6);
        const std::vector<long> level3 = {0, -6, 18, 0, 36, 0, 270, -72, 504, 0, 822};
        for (long n = 2; n <= 12; ++n) {
            CHECK(evaluate_expression(level3_quadratic, n).value == level3[static_cast<std::size_t>(n - 2)]);
        }
        CHECK(lelievre_coeff(1, 1, 3, 4) == 90);
        CHECK(lelievre_coeff(2, 1, 3, 2) == -6);
        CHECK(lelievre_coeff(1, 1, 3, 7) == 0);
        CHECK(lelievre_coeff(2, 1, 3, 8) == -504);
        CHECK(lelievre_coeff(2, 1, 3, 12) == 4368);
    }

    TEST_CASE("quadratic expressions against the DP oracle")
    {
        for (const auto &id : {level1_quadratic, level2_quadratic, level3_quadratic}) {
            for (long n = 2; n <= 30; ++n) {
                CHECK(evaluate_expression(id, n).value == oracle_quadratic(id, n));
            }
        }
    }

    TEST_CASE("lattice expression equals its divisor-sum form")
    {
        for (long a : {1L, 3L}) {
            const ExpressionId id = a == 1 ? lattice_1mod4 : lattice_3mod4;
            const auto report = detect_range(id, 2, 300);
            for (const auto &row : report.rows) {
                const long n = row.n;
                const mpz_class gated = n % 4 == a ? oracle::sigma(1, n) : mpz_class(0);
                const mpz_class s3 = oracle::sigma(3, n);
                CHECK(row.value == 240 * ((n * n - n + 1) * gated - s3));
                // The expression has the sign of (n^3+1) sigma - (n+1) sigma_3.
                const mpz_class proof = (mpz_class(n) * n * n + 1) * gated - (n + 1) * s3;
                CHECK(sgn(row.value) == sgn(proof));
            }
        }
    }

    TEST_CASE("formula and brute-force backends agree")
    {
        for (const auto &id : all_fixed()) {
            const long top = id.kind == ExpressionKind::Level1Cubic || id.kind == ExpressionKind::Level2Quartic ? 40 : 60;
            const auto formula = detect_range(id, 2, top, Backend::Formula);
            const auto brute = detect_range(id, 2, top, Backend::BruteForce);
            REQUIRE(formula.rows.size() == brute.rows.size());
            for (std::size_t i = 0; i < formula.rows.size(); ++i) {
                CHECK_MESSAGE(formula.rows[i].value == brute.rows[i].value, to_string(id), " n=", formula.rows[i].n);
            }
        }
        for (long N : {1L, 2L, 6L}) {
            const ExpressionId id = lelievre_id(N, 1, 3);
            const auto formula = detect_range(id, 2, 60, Backend::Formula);
            const auto brute = detect_range(id, 2, 60, Backend::BruteForce);
            for (std::size_t i = 0; i < formula.rows.size(); ++i) {
                CHECK(formula.rows[i].value == brute.rows[i].value);
            }
        }
    }

    TEST_CASE("sign trichotomies on a range")
    {
        const auto prime = oracle::sieve(400);
        std::vector<ExpressionId> ids = all_fixed();
        for (long N : {1L, 2L, 3L, 4L, 6L}) {
            ids.push_back(lelievre_id(N, 1, 3));
            ids.push_back(lelievre_id(N, 3, 5));
        }
        for (const auto &id : ids) {
            const auto report = detect_range(id, 2, 400);
            CHECK_MESSAGE(report.violations.empty(), to_string(id));
            for (const auto &row : report.rows) {
                CHECK(row.outcome.value == oracle_sign(id, row.n, prime));
                CHECK(row.expected == oracle_sign(id, row.n, prime));
            }
        }
    }

    TEST_CASE("single row ranges and labels")
    {
        const auto report = detect_range(level2_quadratic, 2, 2);
        REQUIRE(report.rows.size() == 1);
        CHECK(report.rows[0].value == -2);
        CHECK(report.rows[0].outcome.label == "power of 2");
        CHECK(evaluate_expression(level1_quadratic, 7).outcome.label == "prime");
        CHECK(classify_lelievre(2, 1, 3, 8).value == Sign3::Negative);
    }

    TEST_CASE("parsing and argument errors")
    {
        for (const auto &id : all_fixed()) {
            CHECK(parse_expression(to_string(id)) == id);
        }
        CHECK(parse_expression("lelievre:6:1:5") == lelievre_id(6, 1, 5));
        CHECK_THROWS_AS(parse_expression("level4-quadratic"), std::invalid_argument);
        CHECK_THROWS_AS(parse_expression("lelievre:6:3:1"), std::invalid_argument);
        CHECK_THROWS_AS(parse_expression("lelievre:x:1:3"), std::invalid_argument);
        CHECK_THROWS_AS(lelievre_id(0, 1, 3), std::invalid_argument);
        CHECK_THROWS_AS(evaluate_expression(level1_quadratic, 1), std::invalid_argument);
        CHECK_THROWS_AS(detect_range(level1_quadratic, 1, 10), std::invalid_argument);
        CHECK_THROWS_AS(detect_range(level1_quadratic, 10, 5), std::invalid_argument);
        CHECK(parse_backend("brute-force") == Backend::BruteForce);
        CHECK_THROWS_AS(parse_backend("fast"), std::invalid_argument);
    }

    TEST_CASE("factorizations of the level 2 criteria")
    {
        CHECK(verify_f13_factorization(60).ok());
        CHECK(verify_f15_factorization(60).ok());
    }
}
