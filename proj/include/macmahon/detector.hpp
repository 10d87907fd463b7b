#ifndef MACMAHON_DETECTOR_HPP
#define MACMAHON_DETECTOR_HPP

#include <map>
#include <string>
#include <vector>

#include <macmahon/qseries.hpp>

namespace macmahon {

enum class ExpressionKind {
    Level1Quadratic,
    Level1Cubic,
    Level2Quadratic,
    Level2Quartic,
    Level3Quadratic,
    Lattice1Mod4,
    Lattice3Mod4,
    LelievreGeneral,
};

// A prime-detecting expression. modulus, k and l are only meaningful for
// LelievreGeneral.
struct ExpressionId
{
    ExpressionKind kind = ExpressionKind::Level1Quadratic;
    long modulus = 1;
    int k = 1;
    int l = 3;

    friend bool operator==(const ExpressionId &, const ExpressionId &) = default;
};

ExpressionId lelievre_id(long modulus, int k, int l);

// Names: level1-quadratic, level1-cubic, level2-quadratic, level2-quartic,
// level3-quadratic, lattice-1mod4, lattice-3mod4, lelievre:N:k:l.
ExpressionId parse_expression(const std::string &text);
std::string to_string(const ExpressionId &id);
std::vector<std::string> expression_names();

enum class Sign3 { Zero, Negative, Positive };
std::string to_string(Sign3 s);
Sign3 sign_of(const BigInt &v);

struct SignOutcome
{
    Sign3 value;
    // What the theorem says this sign means for n, e.g. "odd prime".
    std::string label;
};

enum class Backend { Formula, BruteForce };
Backend parse_backend(const std::string &text);
std::string to_string(Backend b);

// sum over d | n with gcd(n/d, N) = 1 of (n^l + 1) d^k - (n^k + 1) d^l.
BigInt lelievre_coeff(long modulus, int k, int l, long n);
SignOutcome classify_lelievre(long modulus, int k, int l, long n);

// f_{k,l}^{(N)} = (D^l + 1) G_{k+1}^{(N)} - (D^k + 1) G_{l+1}^{(N)}.
QSeries lelievre_series(long modulus, int k, int l, int order);

// The sign the theorem predicts at n, from primality and prime-power tests.
Sign3 expected_sign(const ExpressionId &id, long n);
std::string outcome_label(const ExpressionId &id, Sign3 s);

// Values of one expression for 2 <= n <= max_n. Construction fills whatever
// tables the backend needs; value() is then safe to call concurrently.
class ExpressionEvaluator
{
public:
    ExpressionEvaluator(const ExpressionId &id, Backend backend, long max_n);

    BigInt value(long n) const;
    const ExpressionId &id() const { return m_id; }

private:
    BigInt level1(long n) const;
    BigInt level2(long n) const;
    BigInt level3(long n) const;
    BigInt lattice(long n) const;
    BigInt lelievre(long n) const;

    // M_j(n) for the expression's MacMahon family, j = 1..3.
    BigInt mk(int j, long n) const;

    ExpressionId m_id;
    Backend m_backend;
    long m_max_n;
    std::map<int, std::vector<BigInt>> m_mk_tables;
    std::vector<std::int64_t> m_e8_counts;
    std::vector<std::int64_t> m_shifted_counts;
    std::vector<BigInt> m_lelievre;
};

struct Evaluation
{
    BigInt value;
    SignOutcome outcome;
};

Evaluation evaluate_expression(const ExpressionId &id, long n, Backend backend = Backend::Formula);

struct DetectionRow
{
    long n;
    BigInt value;
    SignOutcome outcome;
    Sign3 expected;
    bool consistent;
};

struct DetectionReport
{
    ExpressionId id;
    Backend backend;
    long lo;
    long hi;
    std::vector<DetectionRow> rows;
    std::vector<long> violations;
};

// Rows in increasing n; the range is split across `workers` threads.
DetectionReport detect_range(const ExpressionId &id, long lo, long hi, Backend backend = Backend::Formula,
                             unsigned workers = 0);

// f_{1,3}^{(2)} = (D+1)((D^2-4D+3) C_1 - 24 C_2) and
// f_{1,5}^{(2)} = (D+1)((D^4-D^3-14D^2+29D-15) C_1 - 120(3D-8) C_2 - 5760 C_3).
IdentityReport verify_f13_factorization(int order);
IdentityReport verify_f15_factorization(int order);

} // namespace macmahon

#endif
