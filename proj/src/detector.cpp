#include <macmahon/detector.hpp>

#include <numeric>
#include <stdexcept>

#include <macmahon/eisenstein.hpp>
#include <macmahon/lattice.hpp>
#include <macmahon/macmahon.hpp>
#include <macmahon/numtheory.hpp>
#include <macmahon/parallel.hpp>

namespace macmahon {

namespace {

const std::vector<std::pair<ExpressionKind, std::string>> &kind_names()
{
    static const std::vector<std::pair<ExpressionKind, std::string>> names = {
        {ExpressionKind::Level1Quadratic, "level1-quadratic"}, {ExpressionKind::Level1Cubic, "level1-cubic"},
        {ExpressionKind::Level2Quadratic, "level2-quadratic"}, {ExpressionKind::Level2Quartic, "level2-quartic"},
        {ExpressionKind::Level3Quadratic, "level3-quadratic"}, {ExpressionKind::Lattice1Mod4, "lattice-1mod4"},
        {ExpressionKind::Lattice3Mod4, "lattice-3mod4"},
    };
    return names;
}

// every prime factor of n divides N
bool factors_divide(long n, long modulus)
{
    for (long p : prime_factors(n)) {
        if (modulus % p != 0) {
            return false;
        }
    }
    return true;
}

// sum_j c_j D^j applied to s, c_0 first.
QSeries apply_d_poly(const QSeries &s, const std::vector<long> &coeffs)
{
    QSeries out(s.order());
    QSeries term = s;
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (j > 0) {
            term = d_operator(term);
        }
        out += term * Rational(coeffs[j]);
    }
    return out;
}

BigInt to_integer(const Rational &r)
{
    if (!is_integer(r)) {
        throw std::logic_error("expression value is not an integer: " + r.get_str());
    }
    return r.get_num();
}

// Parameters of M_j, M_j^(2) or M_j^(3) according to the expression's level.
MacMahonParams family_params(ExpressionKind kind, int j)
{
    switch (kind) {
    case ExpressionKind::Level2Quadratic:
    case ExpressionKind::Level2Quartic:
        return variant_params('C', j);
    case ExpressionKind::Level3Quadratic:
        return {ResidueClassSet(3, {1, 2}), Sign::Plus, j};
    default:
        return variant_params('A', j);
    }
}

} // namespace

ExpressionId lelievre_id(long modulus, int k, int l)
{
    if (modulus < 1 || k < 1 || l <= k) {
        throw std::invalid_argument("Lelievre criteria need N >= 1 and l > k >= 1");
    }
    return {ExpressionKind::LelievreGeneral, modulus, k, l};
}

ExpressionId parse_expression(const std::string &text)
{
    for (const auto &[kind, name] : kind_names()) {
        if (text == name) {
            return {kind};
        }
    }
    const std::string prefix = "lelievre:";
    if (text.rfind(prefix, 0) == 0) {
        long parts[3];
        std::size_t pos = prefix.size();
        for (int i = 0; i < 3; ++i) {
            const std::size_t end = text.find(':', pos);
            const std::string piece = text.substr(pos, end == std::string::npos ? std::string::npos : end - pos);
            std::size_t used = 0;
            try {
                parts[i] = std::stol(piece, &used);
            } catch (const std::exception &) {
                used = 0;
            }
            if (piece.empty() || used != piece.size() || (i < 2 && end == std::string::npos) ||
                (i == 2 && end != std::string::npos)) {
                throw std::invalid_argument("malformed expression '" + text + "', expected lelievre:N:k:l");
            }
            pos = end + 1;
        }
        return lelievre_id(parts[0], static_cast<int>(parts[1]), static_cast<int>(parts[2]));
    }
    throw std::invalid_argument("unknown expression '" + text + "'");
}

std::string to_string(const ExpressionId &id)
{
    if (id.kind == ExpressionKind::LelievreGeneral) {
        return "lelievre:" + std::to_string(id.modulus) + ":" + std::to_string(id.k) + ":" + std::to_string(id.l);
    }
    for (const auto &[kind, name] : kind_names()) {
        if (kind == id.kind) {
            return name;
        }
    }
    return "?";
}

std::vector<std::string> expression_names()
{
    std::vector<std::string> out;
    for (const auto &entry : kind_names()) {
        out.push_back(entry.second);
    }
    out.push_back("lelievre:N:k:l");
    return out;
}

std::string to_string(Sign3 s)
{
    switch (s) {
    case Sign3::Zero:
        return "zero";
    case Sign3::Negative:
        return "negative";
    case Sign3::Positive:
        return "positive";
    }
    return "?";
}

Sign3 sign_of(const BigInt &v)
{
    const int s = sgn(v);
    return s == 0 ? Sign3::Zero : (s < 0 ? Sign3::Negative : Sign3::Positive);
}

Backend parse_backend(const std::string &text)
{
    if (text == "formula") {
        return Backend::Formula;
    }
    if (text == "bruteforce" || text == "brute-force") {
        return Backend::BruteForce;
    }
    throw std::invalid_argument("unknown backend '" + text + "', expected formula or bruteforce");
}

std::string to_string(Backend b) { return b == Backend::Formula ? "formula" : "bruteforce"; }

BigInt lelievre_coeff(long modulus, int k, int l, long n)
{
    if (l <= k || k < 1) {
        throw std::invalid_argument("lelievre_coeff needs l > k >= 1");
    }
    if (modulus < 1 || n < 1) {
        throw std::invalid_argument("lelievre_coeff needs N >= 1 and n >= 1");
    }
    const BigInt nl1 = ipow(BigInt(n), static_cast<unsigned long>(l)) + 1;
    const BigInt nk1 = ipow(BigInt(n), static_cast<unsigned long>(k)) + 1;
    BigInt total = 0;
    for (long d : divisors(n)) {
        if (std::gcd(n / d, modulus) != 1) {
            continue;
        }
        total += nl1 * ipow(BigInt(d), static_cast<unsigned long>(k)) - nk1 * ipow(BigInt(d), static_cast<unsigned long>(l));
    }
    return total;
}

SignOutcome classify_lelievre(long modulus, int k, int l, long n)
{
    if (n < 2) {
        throw std::invalid_argument("classification needs n >= 2");
    }
    const ExpressionId id = lelievre_id(modulus, k, l);
    const Sign3 s = sign_of(lelievre_coeff(modulus, k, l, n));
    return {s, outcome_label(id, s)};
}

QSeries lelievre_series(long modulus, int k, int l, int order)
{
    if (l <= k || k < 1) {
        throw std::invalid_argument("lelievre_series needs l > k >= 1");
    }
    const auto N = static_cast<int>(modulus);
    const QSeries gk = coprime_g(N, k + 1, order);
    const QSeries gl = coprime_g(N, l + 1, order);
    return d_operator(gk, static_cast<unsigned>(l)) + gk - d_operator(gl, static_cast<unsigned>(k)) - gl;
}

Sign3 expected_sign(const ExpressionId &id, long n)
{
    switch (id.kind) {
    case ExpressionKind::Level1Quadratic:
    case ExpressionKind::Level1Cubic:
        return is_prime(n) ? Sign3::Zero : Sign3::Positive;
    case ExpressionKind::Level2Quadratic:
    case ExpressionKind::Level2Quartic:
        if (is_prime(n) && n != 2) {
            return Sign3::Zero;
        }
        return is_power_of(n, 2) ? Sign3::Negative : Sign3::Positive;
    case ExpressionKind::Level3Quadratic:
        if (is_prime(n) && n != 3) {
            return Sign3::Zero;
        }
        return is_power_of(n, 3) ? Sign3::Negative : Sign3::Positive;
    case ExpressionKind::Lattice1Mod4:
    case ExpressionKind::Lattice3Mod4: {
        const long a = id.kind == ExpressionKind::Lattice1Mod4 ? 1 : 3;
        if (n % 4 != a) {
            return Sign3::Negative;
        }
        return is_prime(n) ? Sign3::Zero : Sign3::Positive;
    }
    case ExpressionKind::LelievreGeneral:
        if (is_prime(n) && id.modulus % n != 0) {
            return Sign3::Zero;
        }
        return factors_divide(n, id.modulus) ? Sign3::Negative : Sign3::Positive;
    }
    throw std::logic_error("unhandled expression");
}

std::string outcome_label(const ExpressionId &id, Sign3 s)
{
    switch (id.kind) {
    case ExpressionKind::Level1Quadratic:
    case ExpressionKind::Level1Cubic:
        return s == Sign3::Zero ? "prime" : (s == Sign3::Positive ? "composite" : "impossible");
    case ExpressionKind::Level2Quadratic:
    case ExpressionKind::Level2Quartic:
        return s == Sign3::Zero ? "odd prime" : (s == Sign3::Negative ? "power of 2" : "other");
    case ExpressionKind::Level3Quadratic:
        return s == Sign3::Zero ? "prime other than 3" : (s == Sign3::Negative ? "power of 3" : "other");
    case ExpressionKind::Lattice1Mod4:
        return s == Sign3::Zero ? "prime = 1 mod 4" : (s == Sign3::Negative ? "n != 1 mod 4" : "other");
    case ExpressionKind::Lattice3Mod4:
        return s == Sign3::Zero ? "prime = 3 mod 4" : (s == Sign3::Negative ? "n != 3 mod 4" : "other");
    case ExpressionKind::LelievreGeneral:
        return s == Sign3::Zero ? "prime not dividing N"
                                : (s == Sign3::Negative ? "prime factors all divide N" : "other");
    }
    return "?";
}

ExpressionEvaluator::ExpressionEvaluator(const ExpressionId &id, Backend backend, long max_n)
    : m_id(id), m_backend(backend), m_max_n(max_n)
{
    if (max_n < 2) {
        throw std::invalid_argument("expressions are defined for n >= 2");
    }
    const int order = static_cast<int>(max_n);
    switch (id.kind) {
    case ExpressionKind::Level1Quadratic:
    case ExpressionKind::Level1Cubic:
    case ExpressionKind::Level3Quadratic:
        if (backend == Backend::Formula) {
            const int top = id.kind == ExpressionKind::Level1Cubic ? 3 : 2;
            for (int j = 2; j <= top; ++j) {
                m_mk_tables.emplace(j, macmahon_coefficients(family_params(id.kind, j), order));
            }
        }
        break;
    case ExpressionKind::Lattice1Mod4:
    case ExpressionKind::Lattice3Mod4:
        if (backend == Backend::BruteForce) {
            const ShiftedLattice shifted = id.kind == ExpressionKind::Lattice1Mod4 ? lattice_L1() : lattice_L2();
            m_shifted_counts = theta_series(shifted, order).counts;
            m_e8_counts = theta_series(lattice_E8(), order).counts;
        }
        break;
    case ExpressionKind::LelievreGeneral:
        if (backend == Backend::BruteForce) {
            const QSeries f = lelievre_series(id.modulus, id.k, id.l, order);
            for (int n = 0; n <= order; ++n) {
                m_lelievre.push_back(to_integer(f[n]));
            }
        }
        break;
    default:
        break;
    }
}

BigInt ExpressionEvaluator::mk(int j, long n) const
{
    const bool level3 = m_id.kind == ExpressionKind::Level3Quadratic;
    const bool level2 = m_id.kind == ExpressionKind::Level2Quadratic || m_id.kind == ExpressionKind::Level2Quartic;
    if (m_backend == Backend::BruteForce) {
        return macmahon_bruteforce(family_params(m_id.kind, j), n);
    }
    if (level2) {
        return to_integer(mk_level2_explicit(j, n));
    }
    if (j == 1) {
        return level3 ? divisor_sum(ResidueClassSet(3, {1, 2}), Sign::Plus, 1, n) : sigma(1, n);
    }
    return m_mk_tables.at(j)[static_cast<std::size_t>(n)];
}

BigInt ExpressionEvaluator::level1(long n) const
{
    const BigInt N = n;
    if (m_id.kind == ExpressionKind::Level1Quadratic) {
        return (N * N - 3 * N + 2) * mk(1, n) - 8 * mk(2, n);
    }
    return (3 * N * N * N - 13 * N * N + 18 * N - 8) * mk(1, n) + (12 * N * N - 120 * N + 212) * mk(2, n) -
           960 * mk(3, n);
}

BigInt ExpressionEvaluator::level2(long n) const
{
    const BigInt N = n;
    if (m_id.kind == ExpressionKind::Level2Quadratic) {
        return (N * N - 4 * N + 3) * mk(1, n) - 24 * mk(2, n);
    }
    return (N * N * N * N - N * N * N - 14 * N * N + 29 * N - 15) * mk(1, n) - 120 * (3 * N - 8) * mk(2, n) -
           5760 * mk(3, n);
}

BigInt ExpressionEvaluator::level3(long n) const
{
    const BigInt N = n;
    return (N * N - 3 * N + 2) * mk(1, n) - 12 * mk(2, n);
}

BigInt ExpressionEvaluator::lattice(long n) const
{
    const BigInt N = n;
    BigInt shifted, e8;
    if (m_backend == Backend::Formula) {
        const LatticeName name = m_id.kind == ExpressionKind::Lattice1Mod4 ? LatticeName::L1 : LatticeName::L2;
        shifted = lattice_count_formula(name, n);
        e8 = lattice_count_formula(LatticeName::E8Even, n);
    } else {
        shifted = static_cast<long>(m_shifted_counts.at(static_cast<std::size_t>(n)));
        e8 = static_cast<long>(m_e8_counts.at(static_cast<std::size_t>(n)));
    }
    return 60 * (N * N - N + 1) * shifted - e8;
}

BigInt ExpressionEvaluator::lelievre(long n) const
{
    if (m_backend == Backend::Formula) {
        return lelievre_coeff(m_id.modulus, m_id.k, m_id.l, n);
    }
    return m_lelievre.at(static_cast<std::size_t>(n));
}

BigInt ExpressionEvaluator::value(long n) const
{
    if (n < 2 || n > m_max_n) {
        throw std::out_of_range("n = " + std::to_string(n) + " outside the evaluator range 2.." +
                                std::to_string(m_max_n));
    }
    switch (m_id.kind) {
    case ExpressionKind::Level1Quadratic:
    case ExpressionKind::Level1Cubic:
        return level1(n);
    case ExpressionKind::Level2Quadratic:
    case ExpressionKind::Level2Quartic:
        return level2(n);
    case ExpressionKind::Level3Quadratic:
        return level3(n);
    case ExpressionKind::Lattice1Mod4:
    case ExpressionKind::Lattice3Mod4:
        return lattice(n);
    case ExpressionKind::LelievreGeneral:
        return lelievre(n);
    }
    throw std::logic_error("unhandled expression");
}

Evaluation evaluate_expression(const ExpressionId &id, long n, Backend backend)
{
    if (n < 2) {
        throw std::invalid_argument("expressions are defined for n >= 2");
    }
    const ExpressionEvaluator eval(id, backend, n);
    BigInt v = eval.value(n);
    const Sign3 s = sign_of(v);
    return {std::move(v), {s, outcome_label(id, s)}};
}

DetectionReport detect_range(const ExpressionId &id, long lo, long hi, Backend backend, unsigned workers)
{
    if (lo < 2 || hi < lo) {
        throw std::invalid_argument("detect_range needs 2 <= lo <= hi");
    }
    if (workers == 0) {
        workers = worker_count();
    }
    const ExpressionEvaluator eval(id, backend, hi);
    DetectionReport report{id, backend, lo, hi, {}, {}};
    report.rows.resize(static_cast<std::size_t>(hi - lo + 1));
    parallel_for(report.rows.size(), workers, [&](unsigned, std::size_t i) {
        const long n = lo + static_cast<long>(i);
        BigInt v = eval.value(n);
        const Sign3 s = sign_of(v);
        const Sign3 expected = expected_sign(id, n);
        report.rows[i] = {n, std::move(v), {s, outcome_label(id, s)}, expected, s == expected};
    });
    for (const auto &row : report.rows) {
        if (!row.consistent) {
            report.violations.push_back(row.n);
        }
    }
    return report;
}

namespace {

QSeries level2_c(int k, int order) { return macmahon_series(variant_params('C', k), order); }

} // namespace

IdentityReport verify_f13_factorization(int order)
{
    const QSeries inner = apply_d_poly(level2_c(1, order), {3, -4, 1}) - level2_c(2, order) * Rational(24);
    return compare_series("f_{1,3}^(2) = (D+1)((D^2-4D+3)C_1 - 24C_2)", lelievre_series(2, 1, 3, order),
                          apply_d_poly(inner, {1, 1}));
}

IdentityReport verify_f15_factorization(int order)
{
    const QSeries c2 = level2_c(2, order);
    const QSeries inner = apply_d_poly(level2_c(1, order), {-15, 29, -14, -1, 1}) -
                          apply_d_poly(c2, {-8, 3}) * Rational(120) - level2_c(3, order) * Rational(5760);
    return compare_series("f_{1,5}^(2) = (D+1)((D^4-D^3-14D^2+29D-15)C_1 - 120(3D-8)C_2 - 5760C_3)",
                          lelievre_series(2, 1, 5, order), apply_d_poly(inner, {1, 1}));
}

} // namespace macmahon
