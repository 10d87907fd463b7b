#include <macmahon/numtheory.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace macmahon {

Sign parse_sign(const std::string &text)
{
    if (text == "+1" || text == "1" || text == "+") {
        return Sign::Plus;
    }
    if (text == "-1" || text == "-") {
        return Sign::Minus;
    }
    throw std::invalid_argument("epsilon must be +1 or -1, got '" + text + "'");
}

std::string to_string(Sign s) { return s == Sign::Plus ? "+1" : "-1"; }

ResidueClassSet::ResidueClassSet(long modulus, std::vector<long> residues) : m_modulus(modulus)
{
    if (modulus < 1) {
        throw std::invalid_argument("modulus must be positive");
    }
    if (residues.empty()) {
        throw std::invalid_argument("residue set must be non-empty");
    }
    m_member.assign(static_cast<std::size_t>(modulus), false);
    for (long r : residues) {
        if (r < 0 || r >= modulus) {
            throw std::invalid_argument("residue " + std::to_string(r) + " is not in [0, " +
                                        std::to_string(modulus) + ")");
        }
        m_member[static_cast<std::size_t>(r)] = true;
    }
    std::sort(residues.begin(), residues.end());
    residues.erase(std::unique(residues.begin(), residues.end()), residues.end());
    m_residues = std::move(residues);
}

ResidueClassSet ResidueClassSet::units(long modulus)
{
    if (modulus < 1) {
        throw std::invalid_argument("modulus must be positive");
    }
    std::vector<long> res;
    for (long r = 0; r < modulus; ++r) {
        if (std::gcd(r, modulus) == 1) {
            res.push_back(r);
        }
    }
    return ResidueClassSet(modulus, std::move(res));
}

bool ResidueClassSet::contains(long m) const
{
    long r = m % m_modulus;
    if (r < 0) {
        r += m_modulus;
    }
    return m_member[static_cast<std::size_t>(r)];
}

bool ResidueClassSet::symmetric() const
{
    return std::all_of(m_residues.begin(), m_residues.end(),
                       [this](long l) { return contains((m_modulus - l) % m_modulus); });
}

std::string ResidueClassSet::to_string() const
{
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < m_residues.size(); ++i) {
        os << (i ? "," : "") << m_residues[i];
    }
    os << "} mod " << m_modulus;
    return os.str();
}

std::vector<long> divisors(long n)
{
    if (n < 1) {
        throw std::invalid_argument("divisors: n must be positive");
    }
    std::vector<long> small, large;
    for (long d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d != n / d) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

BigInt divisor_sum(const ResidueClassSet &classes, Sign eps, unsigned k, long n)
{
    if (n < 1) {
        throw std::invalid_argument("divisor sums are defined for n >= 1");
    }
    BigInt total = 0;
    for (long d : divisors(n)) {
        if (!classes.contains(n / d)) {
            continue;
        }
        BigInt term = ipow(d, k);
        if (eps == Sign::Minus && d % 2 != 0) {
            total -= term;
        } else {
            total += term;
        }
    }
    return total;
}

BigInt sigma(unsigned k, long n) { return divisor_sum(ResidueClassSet(1, {0}), Sign::Plus, k, n); }

BigInt sigma_odd_cofactor(unsigned k, long n)
{
    return divisor_sum(ResidueClassSet(2, {1}), Sign::Plus, k, n);
}

BigInt sigma_gated(unsigned k, long a, long modulus, long n)
{
    if (modulus < 1 || a < 0 || a >= modulus) {
        throw std::invalid_argument("sigma_gated needs 0 <= a < N");
    }
    return n % modulus == a ? sigma(k, n) : BigInt(0);
}

BigInt coprime_divisor_sum(long modulus, unsigned k, long n)
{
    return divisor_sum(ResidueClassSet::units(modulus), Sign::Plus, k, n);
}

bool is_prime(long n)
{
    if (n < 2) {
        return false;
    }
    if (n % 2 == 0) {
        return n == 2;
    }
    for (long d = 3; d * d <= n; d += 2) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

std::vector<long> prime_factors(long n)
{
    if (n < 1) {
        throw std::invalid_argument("prime_factors: n must be positive");
    }
    std::vector<long> ps;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            ps.push_back(p);
            while (n % p == 0) {
                n /= p;
            }
        }
    }
    if (n > 1) {
        ps.push_back(n);
    }
    return ps;
}

int moebius(long n)
{
    if (n < 1) {
        throw std::invalid_argument("moebius: n must be positive");
    }
    int mu = 1;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) {
                return 0;
            }
            mu = -mu;
        }
    }
    return n > 1 ? -mu : mu;
}

bool is_power_of(long n, long p)
{
    if (n < p) {
        return false;
    }
    while (n % p == 0) {
        n /= p;
    }
    return n == 1;
}

Rational bernoulli(unsigned k)
{
    if (k > 1 && k % 2 != 0) {
        throw std::invalid_argument("bernoulli: odd index > 1 (value is zero by convention, not supported)");
    }
    std::vector<Rational> b(k + 1);
    b[0] = 1;
    for (unsigned m = 1; m <= k; ++m) {
        Rational acc = 0;
        for (unsigned j = 0; j < m; ++j) {
            acc += Rational(binomial(m + 1, j)) * b[j];
        }
        b[m] = -acc / (m + 1);
    }
    return b[k];
}

} // namespace macmahon
