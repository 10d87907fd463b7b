#ifndef MACMAHON_NUMTHEORY_HPP
#define MACMAHON_NUMTHEORY_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <macmahon/rational.hpp>

namespace macmahon {

// The twist epsilon of the generalized divisor sums and MacMahon functions.
enum class Sign : int { Plus = 1, Minus = -1 };

inline int value(Sign s) { return static_cast<int>(s); }
Sign parse_sign(const std::string &text);
std::string to_string(Sign s);

// A modulus N together with a non-empty set S of residues mod N.
class ResidueClassSet
{
public:
    ResidueClassSet(long modulus, std::vector<long> residues);
    ResidueClassSet(long modulus, std::initializer_list<long> residues)
        : ResidueClassSet(modulus, std::vector<long>(residues))
    {
    }

    // The reduced residues {l : gcd(l, N) = 1}; {0} when N = 1.
    static ResidueClassSet units(long modulus);

    long modulus() const { return m_modulus; }
    const std::vector<long> &residues() const { return m_residues; }

    // Whether m reduced mod N lies in S.
    bool contains(long m) const;
    bool symmetric() const;

    std::string to_string() const;

    friend bool operator==(const ResidueClassSet &, const ResidueClassSet &) = default;

private:
    long m_modulus;
    std::vector<long> m_residues;
    std::vector<bool> m_member;
};

std::vector<long> divisors(long n);

// sigma_{S,N,eps,k}(n) = sum over d | n with n/d in S of eps^d d^k.
BigInt divisor_sum(const ResidueClassSet &classes, Sign eps, unsigned k, long n);

// sigma_k(n).
BigInt sigma(unsigned k, long n);
// sigma_k^{(2)}(n): divisors d with n/d odd.
BigInt sigma_odd_cofactor(unsigned k, long n);
// sigma_k(n) when n = a (mod N), else 0.
BigInt sigma_gated(unsigned k, long a, long modulus, long n);
// sum over d | n with gcd(n/d, N) = 1 of d^k.
BigInt coprime_divisor_sum(long modulus, unsigned k, long n);

bool is_prime(long n);
int moebius(long n);
std::vector<long> prime_factors(long n);

// n = p^l for the given prime p and some l >= 1.
bool is_power_of(long n, long p);

// B_k from sum_{j=0}^{m} binom(m+1, j) B_j = 0; accepts k = 1 and even k.
Rational bernoulli(unsigned k);

} // namespace macmahon

#endif
