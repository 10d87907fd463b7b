#ifndef MACMAHON_EISENSTEIN_HPP
#define MACMAHON_EISENSTEIN_HPP

#include <optional>
#include <span>
#include <string>
#include <vector>

#include <macmahon/numtheory.hpp>
#include <macmahon/qseries.hpp>

namespace macmahon {

// G_{S,N,eps,k}(q) = sum_{n>=1} sigma_{S,N,eps,k-1}(n) q^n.
QSeries eisenstein_g(const ResidueClassSet &classes, Sign eps, int k, int order);

// G_k = G_{{0},1,+1,k}.
QSeries eisenstein_g_level1(int k, int order);
// G_k^{(2)} = G_{{1},2,+1,k}.
QSeries eisenstein_g_level2(int k, int order);

// E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n for even k >= 2.
QSeries eisenstein_e(int k, int order);

// E_{2,N}(q) = E_2(q) - N E_2(q^N).
QSeries e2n(int modulus, int order);

// G_k^{(N)}: coefficient n is sum over d | n, gcd(n/d, N) = 1, of d^(k-1).
QSeries coprime_g(int modulus, int k, int order);

struct EtaFactor
{
    int multiplier;
    int exponent;
};

// q^leading_power * prod_{j>=1} prod_factors (1 - q^(multiplier*j))^exponent.
struct EtaProductSpec
{
    std::vector<EtaFactor> factors;
    int leading_power = 0;
};

QSeries eta_product(const EtaProductSpec &spec, int order);

// q prod (1-q^j)^8 (1-q^2j)^8, the weight 8 cusp form on Gamma_0(2).
EtaProductSpec delta2_spec();
// q prod (1-q^j)^6 (1-q^3j)^6, the weight 6 cusp form on Gamma_0(3).
EtaProductSpec delta3_spec();

enum class DecompositionStatus { ExactMatch, Mismatch, Underdetermined };

std::string to_string(DecompositionStatus s);

struct DecompositionResult
{
    std::vector<Rational> coefficients;
    int verified_order = -1;
    DecompositionStatus status = DecompositionStatus::Underdetermined;
    // First power at which the target disagrees, when status is Mismatch.
    std::optional<int> mismatch_power;
};

// Solve target = sum c_i basis_i on the coefficients of q^0..q^(probe-1) by
// exact Gaussian elimination, then check the remaining coefficients up to
// the shared order.
DecompositionResult decompose_in_basis(const QSeries &target, std::span<const QSeries> basis, int probe);

// Probe length used when callers do not choose one.
inline int default_probe(std::size_t basis_size) { return static_cast<int>(basis_size) + 4; }

struct BasisElement
{
    std::string label;
    QSeries series;
};

// Level 2 quasi-modular generators of mixed weight 2..max_weight, heaviest
// weight first. Weight w contributes D^j of the modular basis of weight w-2j
// (j = 0..w/2-1) and D^(w/2-1) G_2^{(2)}. Modular bases:
//   weight 2: E_{2,2};  weight 4: E_4, G_4^{(2)};  weight 6: E_6, G_6^{(2)};
//   weight 8: E_8, G_8^{(2)}, Delta_2.
std::vector<BasisElement> level2_quasimodular_basis(int max_weight, int order);

// Explicit level 2 MacMahon formulas M_k^{(2)}(n) for k = 1..4 in terms of
// sigma_j^{(2)}(n); k = 4 also needs the Delta_2 coefficient a(n).
Rational mk_level2_explicit(int k, long n, const BigInt &delta2_coeff = 0);

// Identity checks on q-expansions.
std::vector<IdentityReport> verify_ramanujan(int order);
IdentityReport verify_g_vs_e(int k, int order);
IdentityReport verify_moebius(int modulus, int k, int order);
IdentityReport verify_epsilon_relation(const ResidueClassSet &classes, int k, int order);
IdentityReport verify_e2_dilation(int modulus, int order);

} // namespace macmahon

#endif
