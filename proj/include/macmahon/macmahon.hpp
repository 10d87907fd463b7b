#ifndef MACMAHON_MACMAHON_HPP
#define MACMAHON_MACMAHON_HPP

#include <vector>

#include <macmahon/eisenstein.hpp>
#include <macmahon/numtheory.hpp>
#include <macmahon/qseries.hpp>

namespace macmahon {

// Parameters (S, N, eps, k) of the generalized MacMahon function
//   A_{S,N,eps,k}(q) = sum over 0 < m_1 < ... < m_k with every m_i in S of
//                      eps^k q^(m_1+...+m_k) / prod (1 - eps q^(m_i))^2.
struct MacMahonParams
{
    MacMahonParams(ResidueClassSet classes, Sign eps, int k);

    ResidueClassSet classes;
    Sign eps;
    int k;
};

// MacMahon's named functions A_k .. H_k. B, D, F and H carry an extra
// (-1)^k in front of their generalized function.
MacMahonParams variant_params(char letter, int k);
int variant_sign(char letter, int k);

// Integer coefficients of A_{S,N,eps,k} through q^order from the product
//   prod_{0<m<=order, m in S} (1 + t eps q^m / (1 - eps q^m)^2),
// keeping only t-degrees up to k and returning the t^k coefficient.
std::vector<BigInt> macmahon_coefficients(const MacMahonParams &p, int order);
QSeries macmahon_series(const MacMahonParams &p, int order);
QSeries variant_series(char letter, int k, int order);

// Coefficient of q^n by exhaustive enumeration of 0 < m_1 < ... < m_k in S
// and d_i >= 1 with sum m_i d_i = n, weighted by prod d_i eps^(d_i).
BigInt macmahon_bruteforce(const MacMahonParams &p, long n);

// Smallest n with a possibly non-zero coefficient: the sum of the k smallest
// admissible widths.
long minimal_support(const MacMahonParams &p);

// Lambda_k(G_{S,N,eps,2}, ..., G_{S,N,eps,2k}).
QSeries lehmer_side(const MacMahonParams &p, int order);

struct MainIdentitySides
{
    QSeries direct;
    QSeries lehmer;
};

MainIdentitySides main_identity_sides(const MacMahonParams &p, int order);
IdentityReport verify_main_identity(const MacMahonParams &p, int order);
// Same check on the named variant, sign twist applied on both sides.
IdentityReport verify_variant_identity(char letter, int k, int order);

struct LabelledDecomposition
{
    std::vector<std::string> labels;
    DecompositionResult result;
};

// C_k = A_{{1},2,+1,k} in the level 2 quasi-modular basis of weight <= 2k,
// for k = 1..4.
LabelledDecomposition decompose_level2_macmahon(int k, int order);

} // namespace macmahon

#endif
