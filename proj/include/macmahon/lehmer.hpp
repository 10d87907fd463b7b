#ifndef MACMAHON_LEHMER_HPP
#define MACMAHON_LEHMER_HPP

#include <map>
#include <vector>

#include <macmahon/multipoly.hpp>
#include <macmahon/qseries.hpp>

namespace macmahon {

// Series in the auxiliary variable X with polynomial coefficients.
using PolySeries = TruncatedSeries<MultiPoly>;

// The exponent 2 sum_{j=1}^{kmax} ((-1)^(j-1)/(2j)!) (2 arcsin(X/2))^(2j) x_{2j}
// as a PolySeries of X-order 2*kmax.
PolySeries lehmer_exponent(int kmax);

// Normalized Lehmer polynomials Lambda_1, ..., Lambda_kmax: the X^(2k)
// coefficients of exp(lehmer_exponent(kmax)). Lambda_k only involves x_2..x_2k.
std::vector<MultiPoly> lehmer_polynomials(int kmax);

// Lehmer's original normalization
//   Omega_k = (-1)^k (2k)!/(2 B_2k) Lambda_k(-B_2 x_2, ..., -B_2k x_2k).
MultiPoly omega_polynomial(int k);

// Substitute series for the variables of p. `args` maps a variable index
// (2, 4, ...) to its series; every variable occurring in p must be bound and
// all bound series must share one order.
QSeries evaluate_at_series(const MultiPoly &p, const std::map<unsigned, QSeries> &args);

} // namespace macmahon

#endif
