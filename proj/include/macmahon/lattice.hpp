#ifndef MACMAHON_LATTICE_HPP
#define MACMAHON_LATTICE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include <macmahon/rational.hpp>

namespace macmahon {

// How theta series index their coefficients: by the squared norm itself, or
// by half of it (q^(|x|^2/2), used for even lattices such as E8).
enum class NormConvention { Full, Half };

using RationalMatrix = std::vector<std::vector<Rational>>;

// The translate { B v + s : v in Z^r } of a lattice, described intrinsically
// by the Gram matrix G = B^T B and the shift in lattice coordinates, so the
// squared norm of a point is (v + s)^T G (v + s).
class ShiftedLattice
{
public:
    // Throws std::invalid_argument unless gram is square, symmetric and
    // positive definite (all leading principal minors positive) and the
    // shift has matching length.
    ShiftedLattice(std::string name, RationalMatrix gram, std::vector<Rational> shift,
                   NormConvention convention = NormConvention::Full);

    const std::string &name() const { return m_name; }
    std::size_t rank() const { return m_gram.size(); }
    const RationalMatrix &gram() const { return m_gram; }
    const std::vector<Rational> &shift() const { return m_shift; }
    NormConvention convention() const { return m_convention; }

    Rational norm(const std::vector<long> &v) const;

    // Every point with coordinates in [-radius, radius]^r has integral norm.
    bool integral_norms_on_box(long radius) const;

private:
    std::string m_name;
    RationalMatrix m_gram;
    std::vector<Rational> m_shift;
    NormConvention m_convention;
};

// Translates of rectangular lattices: Gram diag(4,4,2,2) with shifts
// (0,0,1/2,1/2) and (1/2,1/2,1/2,1/2).
ShiftedLattice lattice_L1();
ShiftedLattice lattice_L2();
// E8 from the basis (2,0,...,0), e_i - e_{i-1} (i = 2..7), (1/2,...,1/2);
// theta series indexed by half norms.
ShiftedLattice lattice_E8();

// The integer Gram matrix of lattice_E8().
const std::vector<std::vector<long>> &e8_gram();

// Number of points with squared norm exactly n.
std::int64_t lattice_count(const ShiftedLattice &lattice, long n);

enum class LatticeName { L1, L2, E8Even };

LatticeName parse_lattice_name(const std::string &text);
std::string to_string(LatticeName name);
ShiftedLattice catalog_lattice(LatticeName name);

// Divisor-sum counts: r_L1(n) = 4 sigma_1^{(1,4)}(n), r_L2(n) = 4 sigma_1^{(3,4)}(n),
// and for E8Even the value r_E8(2n) = 240 sigma_3(n).
BigInt lattice_count_formula(LatticeName name, long n);

struct ThetaSeries
{
    NormConvention convention = NormConvention::Full;
    // counts[n] = number of points of norm n (Full) or 2n (Half).
    std::vector<std::int64_t> counts;
};

ThetaSeries theta_series(const ShiftedLattice &lattice, int order);

} // namespace macmahon

#endif
