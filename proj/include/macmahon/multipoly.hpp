#ifndef MACMAHON_MULTIPOLY_HPP
#define MACMAHON_MULTIPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include <macmahon/rational.hpp>

namespace macmahon {

// Exponent vector over x_2, x_4, x_6, ...: entry j holds the exponent of
// x_{2(j+1)}. Trailing zeros are never stored, so equal monomials compare equal.
using Monomial = std::vector<unsigned>;

unsigned degree(const Monomial &m);
// Weight 2j per power of x_{2j}.
unsigned weight(const Monomial &m);

// Graded lexicographic order on (x_2, x_4, ...), largest first: higher total
// degree first, ties broken by the larger exponent of x_2, then x_4, ...
struct GradedLexGreater
{
    bool operator()(const Monomial &a, const Monomial &b) const;
};

// Sparse polynomial in x_2, x_4, ... with rational coefficients. No stored
// coefficient is ever zero.
class MultiPoly
{
public:
    using Terms = std::map<Monomial, Rational, GradedLexGreater>;

    MultiPoly() = default;
    MultiPoly(const Rational &c);
    MultiPoly(long c) : MultiPoly(Rational(c)) {}

    // x_index; index must be an even positive integer.
    static MultiPoly variable(unsigned index);

    const Terms &terms() const { return m_terms; }
    bool empty() const { return m_terms.empty(); }
    Rational coefficient(const Monomial &m) const;
    Rational constant_term() const;
    unsigned total_degree() const;
    // Largest variable index occurring (0 for a constant).
    unsigned max_variable() const;

    MultiPoly &operator+=(const MultiPoly &b);
    MultiPoly &operator-=(const MultiPoly &b);

    friend MultiPoly operator+(MultiPoly a, const MultiPoly &b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly &b) { return a -= b; }
    friend MultiPoly operator-(const MultiPoly &a);
    friend MultiPoly operator*(const MultiPoly &a, const MultiPoly &b);
    friend MultiPoly operator*(const MultiPoly &a, const Rational &c);
    friend MultiPoly operator*(const Rational &c, const MultiPoly &a) { return a * c; }

    friend bool operator==(const MultiPoly &, const MultiPoly &) = default;

    // Replace every x_{2j} by scale[j-1] * x_{2j}.
    MultiPoly scale_variables(const std::vector<Rational> &scale) const;

    // Expanded form, e.g. "1/2*x2^2 + 1/12*x2 - 1/12*x4".
    std::string to_string() const;
    // Common denominator pulled out, e.g. "1/12*(6*x2^2 + x2 - x4)".
    std::string to_normalized_string() const;

private:
    void add_term(const Monomial &m, const Rational &c);

    Terms m_terms;
};

MultiPoly pow(const MultiPoly &p, unsigned e);
inline bool is_zero(const MultiPoly &p) { return p.empty(); }

} // namespace macmahon

#endif
