#ifndef MACMAHON_RATIONAL_HPP
#define MACMAHON_RATIONAL_HPP

#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace macmahon {

// Exact scalars. mpq_class keeps every value in lowest terms with a positive
// denominator after each arithmetic operation.
using BigInt = mpz_class;
using Rational = mpq_class;

inline bool is_zero(const Rational &r) { return sgn(r) == 0; }
inline bool is_zero(const BigInt &z) { return sgn(z) == 0; }

inline Rational make_rational(const BigInt &num, const BigInt &den)
{
    if (sgn(den) == 0) {
        throw std::invalid_argument("zero denominator");
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational &r) { return r.get_den() == 1; }

// "p" for integers, "p/q" otherwise. Never scientific notation.
inline std::string to_string(const Rational &r) { return r.get_str(); }
inline std::string to_string(const BigInt &z) { return z.get_str(); }

BigInt binomial(unsigned long n, unsigned long k);
BigInt factorial(unsigned long n);
BigInt ipow(const BigInt &base, unsigned long exp);
BigInt ipow(long base, unsigned long exp);

} // namespace macmahon

#endif
