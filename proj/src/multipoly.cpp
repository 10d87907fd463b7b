#include <macmahon/multipoly.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace macmahon {

namespace {

void trim(Monomial &m)
{
    while (!m.empty() && m.back() == 0) {
        m.pop_back();
    }
}

std::string render_terms(const MultiPoly::Terms &terms, const Rational &scale)
{
    if (terms.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (const auto &[mono, coeff] : terms) {
        const Rational c = coeff * scale;
        if (first) {
            if (sgn(c) < 0) {
                os << "-";
            }
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        const Rational mag = abs(c);
        const bool constant = mono.empty();
        if (constant || mag != 1) {
            os << mag.get_str();
            if (!constant) {
                os << "*";
            }
        }
        bool first_var = true;
        for (std::size_t j = 0; j < mono.size(); ++j) {
            if (mono[j] == 0) {
                continue;
            }
            if (!first_var) {
                os << "*";
            }
            first_var = false;
            os << "x" << 2 * (j + 1);
            if (mono[j] > 1) {
                os << "^" << mono[j];
            }
        }
    }
    return os.str();
}

} // namespace

unsigned degree(const Monomial &m)
{
    unsigned d = 0;
    for (unsigned e : m) {
        d += e;
    }
    return d;
}

unsigned weight(const Monomial &m)
{
    unsigned w = 0;
    for (std::size_t j = 0; j < m.size(); ++j) {
        w += static_cast<unsigned>(2 * (j + 1)) * m[j];
    }
    return w;
}

bool GradedLexGreater::operator()(const Monomial &a, const Monomial &b) const
{
    const unsigned da = degree(a), db = degree(b);
    if (da != db) {
        return da > db;
    }
    const std::size_t len = std::max(a.size(), b.size());
    for (std::size_t j = 0; j < len; ++j) {
        const unsigned ea = j < a.size() ? a[j] : 0;
        const unsigned eb = j < b.size() ? b[j] : 0;
        if (ea != eb) {
            return ea > eb;
        }
    }
    return false;
}

MultiPoly::MultiPoly(const Rational &c)
{
    if (!is_zero(c)) {
        m_terms.emplace(Monomial{}, c);
    }
}

MultiPoly MultiPoly::variable(unsigned index)
{
    if (index == 0 || index % 2 != 0) {
        throw std::invalid_argument("variable indices are even positive integers, got " + std::to_string(index));
    }
    Monomial m(index / 2, 0);
    m.back() = 1;
    MultiPoly p;
    p.m_terms.emplace(std::move(m), Rational(1));
    return p;
}

Rational MultiPoly::coefficient(const Monomial &m) const
{
    Monomial key = m;
    trim(key);
    auto it = m_terms.find(key);
    return it == m_terms.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const { return coefficient({}); }

unsigned MultiPoly::total_degree() const
{
    unsigned d = 0;
    for (const auto &[mono, c] : m_terms) {
        d = std::max(d, degree(mono));
    }
    return d;
}

unsigned MultiPoly::max_variable() const
{
    std::size_t len = 0;
    for (const auto &[mono, c] : m_terms) {
        len = std::max(len, mono.size());
    }
    return static_cast<unsigned>(2 * len);
}

void MultiPoly::add_term(const Monomial &m, const Rational &c)
{
    if (is_zero(c)) {
        return;
    }
    auto [it, inserted] = m_terms.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (is_zero(it->second)) {
            m_terms.erase(it);
        }
    }
}

MultiPoly &MultiPoly::operator+=(const MultiPoly &b)
{
    for (const auto &[mono, c] : b.m_terms) {
        add_term(mono, c);
    }
    return *this;
}

MultiPoly &MultiPoly::operator-=(const MultiPoly &b)
{
    for (const auto &[mono, c] : b.m_terms) {
        add_term(mono, -c);
    }
    return *this;
}

MultiPoly operator-(const MultiPoly &a)
{
    MultiPoly r;
    for (const auto &[mono, c] : a.m_terms) {
        r.m_terms.emplace(mono, -c);
    }
    return r;
}

MultiPoly operator*(const MultiPoly &a, const MultiPoly &b)
{
    MultiPoly r;
    for (const auto &[ma, ca] : a.m_terms) {
        for (const auto &[mb, cb] : b.m_terms) {
            Monomial m(std::max(ma.size(), mb.size()), 0);
            for (std::size_t j = 0; j < ma.size(); ++j) {
                m[j] += ma[j];
            }
            for (std::size_t j = 0; j < mb.size(); ++j) {
                m[j] += mb[j];
            }
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

MultiPoly operator*(const MultiPoly &a, const Rational &c)
{
    if (is_zero(c)) {
        return {};
    }
    MultiPoly r = a;
    for (auto &[mono, coeff] : r.m_terms) {
        coeff *= c;
    }
    return r;
}

MultiPoly MultiPoly::scale_variables(const std::vector<Rational> &scale) const
{
    MultiPoly r;
    for (const auto &[mono, c] : m_terms) {
        if (mono.size() > scale.size()) {
            throw std::invalid_argument("scale_variables: missing scale for x" + std::to_string(2 * mono.size()));
        }
        Rational f = c;
        for (std::size_t j = 0; j < mono.size(); ++j) {
            for (unsigned e = 0; e < mono[j]; ++e) {
                f *= scale[j];
            }
        }
        r.add_term(mono, f);
    }
    return r;
}

MultiPoly pow(const MultiPoly &p, unsigned e)
{
    MultiPoly r(Rational(1));
    for (unsigned i = 0; i < e; ++i) {
        r = r * p;
    }
    return r;
}

std::string MultiPoly::to_string() const { return render_terms(m_terms, Rational(1)); }

std::string MultiPoly::to_normalized_string() const
{
    BigInt den = 1;
    for (const auto &[mono, c] : m_terms) {
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    if (den == 1) {
        return to_string();
    }
    return "1/" + den.get_str() + "*(" + render_terms(m_terms, Rational(den)) + ")";
}

} // namespace macmahon
