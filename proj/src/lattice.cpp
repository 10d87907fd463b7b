#include <macmahon/lattice.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <macmahon/numtheory.hpp>
#include <macmahon/parallel.hpp>

namespace macmahon {

namespace {

using i128 = __int128;

Rational determinant(RationalMatrix m)
{
    const std::size_t n = m.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (piv < n && is_zero(m[piv][c])) {
            ++piv;
        }
        if (piv == n) {
            return 0;
        }
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = -det;
        }
        det *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (is_zero(m[r][c])) {
                continue;
            }
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k) {
                m[r][k] -= f * m[c][k];
            }
        }
    }
    return det;
}

// Submatrix on rows {0..size-1, row} and columns {0..size-1, col}.
RationalMatrix bordered(const RationalMatrix &a, std::size_t size, std::size_t row, std::size_t col)
{
    RationalMatrix m(size + 1, std::vector<Rational>(size + 1));
    for (std::size_t i = 0; i <= size; ++i) {
        const std::size_t ri = i < size ? i : row;
        for (std::size_t j = 0; j <= size; ++j) {
            const std::size_t cj = j < size ? j : col;
            m[i][j] = a[ri][cj];
        }
    }
    return m;
}

i128 to_i128(const BigInt &z)
{
    if (!z.fits_slong_p()) {
        throw std::overflow_error("lattice data too large for the integer enumerator");
    }
    return static_cast<i128>(z.get_si());
}

i128 floor_div(i128 a, i128 b)
{
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) {
        --q;
    }
    return q;
}

i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

i128 isqrt(i128 x)
{
    auto s = static_cast<i128>(std::sqrt(static_cast<long double>(x)));
    while (s * s > x) {
        --s;
    }
    while ((s + 1) * (s + 1) <= x) {
        ++s;
    }
    return s;
}

i128 mod(i128 a, i128 m)
{
    const i128 r = a % m;
    return r < 0 ? r + m : r;
}

// Exact Fincke-Pohst enumeration of an integral quadratic form w^T A w over
// the coset w = M v + c (v in Z^r), where A = scale_g * G and w = M (v + s).
//
// With D_i the leading principal minors of A (D_0 = 1) and T_i = D_i times
// the Schur complement of the leading i x i block, T_i is an integer matrix,
// U_i = w_{>=i}^T T_i w_{>=i} is the scaled minimum of the form over the
// free coordinates w_{<i}, and
//   D_{i+1} U_i = (D_{i+1} w_i + b_i)^2 + D_i U_{i+1},  b_i = sum_{j>i} T_i[i][j] w_j.
// Every bound below is a comparison of integers.
class FormEnumerator
{
public:
    explicit FormEnumerator(const ShiftedLattice &lattice) : m_rank(lattice.rank())
    {
        const auto &gram = lattice.gram();
        const auto &shift = lattice.shift();
        BigInt gden = 1, sden = 1;
        for (const auto &row : gram) {
            for (const auto &x : row) {
                mpz_lcm(gden.get_mpz_t(), gden.get_mpz_t(), x.get_den_mpz_t());
            }
        }
        for (const auto &x : shift) {
            mpz_lcm(sden.get_mpz_t(), sden.get_mpz_t(), x.get_den_mpz_t());
        }
        m_modulus = to_i128(sden);
        m_scale = to_i128(BigInt(gden * sden * sden));

        RationalMatrix a(m_rank, std::vector<Rational>(m_rank));
        for (std::size_t i = 0; i < m_rank; ++i) {
            for (std::size_t j = 0; j < m_rank; ++j) {
                a[i][j] = gram[i][j] * Rational(gden);
            }
            const Rational c = shift[i] * Rational(sden);
            m_residue.push_back(mod(to_i128(c.get_num()), m_modulus));
        }

        m_delta.assign(m_rank + 1, 1);
        for (std::size_t i = 1; i <= m_rank; ++i) {
            RationalMatrix lead(i, std::vector<Rational>(i));
            for (std::size_t r = 0; r < i; ++r) {
                for (std::size_t c = 0; c < i; ++c) {
                    lead[r][c] = a[r][c];
                }
            }
            m_delta[i] = to_i128(determinant(lead).get_num());
        }
        m_t.assign(m_rank, std::vector<i128>(m_rank, 0));
        for (std::size_t i = 0; i < m_rank; ++i) {
            for (std::size_t j = i + 1; j < m_rank; ++j) {
                m_t[i][j] = to_i128(determinant(bordered(a, i, i, j)).get_num());
            }
        }
    }

    // Raw squared norm = form value / scale.
    i128 scale() const { return m_scale; }

    // Calls visit(worker, value, multiplicity) for coset points with form
    // value <= bound; a point may stand for itself and its negative.
    template <class Visit>
    void enumerate(i128 bound, unsigned workers, Visit &&visit) const
    {
        run(bound, workers, [&](unsigned worker, std::vector<i128> &w, i128 u_above, int mult) {
            leaf_all(bound, w, u_above, [&](std::int64_t value) { visit(worker, value, mult); });
        });
    }

    // Number of coset points with form value exactly `target`.
    std::int64_t count_exact(i128 target, unsigned workers) const
    {
        if (target < 0) {
            return 0;
        }
        std::vector<std::int64_t> per_worker(std::max(workers, 1u), 0);
        run(target, workers, [&](unsigned worker, std::vector<i128> &w, i128 u_above, int mult) {
            per_worker[worker] += mult * leaf_exact(target, w, u_above);
        });
        return std::accumulate(per_worker.begin(), per_worker.end(), std::int64_t{0});
    }

private:
    bool range(std::size_t i, i128 bound, i128 u_above, const std::vector<i128> &w, i128 &b, i128 &lo,
               i128 &hi) const
    {
        b = 0;
        for (std::size_t j = i + 1; j < m_rank; ++j) {
            b += m_t[i][j] * w[j];
        }
        const i128 rem = m_delta[i] * (m_delta[i + 1] * bound - u_above);
        if (rem < 0) {
            return false;
        }
        const i128 s = isqrt(rem);
        lo = ceil_div(-s - b, m_delta[i + 1]);
        hi = floor_div(s - b, m_delta[i + 1]);
        lo += mod(m_residue[i] - lo, m_modulus);
        return lo <= hi;
    }

    i128 next_u(std::size_t i, i128 e, i128 u_above) const
    {
        return (e * e + m_delta[i] * u_above) / m_delta[i + 1];
    }

    // Splits the outermost coordinate across workers, then descends to
    // level 0 and hands (w, U_1, multiplicity) to leaf. A coset closed under
    // negation only visits a non-negative outermost coordinate.
    template <class Leaf>
    void run(i128 bound, unsigned workers, Leaf &&leaf) const
    {
        const std::size_t top = m_rank - 1;
        std::vector<i128> w(m_rank, 0);
        if (m_rank == 1) {
            leaf(0u, w, i128{0}, 1);
            return;
        }
        i128 b, lo, hi;
        if (!range(top, bound, 0, w, b, lo, hi)) {
            return;
        }
        const bool symmetric = std::all_of(m_residue.begin(), m_residue.end(),
                                           [&](i128 c) { return mod(-c, m_modulus) == c; });
        std::vector<i128> values;
        for (i128 x = lo; x <= hi; x += m_modulus) {
            if (!symmetric || x >= 0) {
                values.push_back(x);
            }
        }
        parallel_for(values.size(), workers, [&](unsigned worker, std::size_t idx) {
            std::vector<i128> local(m_rank, 0);
            local[top] = values[idx];
            const i128 e = m_delta[top + 1] * local[top] + b;
            const int mult = (symmetric && values[idx] > 0) ? 2 : 1;
            descend(top - 1, bound, next_u(top, e, 0), local, [&](std::vector<i128> &ww, i128 u) {
                leaf(worker, ww, u, mult);
            });
        });
    }

    template <class Leaf>
    void descend(std::size_t i, i128 bound, i128 u_above, std::vector<i128> &w, Leaf &&leaf) const
    {
        if (i == 0) {
            leaf(w, u_above);
            return;
        }
        i128 b, lo, hi;
        if (!range(i, bound, u_above, w, b, lo, hi)) {
            return;
        }
        for (i128 x = lo; x <= hi; x += m_modulus) {
            w[i] = x;
            descend(i - 1, bound, next_u(i, m_delta[i + 1] * x + b, u_above), w, leaf);
        }
        w[i] = 0;
    }

    template <class Visit>
    void leaf_all(i128 bound, std::vector<i128> &w, i128 u_above, Visit &&visit) const
    {
        i128 b, lo, hi;
        if (!range(0, bound, u_above, w, b, lo, hi)) {
            return;
        }
        // U_0 is quadratic in w_0; step it by finite differences. Every
        // quantity here is bounded by the enumeration bound, so 64 bits do.
        const auto d1 = static_cast<std::int64_t>(m_delta[1]);
        const auto step = static_cast<std::int64_t>(m_modulus);
        auto e = static_cast<std::int64_t>(d1 * lo + b);
        auto u = static_cast<std::int64_t>(next_u(0, e, u_above));
        const std::int64_t step_e = d1 * step;
        const std::int64_t second = d1 * step * step;
        for (auto x = static_cast<std::int64_t>(lo); x <= static_cast<std::int64_t>(hi); x += step) {
            visit(u);
            u += 2 * e * step + second;
            e += step_e;
        }
    }

    std::int64_t leaf_exact(i128 target, const std::vector<i128> &w, i128 u_above) const
    {
        i128 b = 0;
        for (std::size_t j = 1; j < m_rank; ++j) {
            b += m_t[0][j] * w[j];
        }
        const i128 z = m_delta[1] * target - u_above;
        if (z < 0) {
            return 0;
        }
        const i128 s = isqrt(z);
        if (s * s != z) {
            return 0;
        }
        std::int64_t hits = 0;
        for (i128 e : {s, -s}) {
            const i128 num = e - b;
            if (num % m_delta[1] == 0 && mod(num / m_delta[1] - m_residue[0], m_modulus) == 0) {
                ++hits;
            }
            if (s == 0) {
                break;
            }
        }
        return hits;
    }

    std::size_t m_rank;
    i128 m_modulus = 1;
    i128 m_scale = 1;
    std::vector<i128> m_residue;
    std::vector<i128> m_delta;
    std::vector<std::vector<i128>> m_t;
};

RationalMatrix diagonal(std::initializer_list<long> d)
{
    RationalMatrix m(d.size(), std::vector<Rational>(d.size(), Rational(0)));
    std::size_t i = 0;
    for (long x : d) {
        m[i][i] = x;
        ++i;
    }
    return m;
}

} // namespace

ShiftedLattice::ShiftedLattice(std::string name, RationalMatrix gram, std::vector<Rational> shift,
                               NormConvention convention)
    : m_name(std::move(name)), m_gram(std::move(gram)), m_shift(std::move(shift)), m_convention(convention)
{
    const std::size_t r = m_gram.size();
    if (r == 0) {
        throw std::invalid_argument("lattice rank must be positive");
    }
    if (m_shift.size() != r) {
        throw std::invalid_argument("shift length does not match the Gram matrix");
    }
    for (const auto &row : m_gram) {
        if (row.size() != r) {
            throw std::invalid_argument("Gram matrix must be square");
        }
    }
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            if (m_gram[i][j] != m_gram[j][i]) {
                throw std::invalid_argument("Gram matrix must be symmetric");
            }
        }
    }
    for (std::size_t i = 1; i <= r; ++i) {
        RationalMatrix lead(i, std::vector<Rational>(i));
        for (std::size_t a = 0; a < i; ++a) {
            for (std::size_t b = 0; b < i; ++b) {
                lead[a][b] = m_gram[a][b];
            }
        }
        if (sgn(determinant(lead)) <= 0) {
            throw std::invalid_argument("Gram matrix of " + m_name + " is not positive definite");
        }
    }
}

Rational ShiftedLattice::norm(const std::vector<long> &v) const
{
    if (v.size() != rank()) {
        throw std::invalid_argument("coordinate vector has the wrong length");
    }
    std::vector<Rational> y(rank());
    for (std::size_t i = 0; i < rank(); ++i) {
        y[i] = v[i] + m_shift[i];
    }
    Rational total = 0;
    for (std::size_t i = 0; i < rank(); ++i) {
        for (std::size_t j = 0; j < rank(); ++j) {
            total += y[i] * m_gram[i][j] * y[j];
        }
    }
    return total;
}

bool ShiftedLattice::integral_norms_on_box(long radius) const
{
    std::vector<long> v(rank(), -radius);
    while (true) {
        if (!is_integer(norm(v))) {
            return false;
        }
        std::size_t i = 0;
        while (i < v.size() && v[i] == radius) {
            v[i] = -radius;
            ++i;
        }
        if (i == v.size()) {
            return true;
        }
        ++v[i];
    }
}

ShiftedLattice lattice_L1()
{
    const Rational h(1, 2);
    return ShiftedLattice("L1", diagonal({4, 4, 2, 2}), {0, 0, h, h});
}

ShiftedLattice lattice_L2()
{
    const Rational h(1, 2);
    return ShiftedLattice("L2", diagonal({4, 4, 2, 2}), {h, h, h, h});
}

const std::vector<std::vector<long>> &e8_gram()
{
    static const std::vector<std::vector<long>> gram = {
        {4, -2, 0, 0, 0, 0, 0, 1},  {-2, 2, -1, 0, 0, 0, 0, 0}, {0, -1, 2, -1, 0, 0, 0, 0},
        {0, 0, -1, 2, -1, 0, 0, 0}, {0, 0, 0, -1, 2, -1, 0, 0}, {0, 0, 0, 0, -1, 2, -1, 0},
        {0, 0, 0, 0, 0, -1, 2, 0},  {1, 0, 0, 0, 0, 0, 0, 2},
    };
    return gram;
}

ShiftedLattice lattice_E8()
{
    RationalMatrix gram;
    for (const auto &row : e8_gram()) {
        gram.emplace_back(row.begin(), row.end());
    }
    static const bool unimodular_even = [&] {
        for (std::size_t i = 0; i < gram.size(); ++i) {
            if (e8_gram()[i][i] % 2 != 0) {
                return false;
            }
        }
        return determinant(gram) == 1;
    }();
    if (!unimodular_even) {
        throw std::logic_error("E8 Gram constant is not even unimodular");
    }
    return ShiftedLattice("E8", std::move(gram), std::vector<Rational>(8, Rational(0)), NormConvention::Half);
}

std::int64_t lattice_count(const ShiftedLattice &lattice, long n)
{
    if (n < 0) {
        throw std::invalid_argument("lattice_count needs n >= 0");
    }
    const FormEnumerator form(lattice);
    return form.count_exact(static_cast<i128>(n) * form.scale(), worker_count());
}

LatticeName parse_lattice_name(const std::string &text)
{
    if (text == "L1") {
        return LatticeName::L1;
    }
    if (text == "L2") {
        return LatticeName::L2;
    }
    if (text == "E8" || text == "E8-even") {
        return LatticeName::E8Even;
    }
    throw std::invalid_argument("unknown lattice '" + text + "', expected L1, L2 or E8");
}

std::string to_string(LatticeName name)
{
    switch (name) {
    case LatticeName::L1:
        return "L1";
    case LatticeName::L2:
        return "L2";
    case LatticeName::E8Even:
        return "E8";
    }
    return "?";
}

ShiftedLattice catalog_lattice(LatticeName name)
{
    switch (name) {
    case LatticeName::L1:
        return lattice_L1();
    case LatticeName::L2:
        return lattice_L2();
    case LatticeName::E8Even:
        return lattice_E8();
    }
    throw std::invalid_argument("unknown lattice");
}

BigInt lattice_count_formula(LatticeName name, long n)
{
    if (n < 1) {
        throw std::invalid_argument("lattice_count_formula needs n >= 1");
    }
    switch (name) {
    case LatticeName::L1:
        return 4 * sigma_gated(1, 1, 4, n);
    case LatticeName::L2:
        return 4 * sigma_gated(1, 3, 4, n);
    case LatticeName::E8Even:
        return 240 * sigma(3, n);
    }
    throw std::invalid_argument("unknown lattice");
}

ThetaSeries theta_series(const ShiftedLattice &lattice, int order)
{
    if (order < 1) {
        throw std::invalid_argument("theta_series needs order >= 1");
    }
    const FormEnumerator form(lattice);
    const bool half = lattice.convention() == NormConvention::Half;
    const i128 raw_bound = half ? 2 * static_cast<i128>(order) : static_cast<i128>(order);
    const i128 scale = form.scale();
    const unsigned workers = worker_count();
    std::vector<std::vector<std::int64_t>> buckets(workers, std::vector<std::int64_t>(raw_bound + 1, 0));
    const auto scale64 = static_cast<std::int64_t>(scale);
    if (scale64 == 1) {
        form.enumerate(raw_bound, workers, [&](unsigned worker, std::int64_t value, int mult) {
            buckets[worker][static_cast<std::size_t>(value)] += mult;
        });
    } else {
        form.enumerate(raw_bound * scale, workers, [&](unsigned worker, std::int64_t value, int mult) {
            if (value % scale64 == 0) {
                buckets[worker][static_cast<std::size_t>(value / scale64)] += mult;
            }
        });
    }
    ThetaSeries theta;
    theta.convention = lattice.convention();
    theta.counts.assign(static_cast<std::size_t>(order) + 1, 0);
    for (const auto &b : buckets) {
        for (std::size_t raw = 0; raw < b.size(); ++raw) {
            if (half) {
                if (raw % 2 == 0) {
                    theta.counts[raw / 2] += b[raw];
                }
            } else {
                theta.counts[raw] += b[raw];
            }
        }
    }
    return theta;
}

} // namespace macmahon
