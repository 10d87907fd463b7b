#include <macmahon/macmahon.hpp>

#include <map>
#include <stdexcept>

#include <macmahon/eisenstein.hpp>
#include <macmahon/lehmer.hpp>

namespace macmahon {

MacMahonParams::MacMahonParams(ResidueClassSet classes_, Sign eps_, int k_)
    : classes(std::move(classes_)), eps(eps_), k(k_)
{
    if (k < 1) {
        throw std::invalid_argument("MacMahon functions need k >= 1");
    }
}

MacMahonParams variant_params(char letter, int k)
{
    switch (letter) {
    case 'A':
        return {ResidueClassSet(1, {0}), Sign::Plus, k};
    case 'B':
        return {ResidueClassSet(1, {0}), Sign::Minus, k};
    case 'C':
        return {ResidueClassSet(2, {1}), Sign::Plus, k};
    case 'D':
        return {ResidueClassSet(2, {1}), Sign::Minus, k};
    case 'E':
        return {ResidueClassSet(5, {1, 4}), Sign::Plus, k};
    case 'F':
        return {ResidueClassSet(5, {1, 4}), Sign::Minus, k};
    case 'G':
        return {ResidueClassSet(5, {2, 3}), Sign::Plus, k};
    case 'H':
        return {ResidueClassSet(5, {2, 3}), Sign::Minus, k};
    default:
        throw std::invalid_argument(std::string("unknown MacMahon variant '") + letter + "', expected A..H");
    }
}

int variant_sign(char letter, int k)
{
    const MacMahonParams p = variant_params(letter, k);
    return (p.eps == Sign::Minus && k % 2 != 0) ? -1 : 1;
}

std::vector<BigInt> macmahon_coefficients(const MacMahonParams &p, int order)
{
    if (order < 1) {
        throw std::invalid_argument("macmahon_series needs order >= 1");
    }
    const auto len = static_cast<std::size_t>(order) + 1;
    const bool minus = p.eps == Sign::Minus;
    // layers[j] is the t^j coefficient of the partial product.
    std::vector<std::vector<BigInt>> layers(static_cast<std::size_t>(p.k) + 1, std::vector<BigInt>(len, 0));
    layers[0][0] = 1;
    std::vector<BigInt> h(len);
    int used = 0;
    for (int m = 1; m <= order; ++m) {
        if (!p.classes.contains(m)) {
            continue;
        }
        ++used;
        // Multiply layer j-1 by eps q^m / (1 - eps q^m)^2 and add into layer j;
        // descending j so each factor contributes at most once.
        for (int j = std::min(used, p.k); j >= 1; --j) {
            const auto &src = layers[static_cast<std::size_t>(j - 1)];
            for (int n = 0; n < m; ++n) {
                h[n] = 0;
            }
            for (int n = m; n <= order; ++n) {
                if (minus) {
                    h[n] = -src[n - m];
                } else {
                    h[n] = src[n - m];
                }
            }
            for (int pass = 0; pass < 2; ++pass) {
                for (int n = 2 * m; n <= order; ++n) {
                    if (minus) {
                        h[n] -= h[n - m];
                    } else {
                        h[n] += h[n - m];
                    }
                }
            }
            auto &dst = layers[static_cast<std::size_t>(j)];
            for (int n = m; n <= order; ++n) {
                dst[n] += h[n];
            }
        }
    }
    return std::move(layers.back());
}

QSeries macmahon_series(const MacMahonParams &p, int order)
{
    const auto coeffs = macmahon_coefficients(p, order);
    QSeries s(order);
    for (int n = 0; n <= order; ++n) {
        s[n] = coeffs[static_cast<std::size_t>(n)];
    }
    return s;
}

QSeries variant_series(char letter, int k, int order)
{
    return macmahon_series(variant_params(letter, k), order) * Rational(variant_sign(letter, k));
}

namespace {

struct BruteForce
{
    const MacMahonParams &p;
    std::vector<long> widths;
    BigInt total = 0;

    // Sum of widths[idx..idx+count-1], or -1 when fewer than count remain.
    long tail_min(std::size_t idx, int count) const
    {
        if (idx + static_cast<std::size_t>(count) > widths.size()) {
            return -1;
        }
        long s = 0;
        for (int i = 0; i < count; ++i) {
            s += widths[idx + static_cast<std::size_t>(i)];
        }
        return s;
    }

    void run(int placed, std::size_t start, long remaining, const BigInt &weight)
    {
        if (placed == p.k) {
            if (remaining == 0) {
                total += weight;
            }
            return;
        }
        const int after = p.k - placed - 1;
        for (std::size_t idx = start; idx < widths.size(); ++idx) {
            const long m = widths[idx];
            const long rest = tail_min(idx + 1, after);
            if (rest < 0 || m + rest > remaining) {
                break;
            }
            for (long d = 1; m * d + rest <= remaining; ++d) {
                BigInt w = weight * d;
                if (p.eps == Sign::Minus && d % 2 != 0) {
                    w = -w;
                }
                run(placed + 1, idx + 1, remaining - m * d, w);
            }
        }
    }
};

} // namespace

BigInt macmahon_bruteforce(const MacMahonParams &p, long n)
{
    if (n < 1) {
        throw std::invalid_argument("macmahon_bruteforce needs n >= 1");
    }
    BruteForce bf{p, {}};
    for (long m = 1; m <= n; ++m) {
        if (p.classes.contains(m)) {
            bf.widths.push_back(m);
        }
    }
    bf.run(0, 0, n, BigInt(1));
    return bf.total;
}

long minimal_support(const MacMahonParams &p)
{
    long sum = 0;
    int found = 0;
    for (long m = 1; found < p.k; ++m) {
        if (p.classes.contains(m)) {
            sum += m;
            ++found;
        }
    }
    return sum;
}

QSeries lehmer_side(const MacMahonParams &p, int order)
{
    const MultiPoly lambda = lehmer_polynomials(p.k).back();
    std::map<unsigned, QSeries> args;
    for (int j = 1; j <= p.k; ++j) {
        args.emplace(static_cast<unsigned>(2 * j), eisenstein_g(p.classes, p.eps, 2 * j, order));
    }
    return evaluate_at_series(lambda, args);
}

MainIdentitySides main_identity_sides(const MacMahonParams &p, int order)
{
    return {macmahon_series(p, order), lehmer_side(p, order)};
}

namespace {

std::string describe(const MacMahonParams &p)
{
    return "A_{" + p.classes.to_string() + ", eps=" + to_string(p.eps) + ", k=" + std::to_string(p.k) + "}";
}

} // namespace

IdentityReport verify_main_identity(const MacMahonParams &p, int order)
{
    const auto sides = main_identity_sides(p, order);
    return compare_series(describe(p), sides.direct, sides.lehmer);
}

IdentityReport verify_variant_identity(char letter, int k, int order)
{
    const MacMahonParams p = variant_params(letter, k);
    const Rational sign = variant_sign(letter, k);
    return compare_series(std::string(1, letter) + "_" + std::to_string(k), variant_series(letter, k, order),
                          lehmer_side(p, order) * sign);
}

LabelledDecomposition decompose_level2_macmahon(int k, int order)
{
    if (k < 1 || k > 4) {
        throw std::invalid_argument("level 2 decompositions are available for k = 1..4");
    }
    LabelledDecomposition out;
    std::vector<QSeries> basis;
    for (auto &element : level2_quasimodular_basis(2 * k, order)) {
        out.labels.push_back(std::move(element.label));
        basis.push_back(std::move(element.series));
    }
    const QSeries target = variant_series('C', k, order);
    out.result = decompose_in_basis(target, basis, default_probe(basis.size()));
    return out;
}

} // namespace macmahon
