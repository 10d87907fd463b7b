#include <macmahon/lehmer.hpp>

#include <stdexcept>

#include <macmahon/numtheory.hpp>

namespace macmahon {

PolySeries lehmer_exponent(int kmax)
{
    if (kmax < 1) {
        throw std::invalid_argument("lehmer polynomials need kmax >= 1");
    }
    const int order = 2 * kmax;
    const QSeries arc = arcsin2_series(order);
    const QSeries arc_sq = arc * arc;
    PolySeries exponent(order);
    QSeries arc_pow = arc_sq;
    for (int j = 1; j <= kmax; ++j) {
        Rational c = make_rational(2, factorial(static_cast<unsigned long>(2 * j)));
        if (j % 2 == 0) {
            c = -c;
        }
        const MultiPoly x = MultiPoly::variable(static_cast<unsigned>(2 * j));
        for (int n = 0; n <= order; ++n) {
            if (!is_zero(arc_pow[n])) {
                exponent[n] += x * Rational(c * arc_pow[n]);
            }
        }
        arc_pow *= arc_sq;
    }
    return exponent;
}

std::vector<MultiPoly> lehmer_polynomials(int kmax)
{
    const PolySeries gen = exp(lehmer_exponent(kmax));
    std::vector<MultiPoly> result;
    result.reserve(static_cast<std::size_t>(kmax));
    for (int k = 1; k <= kmax; ++k) {
        result.push_back(gen[2 * k]);
    }
    return result;
}

MultiPoly omega_polynomial(int k)
{
    if (k < 1) {
        throw std::invalid_argument("omega_polynomial needs k >= 1");
    }
    const MultiPoly lambda = lehmer_polynomials(k).back();
    std::vector<Rational> scale;
    for (int j = 1; j <= k; ++j) {
        scale.push_back(-bernoulli(static_cast<unsigned>(2 * j)));
    }
    Rational factor = Rational(factorial(static_cast<unsigned long>(2 * k))) /
                      (2 * bernoulli(static_cast<unsigned>(2 * k)));
    if (k % 2 != 0) {
        factor = -factor;
    }
    return lambda.scale_variables(scale) * factor;
}

QSeries evaluate_at_series(const MultiPoly &p, const std::map<unsigned, QSeries> &args)
{
    if (args.empty()) {
        throw std::invalid_argument("evaluate_at_series: at least one binding is needed to fix the order");
    }
    const int order = args.begin()->second.order();
    for (const auto &[idx, s] : args) {
        if (s.order() != order) {
            throw std::invalid_argument("evaluate_at_series: bound series must share one order");
        }
    }
    // Powers are cached per variable since Lambda_k reuses them heavily.
    std::map<std::pair<unsigned, unsigned>, QSeries> powers;
    auto power_of = [&](unsigned index, unsigned e) -> const QSeries & {
        auto key = std::make_pair(index, e);
        auto it = powers.find(key);
        if (it != powers.end()) {
            return it->second;
        }
        auto bound = args.find(index);
        if (bound == args.end()) {
            throw std::invalid_argument("evaluate_at_series: missing binding for x" + std::to_string(index));
        }
        QSeries value = e == 1 ? bound->second : pow(bound->second, e);
        return powers.emplace(key, std::move(value)).first->second;
    };

    QSeries result(order);
    for (const auto &[mono, coeff] : p.terms()) {
        QSeries term = QSeries::constant(coeff, order);
        for (std::size_t j = 0; j < mono.size(); ++j) {
            if (mono[j] != 0) {
                term *= power_of(static_cast<unsigned>(2 * (j + 1)), mono[j]);
            }
        }
        result += term;
    }
    return result;
}

} // namespace macmahon
