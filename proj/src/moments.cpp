#include "orbijet/moments.hpp"

#include <cmath>
#include <stdexcept>

namespace orbijet::moments {

Rational simplex_moment(const MultiIndex& p, int k, int r) {
    if (k < 1 || r < 1) throw std::invalid_argument("simplex_moment: k, r >= 1");
    if (static_cast<int>(p.size()) != k)
        throw std::invalid_argument("simplex_moment: exponent vector must have length k");
    long total = 0;
    BigInt num = factorial(static_cast<unsigned>(k) * r - 1);
    for (long ps : p) {
        if (ps < 0) throw std::invalid_argument("simplex_moment: negative exponent");
        total += ps;
        num *= factorial(static_cast<unsigned>(ps + r - 1));
    }
    BigInt den = int_pow(factorial(static_cast<unsigned>(r - 1)), static_cast<unsigned>(k)) *
                 factorial(static_cast<unsigned>(total + static_cast<long>(k) * r - 1));
    return Rational(num, den);
}

Rational sphere_power_moment(long p, int r) {
    if (p < 0 || r < 1) throw std::invalid_argument("sphere_power_moment: p >= 0, r >= 1");
    return Rational(factorial(static_cast<unsigned>(p)) * factorial(static_cast<unsigned>(r - 1)),
                    factorial(static_cast<unsigned>(p + r - 1)));
}

Rational sphere_product_moment(long p, int r) {
    if (r < 1) throw std::invalid_argument("sphere_product_moment: r >= 1");
    if (p < 0 || p > r)
        throw std::invalid_argument("sphere_product_moment: requires 0 <= p <= r");
    return Rational(factorial(static_cast<unsigned>(r - 1)),
                    factorial(static_cast<unsigned>(p + r - 1)));
}

Rational fiber_volume(int k, int r) {
    if (k < 1 || r < 1) throw std::invalid_argument("fiber_volume: k, r >= 1");
    return Rational(1, int_pow(factorial(static_cast<unsigned>(k)), static_cast<unsigned>(r)));
}

Rational harmonic_weight(int k, int r) {
    if (k < 1 || r < 1) throw std::invalid_argument("harmonic_weight: k, r >= 1");
    return harmonic(static_cast<unsigned>(k)) / (static_cast<long>(k) * r);
}

double gg_prefactor(int n, int r, int k, long m) {
    if (k < 2) throw std::invalid_argument("gg_prefactor: requires k >= 2");
    if (m < 1) throw std::invalid_argument("gg_prefactor: requires m >= 1");
    if (n < 1 || r < 1) throw std::invalid_argument("gg_prefactor: n, r >= 1");
    const double top = n + static_cast<double>(k) * r - 1;
    double log_value = top * std::log(static_cast<double>(m)) - std::lgamma(top + 1.0) +
                       n * std::log(std::log(static_cast<double>(k))) -
                       std::lgamma(n + 1.0) - r * std::lgamma(k + 1.0);
    return std::exp(log_value);
}

}  // namespace orbijet::moments
