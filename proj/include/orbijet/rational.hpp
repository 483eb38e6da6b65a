#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace orbijet {

using BigInt = boost::multiprecision::cpp_int;

// Arbitrary-precision rational, always reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

inline std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

// n!, memoized. The table only grows, under a lock.
inline BigInt factorial(unsigned n) {
    static std::vector<BigInt> table{BigInt(1)};
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    while (table.size() <= n) table.push_back(table.back() * BigInt(table.size()));
    return table[n];
}

inline BigInt binomial(const BigInt& n, unsigned k) {
    if (n < 0) throw std::invalid_argument("binomial: negative n");
    if (BigInt(k) > n) return 0;
    BigInt num = 1;
    for (unsigned i = 1; i <= k; ++i) {
        num *= n - BigInt(k - i);
        num /= i;  // exact at every step: product of i consecutive integers
    }
    return num;
}

inline Rational rat_pow(const Rational& base, unsigned exp) {
    Rational out = 1, b = base;
    while (exp) {
        if (exp & 1u) out *= b;
        b *= b;
        exp >>= 1u;
    }
    return out;
}

// 1 + 1/2 + ... + 1/k
inline Rational harmonic(unsigned k) {
    Rational h = 0;
    for (unsigned s = 1; s <= k; ++s) h += Rational(1, s);
    return h;
}

inline BigInt int_pow(const BigInt& base, unsigned exp) {
    BigInt out = 1, b = base;
    while (exp) {
        if (exp & 1u) out *= b;
        b *= b;
        exp >>= 1u;
    }
    return out;
}

// Accepts "p/q", plain integers, and decimal literals ("2.5" -> 5/2).
Rational parse_rational(const std::string& text);

}  // namespace orbijet
