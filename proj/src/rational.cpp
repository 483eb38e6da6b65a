#include "orbijet/rational.hpp"

#include <cctype>

namespace orbijet {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw std::invalid_argument("empty rational literal");

    auto slash = s.find('/');
    if (slash != std::string::npos) {
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        return Rational(num, den);
    }

    auto dot = s.find('.');
    if (dot != std::string::npos) {
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        if (digits.empty() || digits == "-" || digits == "+")
            throw std::invalid_argument("bad rational literal '" + text + "'");
        BigInt num(digits);
        return Rational(num, int_pow(BigInt(10), static_cast<unsigned>(s.size() - dot - 1)));
    }

    return Rational(BigInt(s));
}

}  // namespace orbijet
