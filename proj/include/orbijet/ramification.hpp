#pragma once

#include "orbijet/rational.hpp"

#include <optional>
#include <string>

namespace orbijet {

// Ramification number rho in (1, infinity]. rho = infinity is the
// logarithmic case. Derived quantities are evaluated exactly; the
// order-s number rho^(s) = max(rho/s, 1) never needs to be materialized.
class Ramification {
public:
    static Ramification infinite() { return Ramification(); }

    static Ramification finite(Rational value) {
        if (value <= 1) throw std::invalid_argument("ramification number must exceed 1");
        Ramification r;
        r.value_ = std::move(value);
        return r;
    }

    // "inf" or a rational literal.
    static Ramification parse(const std::string& text) {
        if (text == "inf" || text == "infinity") return infinite();
        return finite(parse_rational(text));
    }

    bool is_infinite() const { return !value_.has_value(); }
    const Rational& value() const { return *value_; }  // finite only

    // (1 - s/rho)_+ ; equals 1 - 1/rho^(s). 1 in the logarithmic case.
    Rational fraction_lost(unsigned s) const {
        if (is_infinite()) return 1;
        Rational f = 1 - Rational(s) / *value_;
        return f > 0 ? f : Rational(0);
    }

    // d / rho^(s) = min(d*s/rho, d); 0 in the logarithmic case.
    Rational degree_over_order(const Rational& d, unsigned s) const {
        if (is_infinite()) return 0;
        Rational scaled = d * Rational(s) / *value_;
        return scaled < d ? scaled : d;
    }

    // d / rho; 0 in the logarithmic case.
    Rational degree_over(const Rational& d) const {
        if (is_infinite()) return 0;
        return d / *value_;
    }

    std::string str() const { return is_infinite() ? "inf" : to_string(*value_); }

private:
    Ramification() = default;
    std::optional<Rational> value_;
};

}  // namespace orbijet
