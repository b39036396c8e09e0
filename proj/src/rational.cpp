#include "pin/rational.hpp"

#include <stdexcept>

namespace pin {

Rational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    if (den < 0) return Rational(-num, -den);
    return Rational(num, den);
}

BigInt floor_rational(const Rational& r) {
    BigInt n = numerator(r);
    BigInt d = denominator(r); // > 0 by canonical form
    if (n >= 0) return n / d;
    return -((-n + d - 1) / d);
}

BigInt ceil_rational(const Rational& r) { return -floor_rational(-r); }

bool is_integer(const Rational& r) { return denominator(r) == 1; }

std::string to_string(const Rational& r) {
    if (is_integer(r)) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace pin
