#ifndef PIN_RATIONAL_HPP
#define PIN_RATIONAL_HPP

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace pin {

// Exact rational arithmetic, always canonical (denominator > 0, lowest terms).
// Expression templates are off so that `auto` and containers behave as for a
// plain value type.
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;
using BigInt =
    boost::multiprecision::number<boost::multiprecision::gmp_int,
                                  boost::multiprecision::et_off>;

// The raw two-argument Rational constructor does not canonicalize a negative
// denominator; route all num/den construction through here.
Rational make_rational(const BigInt& num, const BigInt& den);

BigInt floor_rational(const Rational& r);
BigInt ceil_rational(const Rational& r);
bool is_integer(const Rational& r);

// Renders "p/q", or just "p" when q == 1.
std::string to_string(const Rational& r);

} // namespace pin

#endif
