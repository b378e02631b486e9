#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <string>

namespace spantree {

// Exact arithmetic carriers. Rationals are always normalized (positive
// denominator, lowest terms) by the backing library.
using BigInt = boost::multiprecision::mpz_int;
using BigRational = boost::multiprecision::mpq_rational;

// High-precision float for logs and display; 50 significant decimal digits.
using Real = boost::multiprecision::cpp_bin_float_50;

BigInt int_pow(const BigInt& base, unsigned exponent);
BigRational rational_pow(const BigRational& base, unsigned exponent);

Real to_real(const BigInt& v);
Real to_real(const BigRational& v);

// Renders an exact rational with a fixed number of decimals, rounding
// half away from zero.
std::string format_decimal(const BigRational& value, int digits);
std::string format_decimal(const Real& value, int digits);

// Largest multiple of 10^-digits that is <= value.
BigRational floor_to_grid(const Real& value, int digits);

// Rational upper bound on exp(x) for 0 <= x < 32, via truncated series
// plus a geometric tail bound. Used to certify directed log rounding.
BigRational exp_upper_bound(const BigRational& x);

// Largest grid rational a (denominator 10^digits) with a certified
// a <= ln(q). Requires q >= 1.
BigRational log_lower_grid(const BigRational& q, int digits = 12);

}  // namespace spantree
