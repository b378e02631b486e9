#include "spantree/numeric.hpp"

#include <boost/multiprecision/number.hpp>

#include "spantree/errors.hpp"

namespace spantree {

BigInt int_pow(const BigInt& base, unsigned exponent) {
    return boost::multiprecision::pow(base, exponent);
}

BigRational rational_pow(const BigRational& base, unsigned exponent) {
    return BigRational(int_pow(numerator(base), exponent), int_pow(denominator(base), exponent));
}

Real to_real(const BigInt& v) { return Real(v); }

Real to_real(const BigRational& v) { return Real(numerator(v)) / Real(denominator(v)); }

std::string format_decimal(const BigRational& value, int digits) {
    BigInt num = numerator(value);
    BigInt den = denominator(value);
    const bool negative = num < 0;
    if (negative) num = -num;

    const BigInt scale = int_pow(BigInt(10), static_cast<unsigned>(digits));
    BigInt q = (num * scale) / den;
    const BigInt rem = num * scale - q * den;
    if (2 * rem >= den) ++q;  // half away from zero

    std::string s = q.str();
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    if (digits > 0) s.insert(s.size() - digits, ".");
    if (negative && q != 0) s.insert(0, "-");
    return s;
}

namespace {

// Exact conversion: a binary float is a rational with power-of-two denominator.
BigRational real_to_rational(const Real& value) {
    if (value == 0) return BigRational(0);
    int exponent = 0;
    Real mantissa = frexp(value, &exponent);
    // cpp_bin_float_50 carries 168 mantissa bits.
    constexpr int kBits = std::numeric_limits<Real>::digits;
    const Real scaled = ldexp(mantissa, kBits);
    const BigInt m = scaled.convert_to<BigInt>();
    const int shift = exponent - kBits;
    if (shift >= 0) return BigRational(m * int_pow(BigInt(2), static_cast<unsigned>(shift)));
    return BigRational(m, int_pow(BigInt(2), static_cast<unsigned>(-shift)));
}

}  // namespace

std::string format_decimal(const Real& value, int digits) {
    return format_decimal(real_to_rational(value), digits);
}

BigRational floor_to_grid(const Real& value, int digits) {
    const BigInt scale = int_pow(BigInt(10), static_cast<unsigned>(digits));
    const BigRational exact = real_to_rational(value) * BigRational(scale);
    BigInt q = numerator(exact) / denominator(exact);
    if (exact < 0 && BigRational(q) != exact) --q;  // true floor
    return BigRational(q, scale);
}

BigRational exp_upper_bound(const BigRational& x) {
    if (x < 0 || x >= 32) throw PreconditionError("exp_upper_bound: argument out of [0, 32)");
    constexpr unsigned kTerms = 64;
    BigRational sum(1);
    BigRational term(1);
    for (unsigned k = 1; k < kTerms; ++k) {
        term *= x;
        term /= BigInt(k);
        sum += term;
    }
    // tail: sum_{k>=N} x^k/k! <= x^N/N! * 1/(1 - x/(N+1))
    BigRational tail = term * x / BigInt(kTerms);
    tail /= (BigRational(1) - x / BigInt(kTerms + 1));
    return sum + tail;
}

BigRational log_lower_grid(const BigRational& q, int digits) {
    if (q < 1) throw PreconditionError("log_lower_grid: argument must be >= 1");
    if (q == 1) return BigRational(0);
    const BigRational grid(BigInt(1), int_pow(BigInt(10), static_cast<unsigned>(digits)));
    BigRational a = floor_to_grid(log(to_real(q)), digits);
    while (a > 0 && !(exp_upper_bound(a) <= q)) a -= grid;
    if (a < 0) a = 0;  // q > 1, so 0 is always a valid lower bound
    return a;
}

}  // namespace spantree
