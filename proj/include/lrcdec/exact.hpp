#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace lrcdec {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

BigInt binomial(std::int64_t n, std::int64_t k);
BigInt ipow(const BigInt& base, std::uint64_t e);
Rational ipow(const Rational& base, std::uint64_t e);

// Correctly scaled conversions for values whose numerator and denominator
// individually overflow a double.
double to_double(const Rational& r);
double to_double(const BigInt& v);
// log10 of a positive rational; -inf for zero.
double log10_of(const Rational& r);

// "num/den" (or "num" when den = 1).
std::string to_string(const Rational& r);
std::string to_string(const BigInt& v);

// Shortest round-trip representation of a double.
std::string format_double(double v);
// Fixed significant-digit representation ("%.6g" style, '.' decimal point).
std::string format_sig(double v, int digits = 6);

}  // namespace lrcdec
