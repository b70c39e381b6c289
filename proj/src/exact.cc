#include "lrcdec/exact.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

#include "lrcdec/errors.hpp"

namespace lrcdec {

namespace mp = boost::multiprecision;

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigInt ipow(const BigInt& base, std::uint64_t e) {
  BigInt r = 1, b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

Rational ipow(const Rational& base, std::uint64_t e) {
  Rational r = 1, b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

namespace {

// Returns (mantissa, exponent) with |v| ~ mantissa * 2^exponent and the
// mantissa holding the top 64 bits.
std::pair<double, std::int64_t> split(const BigInt& v) {
  const BigInt a = mp::abs(v);
  if (a == 0) return {0.0, 0};
  const std::int64_t bits = static_cast<std::int64_t>(mp::msb(a)) + 1;
  const std::int64_t shift = bits > 64 ? bits - 64 : 0;
  const BigInt top = a >> shift;
  double m = static_cast<double>(top.convert_to<std::uint64_t>());
  if (v < 0) m = -m;
  return {m, shift};
}

}  // namespace

double to_double(const BigInt& v) {
  auto [m, e] = split(v);
  return std::ldexp(m, static_cast<int>(std::min<std::int64_t>(e, 100000)));
}

double to_double(const Rational& r) {
  const BigInt num = mp::numerator(r), den = mp::denominator(r);
  if (num == 0) return 0.0;
  auto [mn, en] = split(num);
  auto [md, ed] = split(den);
  const std::int64_t e = en - ed;
  if (e > 5000) return mn > 0 ? std::numeric_limits<double>::infinity() : -std::numeric_limits<double>::infinity();
  if (e < -5000) return 0.0;
  return std::ldexp(mn / md, static_cast<int>(e));
}

double log10_of(const Rational& r) {
  if (r < 0) throw DomainError("log10 of a negative value");
  const BigInt num = mp::numerator(r), den = mp::denominator(r);
  if (num == 0) return -std::numeric_limits<double>::infinity();
  auto [mn, en] = split(num);
  auto [md, ed] = split(den);
  return std::log10(mn / md) + static_cast<double>(en - ed) * std::log10(2.0);
}

std::string to_string(const BigInt& v) { return v.str(); }

std::string to_string(const Rational& r) {
  const BigInt den = mp::denominator(r);
  if (den == 1) return mp::numerator(r).str();
  return mp::numerator(r).str() + "/" + den.str();
}

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string format_sig(double v, int digits) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, digits);
  return std::string(buf, res.ptr);
}

}  // namespace lrcdec
