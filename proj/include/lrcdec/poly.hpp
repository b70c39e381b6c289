#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "lrcdec/field.hpp"

namespace lrcdec::gf {

// Polynomial degree. The empty optional is -infinity, the degree of the zero
// polynomial; std::optional orders it below every engaged value.
using Degree = std::optional<std::size_t>;

// Univariate polynomial, coefficients lowest degree first, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<Elem> coeffs) : c_(std::move(coeffs)) { normalize(); }
  static Poly constant(Elem c) { return Poly(std::vector<Elem>{c}); }
  static Poly monomial(std::size_t deg, Elem c = 1);

  Degree degree() const {
    if (c_.empty()) return std::nullopt;
    return c_.size() - 1;
  }
  bool is_zero() const { return c_.empty(); }
  // Coefficient of x^i, zero beyond the stored range.
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Elem leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<Elem>& coeffs() const { return c_; }
  std::size_t size() const { return c_.size(); }

  bool operator==(const Poly&) const = default;

 private:
  void normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Elem> c_;
};

Elem eval(const Field& F, const Poly& f, Elem x);
Poly add(const Field& F, const Poly& a, const Poly& b);
Poly sub(const Field& F, const Poly& a, const Poly& b);
Poly scale(const Field& F, const Poly& a, Elem c);
Poly mul(const Field& F, const Poly& a, const Poly& b);
// f = q*g + r with deg r < deg g. Throws DomainError for g = 0.
std::pair<Poly, Poly> divmod(const Field& F, const Poly& f, const Poly& g);
// Monic greatest common divisor (zero if both inputs are zero).
Poly gcd(const Field& F, Poly a, Poly b);
Poly derivative(const Field& F, const Poly& f);
// prod (x - r) over the given roots.
Poly from_roots(const Field& F, const std::vector<Elem>& roots);
// Unique polynomial of degree < xs.size() through (xs[i], ys[i]).
// Throws ConfigError on duplicate abscissae.
Poly lagrange_interpolate(const Field& F, const std::vector<Elem>& xs, const std::vector<Elem>& ys);
// Lagrange basis polynomial lambda_j with lambda_j(xs[i]) = [i == j].
Poly lagrange_basis(const Field& F, const std::vector<Elem>& xs, std::size_t j);

}  // namespace lrcdec::gf
