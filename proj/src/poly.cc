#include "lrcdec/poly.hpp"

#include <algorithm>

#include "lrcdec/errors.hpp"

namespace lrcdec::gf {

Poly Poly::monomial(std::size_t deg, Elem c) {
  std::vector<Elem> v(deg + 1, 0);
  v[deg] = c;
  return Poly(std::move(v));
}

Elem eval(const Field& F, const Poly& f, Elem x) {
  Elem acc = 0;
  const auto& c = f.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

Poly add(const Field& F, const Poly& a, const Poly& b) {
  std::vector<Elem> r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(a.coeff(i), b.coeff(i));
  return Poly(std::move(r));
}

Poly sub(const Field& F, const Poly& a, const Poly& b) {
  std::vector<Elem> r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(a.coeff(i), b.coeff(i));
  return Poly(std::move(r));
}

Poly scale(const Field& F, const Poly& a, Elem c) {
  std::vector<Elem> r(a.coeffs());
  for (auto& v : r) v = F.mul(v, c);
  return Poly(std::move(r));
}

Poly mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Elem> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Elem ai = a.coeff(i);
    if (ai == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(ai, b.coeff(j)));
  }
  return Poly(std::move(r));
}

std::pair<Poly, Poly> divmod(const Field& F, const Poly& f, const Poly& g) {
  if (g.is_zero()) throw DomainError("polynomial division by zero");
  if (f.size() < g.size()) return {Poly{}, f};
  std::vector<Elem> rem(f.coeffs());
  std::vector<Elem> quo(f.size() - g.size() + 1, 0);
  const Elem lead_inv = F.inv(g.leading());
  const std::size_t dg = g.size() - 1;
  for (std::size_t i = rem.size(); i-- > dg;) {
    const Elem c = F.mul(rem[i], lead_inv);
    if (c == 0) continue;
    const std::size_t shift = i - dg;
    quo[shift] = c;
    for (std::size_t j = 0; j <= dg; ++j) rem[shift + j] = F.sub(rem[shift + j], F.mul(c, g.coeff(j)));
  }
  rem.resize(dg);
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

Poly gcd(const Field& F, Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(F, a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return scale(F, a, F.inv(a.leading()));
}

Poly derivative(const Field& F, const Poly& f) {
  if (f.size() < 2) return {};
  std::vector<Elem> r(f.size() - 1, 0);
  for (std::size_t i = 1; i < f.size(); ++i) r[i - 1] = F.mul(F.from_int(i), f.coeff(i));
  return Poly(std::move(r));
}

Poly from_roots(const Field& F, const std::vector<Elem>& roots) {
  std::vector<Elem> r{1};
  for (Elem b : roots) {
    // multiply by (x - b)
    r.push_back(0);
    for (std::size_t i = r.size() - 1; i > 0; --i) r[i] = F.sub(r[i - 1], F.mul(b, r[i]));
    r[0] = F.neg(F.mul(b, r[0]));
  }
  return Poly(std::move(r));
}

Poly lagrange_basis(const Field& F, const std::vector<Elem>& xs, std::size_t j) {
  std::vector<Elem> others;
  others.reserve(xs.size());
  Elem denom = 1;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i == j) continue;
    if (xs[i] == xs[j]) throw ConfigError("duplicate interpolation abscissa");
    others.push_back(xs[i]);
    denom = F.mul(denom, F.sub(xs[j], xs[i]));
  }
  return scale(F, from_roots(F, others), F.inv(denom));
}

Poly lagrange_interpolate(const Field& F, const std::vector<Elem>& xs, const std::vector<Elem>& ys) {
  if (xs.size() != ys.size()) throw ConfigError("interpolation points and values differ in length");
  const std::size_t n = xs.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (xs[i] == xs[j]) throw ConfigError("duplicate interpolation abscissa");
    }
  }
  if (n == 0) return {};
  // Newton divided differences, then expansion into the monomial basis.
  std::vector<Elem> dd(ys);
  for (std::size_t lvl = 1; lvl < n; ++lvl) {
    for (std::size_t i = n - 1; i >= lvl; --i) {
      dd[i] = F.div(F.sub(dd[i], dd[i - 1]), F.sub(xs[i], xs[i - lvl]));
    }
  }
  std::vector<Elem> acc{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    // acc = acc * (x - xs[i]) + dd[i]
    acc.push_back(0);
    for (std::size_t t = acc.size() - 1; t > 0; --t) acc[t] = F.sub(acc[t - 1], F.mul(xs[i], acc[t]));
    acc[0] = F.add(F.neg(F.mul(xs[i], acc[0])), dd[i]);
  }
  return Poly(std::move(acc));
}

}  // namespace lrcdec::gf
