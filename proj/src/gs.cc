#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "lrcdec/errors.hpp"
#include "lrcdec/exact.hpp"
#include "lrcdec/grs.hpp"

namespace lrcdec::grs {

namespace {

std::int64_t isqrt(std::int64_t v) {
  if (v <= 0) return 0;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

// Number of monomials x^i y^j with i + v*j <= D.
std::size_t monomial_count(std::size_t D, std::size_t v) {
  std::size_t count = 0;
  for (std::size_t j = 0; j * v <= D; ++j) count += D - j * v + 1;
  return count;
}

// Q(x, y) = sum_j Q[j](x) y^j
using Bivar = std::vector<Poly>;

void trim(Bivar& q) {
  while (!q.empty() && q.back().is_zero()) q.pop_back();
}

class PascalModP {
 public:
  PascalModP(const Field& F, std::size_t max) : rows_(max + 1) {
    for (std::size_t i = 0; i <= max; ++i) {
      rows_[i].assign(i + 1, 1);
      for (std::size_t j = 1; j < i; ++j) rows_[i][j] = F.add(rows_[i - 1][j - 1], rows_[i - 1][j]);
    }
  }
  Elem operator()(std::size_t i, std::size_t j) const { return j > i ? 0 : rows_[i][j]; }

 private:
  std::vector<std::vector<Elem>> rows_;
};

Bivar interpolate(const Field& F, const std::vector<Elem>& xs, const std::vector<Elem>& ys, std::size_t s,
                  std::size_t D, std::size_t v) {
  std::vector<std::pair<std::size_t, std::size_t>> monos;  // (i, j)
  for (std::size_t j = 0; j * v <= D; ++j) {
    for (std::size_t i = 0; i + j * v <= D; ++i) monos.emplace_back(i, j);
  }
  std::size_t max_j = D / v;
  PascalModP binom(F, std::max(D, max_j));
  const std::size_t n = xs.size();
  gf::Matrix A(n * s * (s + 1) / 2, monos.size());
  std::vector<Elem> px(D + 1), py(max_j + 1);
  std::size_t row = 0;
  for (std::size_t pt = 0; pt < n; ++pt) {
    px[0] = py[0] = 1;
    for (std::size_t e = 1; e <= D; ++e) px[e] = F.mul(px[e - 1], xs[pt]);
    for (std::size_t e = 1; e <= max_j; ++e) py[e] = F.mul(py[e - 1], ys[pt]);
    for (std::size_t a = 0; a < s; ++a) {
      for (std::size_t b = 0; a + b < s; ++b) {
        for (std::size_t c = 0; c < monos.size(); ++c) {
          auto [i, j] = monos[c];
          if (i < a || j < b) continue;
          const Elem coef = F.mul(binom(i, a), binom(j, b));
          if (coef == 0) continue;
          A(row, c) = F.mul(coef, F.mul(px[i - a], py[j - b]));
        }
        ++row;
      }
    }
  }
  const gf::Matrix kernel = gf::nullspace(F, A);
  if (kernel.rows() == 0) throw DomainError("interpolation system has no nonzero solution");
  std::vector<std::vector<Elem>> coeffs(max_j + 1, std::vector<Elem>(D + 1, 0));
  for (std::size_t c = 0; c < monos.size(); ++c) coeffs[monos[c].second][monos[c].first] = kernel(0, c);
  Bivar q;
  for (auto& cj : coeffs) q.emplace_back(std::move(cj));
  trim(q);
  return q;
}

std::vector<Elem> roots_in_field(const Field& F, const Poly& u) {
  std::vector<Elem> roots;
  if (u.is_zero()) return roots;
  for (Elem e = 0; e < F.order(); ++e) {
    if (gf::eval(F, u, e) == 0) roots.push_back(e);
    if (roots.size() == *u.degree()) break;
  }
  return roots;
}

// Q(x, x*y + g)
Bivar substitute(const Field& F, const Bivar& q, Elem g, const PascalModP& binom) {
  Bivar out(q.size());
  std::vector<Elem> gpow(q.size() + 1, 1);
  for (std::size_t e = 1; e < gpow.size(); ++e) gpow[e] = F.mul(gpow[e - 1], g);
  for (std::size_t l = 0; l < q.size(); ++l) {
    Poly acc;
    for (std::size_t j = l; j < q.size(); ++j) {
      const Elem c = F.mul(binom(j, l), gpow[j - l]);
      if (c == 0 || q[j].is_zero()) continue;
      acc = gf::add(F, acc, gf::scale(F, q[j], c));
    }
    if (acc.is_zero()) continue;
    std::vector<Elem> shifted(l, 0);
    shifted.insert(shifted.end(), acc.coeffs().begin(), acc.coeffs().end());
    out[l] = Poly(std::move(shifted));
  }
  trim(out);
  return out;
}

// Roth-Ruckenstein search for all f with deg f < k and (y - f(x)) | Q.
void roth_ruckenstein(const Field& F, Bivar q, std::size_t depth, std::size_t k, std::vector<Elem>& f,
                      const PascalModP& binom, std::vector<Poly>& out) {
  trim(q);
  if (q.empty()) return;
  std::size_t m = SIZE_MAX;
  for (const auto& qj : q) {
    if (qj.is_zero()) continue;
    std::size_t low = 0;
    while (qj.coeff(low) == 0) ++low;
    m = std::min(m, low);
  }
  if (m > 0) {
    for (auto& qj : q) {
      if (qj.is_zero()) continue;
      qj = Poly(std::vector<Elem>(qj.coeffs().begin() + static_cast<std::ptrdiff_t>(m), qj.coeffs().end()));
    }
  }
  std::vector<Elem> u(q.size());
  for (std::size_t j = 0; j < q.size(); ++j) u[j] = q[j].coeff(0);
  for (Elem g : roots_in_field(F, Poly(u))) {
    f[depth] = g;
    if (depth + 1 == k) {
      out.emplace_back(f);
    } else {
      roth_ruckenstein(F, substitute(F, q, g, binom), depth + 1, k, f, binom, out);
    }
  }
}

}  // namespace

std::int64_t gs_radius(std::int64_t n, std::int64_t d) {
  if (d > n || d < 0) throw ConfigError("GS radius needs 0 <= d <= n");
  return n - 1 - isqrt(n * (n - d));
}

GsParams gs_params(std::size_t n, std::size_t k, std::size_t t) {
  if (k < 2) throw ConfigError("GS parameters need k >= 2");
  if (t >= n) throw ConfigError("GS radius must be below the length");
  const std::size_t v = k - 1;
  for (std::size_t s = 1; s <= 400; ++s) {
    const std::size_t D = s * (n - t) - 1;
    if (monomial_count(D, v) > n * s * (s + 1) / 2) return GsParams{s, D};
  }
  throw ConfigError("GS radius not reachable with a bounded multiplicity");
}

std::vector<Word> gs_list_decode(const GrsCode& code, const Word& received, std::size_t t) {
  if (received.size() != code.n()) throw ConfigError("received word length mismatch");
  const auto n = static_cast<std::int64_t>(code.n());
  if (static_cast<std::int64_t>(t) > gs_radius(n, static_cast<std::int64_t>(code.d()))) {
    throw ConfigError("GS radius outside the guaranteed region");
  }
  const Field& F = code.field();
  std::vector<Word> out;
  if (t == 0) {
    if (is_codeword(code, received)) out.push_back(received);
    return out;
  }
  if (code.k() == 0) {
    if (weight(received) <= t) out.emplace_back(code.n(), 0);
    return out;
  }
  std::vector<Elem> ys(code.n());
  for (std::size_t i = 0; i < code.n(); ++i) ys[i] = F.div(received[i], code.multipliers()[i]);

  std::vector<Poly> candidates;
  if (code.k() == 1) {
    std::map<Elem, std::size_t> freq;
    for (Elem y : ys) ++freq[y];
    for (auto [c, cnt] : freq) {
      if (cnt + t >= code.n()) candidates.push_back(Poly::constant(c));
    }
  } else {
    const GsParams par = gs_params(code.n(), code.k(), t);
    const Bivar q = interpolate(F, code.locators(), ys, par.multiplicity, par.weighted_degree, code.k() - 1);
    PascalModP binom(F, q.size() + 1);
    std::vector<Elem> f(code.k(), 0);
    roth_ruckenstein(F, q, 0, code.k(), f, binom, candidates);
  }
  std::set<Word> seen;
  for (const auto& f : candidates) {
    Word c = encode(code, f);
    if (hamming_distance(c, received) <= t && seen.insert(c).second) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace lrcdec::grs
