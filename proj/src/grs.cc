#include "lrcdec/grs.hpp"

#include <algorithm>
#include <string>

#include "lrcdec/errors.hpp"

namespace lrcdec::grs {

GrsCode::GrsCode(Field field, std::vector<Elem> locators, std::vector<Elem> multipliers, std::size_t k)
    : field_(std::move(field)), locators_(std::move(locators)), multipliers_(std::move(multipliers)), k_(k) {
  const std::size_t n = locators_.size();
  if (multipliers_.size() != n) throw ConfigError("GRS: locators and multipliers differ in length");
  if (n == 0) throw ConfigError("GRS: empty code");
  if (k_ > n) throw ConfigError("GRS: dimension exceeds length");
  if (n > field_.order()) throw ConfigError("GRS: length exceeds field order");
  for (std::size_t i = 0; i < n; ++i) {
    if (!field_.contains(locators_[i]) || !field_.contains(multipliers_[i])) {
      throw ConfigError("GRS: symbol outside the field");
    }
    if (multipliers_[i] == 0) throw ConfigError("GRS: zero column multiplier");
  }
  std::vector<Elem> sorted(locators_);
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw ConfigError("GRS: locators are not distinct");
  }
  const Field& F = field_;
  dual_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    Elem prod = multipliers_[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) prod = F.mul(prod, F.sub(locators_[i], locators_[j]));
    }
    dual_[i] = F.inv(prod);
  }
}

GrsCode GrsCode::reed_solomon(Field field, std::vector<Elem> locators, std::size_t k) {
  std::vector<Elem> ones(locators.size(), 1);
  return GrsCode(std::move(field), std::move(locators), std::move(ones), k);
}

std::optional<std::size_t> GrsCode::index_of(Elem locator) const {
  auto it = std::find(locators_.begin(), locators_.end(), locator);
  if (it == locators_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - locators_.begin());
}

gf::Matrix GrsCode::generator_matrix() const {
  gf::Matrix g(k_, n());
  for (std::size_t j = 0; j < n(); ++j) {
    Elem p = multipliers_[j];
    for (std::size_t i = 0; i < k_; ++i) {
      g(i, j) = p;
      p = field_.mul(p, locators_[j]);
    }
  }
  return g;
}

gf::Matrix GrsCode::parity_check_matrix() const {
  const std::size_t r = n() - k_;
  gf::Matrix h(r, n());
  for (std::size_t j = 0; j < n(); ++j) {
    Elem p = dual_[j];
    for (std::size_t i = 0; i < r; ++i) {
      h(i, j) = p;
      p = field_.mul(p, locators_[j]);
    }
  }
  return h;
}

Word encode(const GrsCode& code, const Poly& message) {
  if (message.degree() >= gf::Degree{code.k()}) throw ConfigError("message degree must be below k");
  const Field& F = code.field();
  Word c(code.n());
  for (std::size_t i = 0; i < code.n(); ++i) c[i] = F.mul(code.multipliers()[i], gf::eval(F, message, code.locators()[i]));
  return c;
}

Poly message_of(const GrsCode& code, const Word& codeword) {
  const Field& F = code.field();
  std::vector<Elem> xs, ys;
  for (std::size_t i = 0; i < code.k(); ++i) {
    xs.push_back(code.locators()[i]);
    ys.push_back(F.div(codeword[i], code.multipliers()[i]));
  }
  return gf::lagrange_interpolate(F, xs, ys);
}

bool is_codeword(const GrsCode& code, const Word& word) {
  if (word.size() != code.n()) return false;
  const Field& F = code.field();
  const std::size_t r = code.n() - code.k();
  // Horner over the locators: syndrome_j = sum_i v_i w_i alpha_i^j.
  std::vector<Elem> term(code.n());
  for (std::size_t i = 0; i < code.n(); ++i) {
    if (!F.contains(word[i])) return false;
    term[i] = F.mul(code.dual_multipliers()[i], word[i]);
  }
  for (std::size_t j = 0; j < r; ++j) {
    Elem s = 0;
    for (std::size_t i = 0; i < code.n(); ++i) {
      s = F.add(s, term[i]);
      term[i] = F.mul(term[i], code.locators()[i]);
    }
    if (s != 0) return false;
  }
  return true;
}

std::size_t hamming_distance(const Word& a, const Word& b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

std::size_t weight(const Word& a) {
  return static_cast<std::size_t>(std::count_if(a.begin(), a.end(), [](Elem v) { return v != 0; }));
}

namespace {

Word subtract(const Field& F, const Word& a, const Word& b) {
  Word r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.sub(a[i], b[i]);
  return r;
}

}  // namespace

std::optional<BmdResult> bmd_decode(const GrsCode& code, const Word& received) {
  if (received.size() != code.n()) throw ConfigError("received word length mismatch");
  const Field& F = code.field();
  const std::size_t n = code.n(), k = code.k();
  if (k == 0) {
    Word zero(n, 0);
    if (2 * weight(received) > n) return std::nullopt;
    return BmdResult{zero, received};
  }
  // Gao's decoder: extended Euclid on (prod (x - alpha_i), interpolant of y).
  std::vector<Elem> ys(n);
  for (std::size_t i = 0; i < n; ++i) ys[i] = F.div(received[i], code.multipliers()[i]);
  Poly r0 = gf::from_roots(F, code.locators());
  Poly r1 = gf::lagrange_interpolate(F, code.locators(), ys);
  Poly t0, t1 = Poly::constant(1);
  auto small_enough = [&](const Poly& r) { return !r.degree() || 2 * *r.degree() < n + k; };
  while (!small_enough(r1)) {
    auto [q, rem] = gf::divmod(F, r0, r1);
    Poly t2 = gf::sub(F, t0, gf::mul(F, q, t1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  auto [f, rem] = gf::divmod(F, r1, t1);
  if (!rem.is_zero() || f.degree() >= gf::Degree{k}) return std::nullopt;
  Word c = encode(code, f);
  if (2 * hamming_distance(c, received) > code.d() - 1) return std::nullopt;
  return BmdResult{c, subtract(F, received, c)};
}

std::optional<Word> erasure_decode(const GrsCode& code, const Word& received,
                                   const std::vector<std::size_t>& erased) {
  if (received.size() != code.n()) throw ConfigError("received word length mismatch");
  std::vector<bool> is_erased(code.n(), false);
  for (auto i : erased) {
    if (i >= code.n()) throw ConfigError("erasure index out of range");
    is_erased[i] = true;
  }
  const std::size_t ne = static_cast<std::size_t>(std::count(is_erased.begin(), is_erased.end(), true));
  if (ne > code.d() - 1) throw ConfigError("more erasures than d-1: solution is ambiguous");
  const Field& F = code.field();
  std::vector<Elem> xs, ys;
  for (std::size_t i = 0; i < code.n() && xs.size() < code.k(); ++i) {
    if (is_erased[i]) continue;
    xs.push_back(code.locators()[i]);
    ys.push_back(F.div(received[i], code.multipliers()[i]));
  }
  const Poly f = gf::lagrange_interpolate(F, xs, ys);
  Word c = encode(code, f);
  for (std::size_t i = 0; i < code.n(); ++i) {
    if (!is_erased[i] && c[i] != received[i]) return std::nullopt;
  }
  return c;
}

Poly reduce_poly(const Field& F, const Poly& f, const std::vector<Elem>& S) {
  Poly g = f;
  for (Elem b : S) {
    const Poly num = gf::sub(F, g, Poly::constant(gf::eval(F, g, b)));
    g = gf::divmod(F, num, gf::from_roots(F, {b})).first;
  }
  return g;
}

namespace {

std::vector<std::size_t> indices_of(const GrsCode& code, const std::vector<Elem>& S) {
  std::vector<std::size_t> idx;
  std::vector<bool> seen(code.n(), false);
  for (Elem b : S) {
    auto i = code.index_of(b);
    if (!i) throw ConfigError("shortening set contains a non-locator");
    if (seen[*i]) throw ConfigError("shortening set contains a repeated locator");
    seen[*i] = true;
    idx.push_back(*i);
  }
  return idx;
}

}  // namespace

GrsCode shorten_code(const GrsCode& code, const std::vector<Elem>& S) {
  if (S.size() > code.k()) throw ConfigError("shortening set larger than the dimension");
  const auto removed = indices_of(code, S);
  std::vector<bool> drop(code.n(), false);
  for (auto i : removed) drop[i] = true;
  std::vector<Elem> loc, mult;
  for (std::size_t i = 0; i < code.n(); ++i) {
    if (drop[i]) continue;
    loc.push_back(code.locators()[i]);
    mult.push_back(code.multipliers()[i]);
  }
  return GrsCode(code.field(), std::move(loc), std::move(mult), code.k() - S.size());
}

Shortened shorten_received(const GrsCode& code, const Word& received, const std::vector<Elem>& S) {
  if (received.size() != code.n()) throw ConfigError("received word length mismatch");
  const Field& F = code.field();
  Shortened out;
  ShortenContext& ctx = out.context;
  ctx.n = code.n();
  ctx.removed = indices_of(code, S);
  std::vector<bool> drop(code.n(), false);
  for (auto i : ctx.removed) drop[i] = true;

  // g^S = (g - I_S) / prod_{b in S}(x - b), where I_S interpolates g on S.
  std::vector<Elem> sx, sy;
  for (auto i : ctx.removed) {
    sx.push_back(code.locators()[i]);
    sy.push_back(F.div(received[i], code.multipliers()[i]));
  }
  const Poly interp = gf::lagrange_interpolate(F, sx, sy);
  for (std::size_t i = 0; i < code.n(); ++i) {
    if (drop[i]) continue;
    const Elem a = code.locators()[i];
    Elem prod = 1;
    for (Elem b : sx) prod = F.mul(prod, F.sub(a, b));
    const Elem y = F.div(received[i], code.multipliers()[i]);
    const Elem z = F.div(F.sub(y, gf::eval(F, interp, a)), prod);
    ctx.kept.push_back(i);
    ctx.lift.push_back(prod);
    out.word.push_back(F.mul(code.multipliers()[i], z));
  }
  return out;
}

Word lift_error(const Field& F, const ShortenContext& ctx, const Word& shortened_error) {
  if (shortened_error.size() != ctx.kept.size()) throw ConfigError("shortened error length mismatch");
  Word e(ctx.n, 0);
  for (std::size_t j = 0; j < ctx.kept.size(); ++j) e[ctx.kept[j]] = F.mul(shortened_error[j], ctx.lift[j]);
  return e;
}

}  // namespace lrcdec::grs
