#include "lrcdec/field.hpp"

#include <string>

#include "lrcdec/errors.hpp"

namespace lrcdec::gf {
namespace {

using Digits = std::vector<std::uint32_t>;

Digits to_digits(std::uint64_t v, std::uint32_t p) {
  Digits d;
  while (v > 0) {
    d.push_back(static_cast<std::uint32_t>(v % p));
    v /= p;
  }
  return d;
}

std::uint64_t from_digits(const Digits& d, std::uint32_t p) {
  std::uint64_t v = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) v = v * p + *it;
  return v;
}

void trim(Digits& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  // p is prime, a != 0
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

// Remainder of a modulo b over GF(p); b nonzero.
Digits poly_mod_p(Digits a, const Digits& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint64_t lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t c = a.back() * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * b[i]) % p);
    }
    trim(a);
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t f = 2; f * f <= v; ++f) {
    if (v % f == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= v; ++f) {
    if (v % f == 0) {
      out.push_back(f);
      while (v % f == 0) v /= f;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

bool is_irreducible(std::uint32_t p, std::uint64_t modulus) {
  const Digits f = to_digits(modulus, p);
  if (f.size() < 2) return false;
  const std::size_t m = f.size() - 1;
  if (m == 1) return true;
  // Trial division by every monic polynomial of degree 1..m/2.
  for (std::size_t deg = 1; deg <= m / 2; ++deg) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < deg; ++i) count *= p;
    std::uint64_t lead = count;
    for (std::uint64_t low = 0; low < count; ++low) {
      const Digits g = to_digits(lead + low, p);
      if (poly_mod_p(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::uint64_t default_modulus(std::uint32_t p, std::uint32_t m) {
  std::uint64_t lead = 1;
  for (std::uint32_t i = 0; i < m; ++i) lead *= p;
  for (std::uint64_t low = 0; low < lead; ++low) {
    if (is_irreducible(p, lead + low)) return lead + low;
  }
  throw ConfigError("no irreducible polynomial found");
}

struct Field::Impl {
  FieldSpec spec;
  std::uint32_t q = 0;
  Digits modulus;
  std::vector<Elem> exp;  // length 2q for the binary fast path
  std::vector<Elem> log;
  std::vector<std::uint64_t> group_factors;
  Elem primitive = 1;
};

namespace {

Elem clmul_mod(Elem a, Elem b, std::uint32_t m, std::uint64_t modulus) {
  std::uint64_t x = a, r = 0;
  const std::uint64_t top = std::uint64_t{1} << m;
  while (b != 0) {
    if (b & 1) r ^= x;
    b >>= 1;
    x <<= 1;
    if (x & top) x ^= modulus;
  }
  return static_cast<Elem>(r);
}

}  // namespace

Field::Field(FieldSpec spec) {
  if (!is_prime(spec.p)) throw ConfigError("field characteristic must be prime");
  if (spec.m < 1) throw ConfigError("field extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < spec.m; ++i) {
    q *= spec.p;
    if (q > kMaxOrder) throw ConfigError("field order exceeds 2^20");
  }
  if (spec.modulus == 0) spec.modulus = default_modulus(spec.p, spec.m);
  const Digits md = to_digits(spec.modulus, spec.p);
  if (md.size() != spec.m + 1 || md.back() != 1) {
    throw ConfigError("field modulus must be monic of degree m");
  }
  if (!is_irreducible(spec.p, spec.modulus)) throw ConfigError("field modulus is reducible");

  auto impl = std::make_shared<Impl>();
  impl->spec = spec;
  impl->q = static_cast<std::uint32_t>(q);
  impl->modulus = md;
  impl->group_factors = prime_factors(q - 1);
  impl_ = impl;

  if (spec.p == 2) {
    // Find a generator with the bit-level multiplier, then tabulate.
    auto slow_pow = [&](Elem a, std::uint64_t e) {
      Elem r = 1;
      while (e > 0) {
        if (e & 1) r = clmul_mod(r, a, spec.m, spec.modulus);
        a = clmul_mod(a, a, spec.m, spec.modulus);
        e >>= 1;
      }
      return r;
    };
    Elem g = 1;
    if (q > 2) {
      for (g = 2; g < q; ++g) {
        bool ok = true;
        for (auto f : impl->group_factors) {
          if (slow_pow(g, (q - 1) / f) == 1) {
            ok = false;
            break;
          }
        }
        if (ok) break;
      }
    }
    impl->primitive = g;
    impl->exp.assign(2 * q, 0);
    impl->log.assign(q, 0);
    Elem x = 1;
    for (std::uint64_t i = 0; i < q - 1; ++i) {
      impl->exp[i] = x;
      impl->log[x] = static_cast<Elem>(i);
      x = clmul_mod(x, g, spec.m, spec.modulus);
    }
    for (std::uint64_t i = q - 1; i < 2 * q; ++i) impl->exp[i] = impl->exp[i - (q - 1)];
    binary_ = true;
    exp_ = impl->exp.data();
    log_ = impl->log.data();
  } else {
    Elem g = 1;
    for (g = 1; g < q; ++g) {
      if (element_order(g) == q - 1) break;
    }
    impl->primitive = g;
  }
}

const FieldSpec& Field::spec() const { return impl_->spec; }
std::uint32_t Field::characteristic() const { return impl_->spec.p; }
std::uint32_t Field::degree() const { return impl_->spec.m; }
std::uint32_t Field::order() const { return impl_->q; }
double Field::theta() const { return 1.0 - 1.0 / static_cast<double>(impl_->q); }
Elem Field::primitive() const { return impl_->primitive; }

Elem Field::slow_add(Elem a, Elem b) const {
  const std::uint32_t p = impl_->spec.p;
  if (impl_->spec.m == 1) return static_cast<Elem>((std::uint64_t{a} + b) % p);
  Elem r = 0, scale = 1;
  while (a > 0 || b > 0) {
    r += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return r;
}

Elem Field::slow_sub(Elem a, Elem b) const {
  const std::uint32_t p = impl_->spec.p;
  if (impl_->spec.m == 1) return static_cast<Elem>((std::uint64_t{a} + p - b) % p);
  Elem r = 0, scale = 1;
  while (a > 0 || b > 0) {
    r += ((a % p + p - b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return r;
}

Elem Field::slow_mul(Elem a, Elem b) const {
  const std::uint32_t p = impl_->spec.p;
  if (impl_->spec.m == 1) return static_cast<Elem>(std::uint64_t{a} * b % p);
  const Digits da = to_digits(a, p), db = to_digits(b, p);
  if (da.empty() || db.empty()) return 0;
  Digits prod(da.size() + db.size() - 1, 0);
  for (std::size_t i = 0; i < da.size(); ++i) {
    for (std::size_t j = 0; j < db.size(); ++j) {
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p);
    }
  }
  return static_cast<Elem>(from_digits(poly_mod_p(prod, impl_->modulus, p), p));
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw DomainError("inverse of zero field element");
  if (binary_) return exp_[(impl_->q - 1) - log_[a]];
  return pow(a, impl_->q - 2);
}

Elem Field::div(Elem a, Elem b) const {
  if (b == 0) throw DomainError("division by zero field element");
  if (binary_) {
    if (a == 0) return 0;
    return exp_[log_[a] + (impl_->q - 1) - log_[b]];
  }
  return mul(a, inv(b));
}

Elem Field::pow(Elem a, std::uint64_t e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  if (binary_) {
    const std::uint64_t l = (std::uint64_t{log_[a]} * (e % (impl_->q - 1))) % (impl_->q - 1);
    return exp_[l];
  }
  Elem r = 1;
  while (e > 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Elem Field::from_int(std::uint64_t c) const { return static_cast<Elem>(c % impl_->spec.p); }

std::uint64_t Field::element_order(Elem a) const {
  if (a == 0) throw DomainError("zero has no multiplicative order");
  std::uint64_t ord = impl_->q - 1;
  for (auto f : impl_->group_factors) {
    while (ord % f == 0 && pow(a, ord / f) == 1) ord /= f;
  }
  return ord;
}

}  // namespace lrcdec::gf
