#pragma once

#include <cstdint>
#include <memory>
#include <vector>

namespace lrcdec::gf {

// Field elements are integers in [0, q). The base-p digits of the value are
// the coefficients of the polynomial representation, lowest degree first, so
// the integer c < p is the prime-field constant c.
using Elem = std::uint32_t;

inline constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 20;

struct FieldSpec {
  std::uint32_t p = 2;
  std::uint32_t m = 1;
  // Monic irreducible polynomial of degree m, encoded with base-p digits
  // (bit-encoded for p = 2). Zero selects the default modulus.
  std::uint64_t modulus = 0;

  bool operator==(const FieldSpec&) const = default;
};

// Smallest monic irreducible polynomial of degree m over GF(p) in the
// base-p integer encoding.
std::uint64_t default_modulus(std::uint32_t p, std::uint32_t m);

bool is_irreducible(std::uint32_t p, std::uint64_t modulus);

bool is_prime(std::uint64_t v);

// Immutable handle to GF(p^m). Copies share the same tables.
class Field {
 public:
  explicit Field(FieldSpec spec);
  static Field binary(std::uint32_t m) { return Field(FieldSpec{2, m, 0}); }
  static Field prime(std::uint32_t p) { return Field(FieldSpec{p, 1, 0}); }

  const FieldSpec& spec() const;
  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  std::uint32_t order() const;
  // theta_q = 1 - 1/q
  double theta() const;

  Elem add(Elem a, Elem b) const { return binary_ ? (a ^ b) : slow_add(a, b); }
  Elem sub(Elem a, Elem b) const { return binary_ ? (a ^ b) : slow_sub(a, b); }
  Elem neg(Elem a) const { return binary_ ? a : slow_sub(0, a); }
  Elem mul(Elem a, Elem b) const {
    if (!binary_) return slow_mul(a, b);
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem div(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, std::uint64_t e) const;
  // Image of the integer c under Z -> GF(p).
  Elem from_int(std::uint64_t c) const;
  // A fixed generator of the multiplicative group.
  Elem primitive() const;
  // Multiplicative order of a nonzero element.
  std::uint64_t element_order(Elem a) const;
  bool contains(std::uint64_t v) const { return v < order(); }

  bool operator==(const Field& o) const { return spec() == o.spec(); }

  struct Impl;

 private:
  Elem slow_add(Elem a, Elem b) const;
  Elem slow_sub(Elem a, Elem b) const;
  Elem slow_mul(Elem a, Elem b) const;

  std::shared_ptr<const Impl> impl_;
  // Cached views into impl_ for the inlined binary-field fast path.
  bool binary_ = false;
  const Elem* exp_ = nullptr;
  const Elem* log_ = nullptr;
};

// Distinct prime factors of v.
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

}  // namespace lrcdec::gf
