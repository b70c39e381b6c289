#include <doctest.h>

#include "lrcdec/errors.hpp"
#include "lrcdec/field.hpp"
#include "lrcdec/matrix.hpp"
#include "lrcdec/poly.hpp"
#include "lrcdec/rng.hpp"

using namespace lrcdec;
using namespace lrcdec::gf;

namespace {

Poly random_poly(const Field& F, Rng& rng, std::size_t len) {
  std::vector<Elem> c(len);
  for (auto& v : c) v = static_cast<Elem>(rng.uniform(F.order()));
  return Poly(c);
}

}  // namespace

TEST_CASE("GF(16) with x^4 + x + 1") {
  const Field F = Field::binary(4);
  CHECK(F.spec().modulus == 0b10011);
  CHECK(F.order() == 16);
  const Elem g = 2;
  CHECK(F.pow(g, 4) == F.add(g, 1));
  CHECK(F.pow(g, 4) == 3);
  CHECK(F.element_order(g) == 15);
  for (Elem a = 1; a < 16; ++a) CHECK(F.mul(a, F.inv(a)) == 1);
  CHECK_THROWS_AS(F.inv(0), DomainError);
  CHECK_THROWS_AS(F.div(3, 0), DomainError);
}

TEST_CASE("prime field arithmetic") {
  const Field F = Field::prime(5);
  CHECK(F.add(3, 4) == 2);
  CHECK(F.sub(1, 3) == 3);
  CHECK(F.mul(3, 4) == 2);
  CHECK(F.inv(2) == 3);
  CHECK(F.neg(1) == 4);
  CHECK(F.theta() == doctest::Approx(0.8));
}

TEST_CASE("default moduli are the smallest irreducibles") {
  CHECK(default_modulus(2, 2) == 0b111);
  CHECK(default_modulus(2, 3) == 0b1011);
  CHECK(default_modulus(2, 8) == 0x11b);
  CHECK(is_irreducible(2, 0x11b));
  CHECK_FALSE(is_irreducible(2, 0b101));
  CHECK_THROWS_AS(Field(FieldSpec{2, 4, 0b10101}), ConfigError);
  CHECK_THROWS_AS(Field(FieldSpec{4, 1, 0}), ConfigError);
  CHECK_THROWS_AS(Field(FieldSpec{2, 21, 0}), ConfigError);
}

TEST_CASE("field axioms on random triples") {
  for (const FieldSpec spec : {FieldSpec{2, 4, 0}, FieldSpec{2, 10, 0}, FieldSpec{3, 3, 0}, FieldSpec{7, 1, 0},
                               FieldSpec{5, 2, 0}}) {
    const Field F(spec);
    Rng rng(spec.p * 100 + spec.m);
    for (int i = 0; i < 1000; ++i) {
      const auto a = static_cast<Elem>(rng.uniform(F.order()));
      const auto b = static_cast<Elem>(rng.uniform(F.order()));
      const auto c = static_cast<Elem>(rng.uniform(F.order()));
      REQUIRE(F.add(F.add(a, b), c) == F.add(a, F.add(b, c)));
      REQUIRE(F.mul(F.mul(a, b), c) == F.mul(a, F.mul(b, c)));
      REQUIRE(F.mul(a, F.add(b, c)) == F.add(F.mul(a, b), F.mul(a, c)));
      REQUIRE(F.add(a, F.neg(a)) == 0);
      REQUIRE(F.sub(F.add(a, b), b) == a);
      if (b != 0) REQUIRE(F.mul(F.div(a, b), b) == a);
    }
    const Elem g = F.primitive();
    CHECK(F.element_order(g) == F.order() - 1);
  }
}

TEST_CASE("polynomial arithmetic") {
  const Field F = Field::binary(4);
  Rng rng(5);
  CHECK(Poly().degree() == std::nullopt);
  CHECK(Poly({1, 0, 0}).degree() == 0);
  for (int i = 0; i < 100; ++i) {
    const Poly f = random_poly(F, rng, 1 + rng.uniform(8));
    Poly g = random_poly(F, rng, 1 + rng.uniform(5));
    if (g.is_zero()) g = Poly::constant(1);
    const auto [q, r] = divmod(F, f, g);
    CHECK(add(F, mul(F, q, g), r) == f);
    if (!r.is_zero()) CHECK(*r.degree() < *g.degree());
    const Elem x = static_cast<Elem>(rng.uniform(16));
    CHECK(eval(F, mul(F, f, g), x) == F.mul(eval(F, f, x), eval(F, g, x)));
  }
  CHECK_THROWS_AS(divmod(F, Poly({1, 1}), Poly()), DomainError);
  // (x+1)(x+2) and (x+1)(x+3) share x+1.
  const Poly a = from_roots(F, {1, 2}), b = from_roots(F, {1, 3});
  CHECK(gcd(F, a, b) == Poly({1, 1}));
  // d/dx (x^3 + x^2 + x) = 3x^2 + 2x + 1 = x^2 + 1 in characteristic two.
  CHECK(derivative(F, Poly({0, 1, 1, 1})) == Poly({1, 0, 1}));
}

TEST_CASE("Lagrange interpolation") {
  const Field F = Field::binary(4);
  Rng rng(11);
  CHECK(lagrange_interpolate(F, {7}, {9}) == Poly::constant(9));
  std::vector<Elem> xs;
  for (Elem a = 1; a < 16; ++a) xs.push_back(a);
  for (int trial = 0; trial < 50; ++trial) {
    const Poly f = random_poly(F, rng, 6);
    std::vector<Elem> ys;
    for (Elem x : xs) ys.push_back(eval(F, f, x));
    CHECK(lagrange_interpolate(F, xs, ys) == f);
  }
  // Error polynomial of a weight-one error evaluates to the error at every locator.
  const std::size_t j = 4;
  const Poly e = scale(F, lagrange_basis(F, xs, j), 13);
  for (std::size_t i = 0; i < xs.size(); ++i) CHECK(eval(F, e, xs[i]) == (i == j ? 13u : 0u));
  CHECK_THROWS_AS(lagrange_interpolate(F, {1, 1}, {2, 3}), ConfigError);
}

TEST_CASE("matrix rank, nullspace and solve") {
  const Field F = Field::prime(7);
  const Matrix A = Matrix::from_rows({{1, 2, 3, 4}, {2, 4, 6, 1}, {3, 6, 2, 6}});
  CHECK(rank(F, A) == 2);
  const Matrix N = nullspace(F, A);
  CHECK(N.rows() == 2);
  CHECK(multiply(F, A, N.transpose()).is_zero());
  const Matrix B = Matrix::from_rows({{1}, {2}, {3}});
  const auto sol = solve(F, A, B);
  REQUIRE(sol);
  CHECK_FALSE(sol->unique);
  CHECK(multiply(F, A, sol->x) == B);
  CHECK_FALSE(solve(F, A, Matrix::from_rows({{1}, {0}, {0}})));
  const auto red = rref(F, A, true);
  CHECK(multiply(F, red.transform, A) == red.reduced);
}
