#include <doctest.h>

#include <cmath>

#include "lrcdec/errors.hpp"
#include "lrcdec/radii.hpp"
#include "lrcdec/rng.hpp"

using namespace lrcdec;
using namespace lrcdec::radii;

namespace {

// Brute-force integer radius: largest t with t < tau, scanning all t.
std::int64_t brute_t(double tau) {
  std::int64_t t = -1;
  while (static_cast<double>(t + 1) < tau - 1e-12) ++t;
  return t;
}

// Random alphabet-free shapes with valid parameters.
std::vector<CodeShape> random_shapes(std::uint64_t seed, std::size_t count) {
  Rng rng(seed);
  std::vector<CodeShape> out;
  while (out.size() < count) {
    const std::int64_t nl = 3 + static_cast<std::int64_t>(rng.uniform(20));
    const std::int64_t mu = 1 + static_cast<std::int64_t>(rng.uniform(12));
    const std::int64_t r = 1 + static_cast<std::int64_t>(rng.uniform(static_cast<std::uint64_t>(nl - 2)));
    const std::int64_t k = r * (1 + static_cast<std::int64_t>(rng.uniform(static_cast<std::uint64_t>(mu))));
    try {
      const auto s = CodeShape::lrc(nl * mu, k, r, nl - r + 1);
      validate(s);
      out.push_back(s);
    } catch (const ConfigError&) {
    }
  }
  return out;
}

}  // namespace

TEST_CASE("Johnson radius") {
  const auto j = johnson(63, 35, 0);
  CHECK(j.tau == doctest::Approx(21.0));
  CHECK(j.t == 20);
  REQUIRE(j.list);
  CHECK(*j.list == 25);
  CHECK(*johnson_list_real(63, 35, 0, 20) == Rational(2205, 85));
  CHECK(johnson_radius(10, 0, 0) == 0.0);
  CHECK(johnson_t(10, 0, 0) == -1);
  CHECK_FALSE(johnson_list_real(63, 35, 0, 21));
  CHECK_THROWS_AS(johnson_radius(10, 6, 2), DomainError);
  CHECK(johnson_radius(10, 5, 2) == doctest::Approx(5.0));

  // Exact integer radius against a scan of the real radius.
  for (std::int64_t n = 1; n <= 60; ++n)
    for (std::int64_t d = 0; d <= n; ++d) {
      CHECK(johnson_t(n, d, 0) == brute_t(johnson_radius(n, d, 0)));
      if (2 * d <= n) CHECK(johnson_t(n, d, 2) == brute_t(johnson_radius(n, d, 2)));
    }
}

TEST_CASE("sigma") {
  const auto s = sigma(3, 35.0, 14.0);
  CHECK(s.value == doctest::Approx(0.5));
  CHECK(s.ceil == 1);
  CHECK(sigma(3, 50.0, 10.0).value == 0.0);
  CHECK(sigma(3, 50.0, 10.0).ceil == 0);
  const auto big = sigma(7, 268.0, 68.0);
  CHECK(big.value == doctest::Approx(7.0 - 268.0 / 68.0));
  CHECK(big.ceil == 4);
  CHECK_THROWS_AS(sigma(3, 1.0, 0.0), DomainError);
  CHECK(sigma_exact(CodeShape::lrc(63, 16, 8, 14)) == Rational(1, 2));
  CHECK(sigma_exact(CodeShape::lrc(500, 99, 33, 68)) == Rational(5) - Rational(268, 68));
}

TEST_CASE("global radius and its integer versions") {
  const auto s63 = CodeShape::lrc(63, 16, 8, 14);
  CHECK(tau_g(s63) == doctest::Approx(2.5 * (21 - std::sqrt(147.0))));
  CHECK(t_g(s63) == 22);
  CHECK(t_local(s63) == 8);
  CHECK(bar_t_g(s63, 8) == 24);
  const auto s15 = CodeShape::lrc(15, 6, 3, 3);
  CHECK(tau_g(s15) == doctest::Approx(4.9).epsilon(0.01));
  CHECK(bar_t_g(s15, t_local(s15)) == 5);
  CHECK(bar_t_g(CodeShape::lrc(500, 99, 33, 68), 43) == 175);
  CHECK(bar_t_g(CodeShape::lrc(1023, 99, 3, 9), 6) == 491);

  for (const auto& s : random_shapes(1, 300)) {
    const double tg = tau_g(s);
    CHECK(t_g(s) == brute_t(tg));
    CHECK(bar_t_g(s, t_local(s)) >= (s.d - 1) / 2);
    const double tj = johnson_radius(s.n, s.d, 0);
    if (s.mu() * s.rho <= s.d) {
      CHECK(tg == tj);
    } else {
      CHECK(tg > tj);
    }
  }
}

TEST_CASE("bar_t_g stops at the first failing integer") {
  for (const auto& s : random_shapes(2, 200)) {
    const auto tl = t_local(s);
    const auto bar = bar_t_g(s, tl);
    auto holds = [&](std::int64_t t) { return t * t + (t / (tl + 1)) * s.n_l() * (s.d - 2 * t) > 0; };
    if (bar > 0) CHECK(holds(bar));
    if (bar < s.n) CHECK_FALSE(holds(bar + 1));
  }
}

TEST_CASE("list bounds") {
  const auto s = CodeShape::lrc(500, 99, 33, 68);
  const auto b = list_bounds(s);
  REQUIRE(b.basic_real);
  CHECK(*b.basic_real == doctest::Approx(2.2e6).epsilon(0.01));
  CHECK(*b.basic == 2094840);
  CHECK(*b.improved <= *b.basic);
  REQUIRE(johnson(500, 268, 0).list);
  CHECK(*johnson(500, 268, 0).list == 476);
  CHECK(johnson(500, 268, 0).t == 159);

  // sigma = 0: both bounds reduce to the Johnson list bound at t_g.
  for (const auto& r : random_shapes(3, 200)) {
    if (sigma_exact(r) != 0) continue;
    const auto lb = list_bounds(r);
    const auto jl = johnson_list(r.n, r.d, r.q, t_g(r));
    CHECK(lb.basic == jl);
    CHECK(lb.improved == jl);
  }
}

TEST_CASE("gain predicates") {
  const auto s = CodeShape::lrc(63, 16, 8, 14);
  const auto g = gain_predicates(s, tau_local(s));
  CHECK(g.mu_rho_exceeds_d);
  CHECK(g.local_radius_gain);
  // One repair set: mu rho = d exactly.
  const auto mds = CodeShape::lrc(10, 4, 4, 7);
  CHECK(mds.d == 7);
  CHECK_FALSE(gain_predicates(mds, tau_local(mds)).mu_rho_exceeds_d);
}

TEST_CASE("normalized radius") {
  CHECK(normalized_radius(1, 0.5, 1) == doctest::Approx(1 - std::sqrt(0.5)));
  CHECK(normalized_radius(2, 0.4, 1) == doctest::Approx(0.5 * (1 - std::sqrt(0.2))));
  CHECK(normalized_radius(2, 0.5, 1) == doctest::Approx(0.5));
  CHECK(normalized_radius(1, 35.0 / 63, 1) * 63 == doctest::Approx(johnson_radius(63, 35, 0)));
  CHECK_THROWS_AS(normalized_radius(2, 0.6, 1), DomainError);
  CHECK_THROWS_AS(normalized_radius(0.5, 0.1, 1), ConfigError);
}

TEST_CASE("interleaved radii") {
  const auto s = CodeShape::lrc(15, 6, 3, 3);
  CHECK(irs_radius(15, 8, 2) == doctest::Approx(5.98).epsilon(0.002));
  CHECK(tau_g_l2(s) == doctest::Approx(6.09).epsilon(0.002));
  CHECK(irs_radius(63, 35, 1) == doctest::Approx(johnson_radius(63, 35, 0)));
  for (const auto& r : random_shapes(4, 100)) {
    CHECK(std::abs(tau_g_interleaved_real(r, 2) - tau_g_l2(r)) < 1e-9);
    const auto t = interleaved_radius_general(r, 2);
    CHECK(t >= 0);
    CHECK(t < r.n);
  }
  CHECK(interleaved_radius_general(CodeShape::lrc(63, 16, 8, 14), 2) >= 26);
}

TEST_CASE("h monotonicity") {
  CHECK(h_monotone_check(35, 1, 0, 35, 200));
  CHECK(h_monotone_check(8, 2, 16, 9, 100));
  CHECK(h_monotone_check(9, 3, 1024, 10, 200));
  CHECK_THROWS_AS(h_monotone_check(8, 2, 16, 8, 100), ConfigError);
}

TEST_CASE("erasure list decoding") {
  CHECK(erasure_ghw(15, 8, 4, 1) == 7);
  for (std::int64_t r = 1; r < 6; ++r) CHECK(erasure_ghw(20, 9, r, 9) == 20);
  // MDS: n - k + delta erasures leave q^delta candidates.
  for (std::int64_t delta = 0; delta <= 4; ++delta)
    CHECK(erasure_list_size(12, 5, 5, 16, 12 - 5 + delta) == ipow(BigInt(16), static_cast<std::uint64_t>(delta)));
  CHECK(erasure_list_size(12, 5, 5, 16, 3) == 1);
}

TEST_CASE("shape validation and report") {
  CHECK_THROWS_AS(validate(CodeShape::lrc(14, 6, 3, 3)), ConfigError);
  CHECK_THROWS_AS(CodeShape::lrc(15, 6, 3, 3, 1).theta(), ConfigError);
  const auto rep = report(CodeShape::lrc(63, 16, 8, 14));
  CHECK(rep.t_J == 20);
  CHECK(rep.t_l == 8);
  CHECK(rep.t_g == 22);
  CHECK(rep.bar_t_g == 24);
  CHECK(rep.sigma_ceil == 1);
  CHECK(rep.tau_irs == doctest::Approx(26.31).epsilon(0.001));
  const auto q64 = report(CodeShape::lrc(63, 16, 8, 14, 64));
  CHECK(q64.tau_J_local_free == doctest::Approx(rep.tau_J_local));
  CHECK(q64.tau_J_local > q64.tau_J_local_free);
}
