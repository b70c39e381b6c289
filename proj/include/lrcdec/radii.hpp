#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lrcdec/exact.hpp"

namespace lrcdec::radii {

// Parameters of an LRC. q = 0 stands for q = infinity (theta = 1).
struct CodeShape {
  std::int64_t n = 0, k = 0, d = 0, r = 0, rho = 0;
  std::int64_t q = 0;

  // Shape with d taken from the optimal-distance bound.
  static CodeShape lrc(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t rho, std::int64_t q = 0);

  std::int64_t n_l() const { return r + rho - 1; }
  std::int64_t mu() const { return n / n_l(); }
  Rational theta() const;
  double theta_d() const;
  // Same shape with q = infinity.
  CodeShape alphabet_free() const;
};

// Throws ConfigError when the shape is inconsistent.
void validate(const CodeShape& s);

Rational theta_of(std::int64_t q);

// Real Johnson radius theta n (1 - sqrt(1 - d/(n theta))).
double johnson_radius(std::int64_t n, std::int64_t d, std::int64_t q);
// ceil(tau_J - 1): the largest integer strictly below tau_J, decided exactly.
std::int64_t johnson_t(std::int64_t n, std::int64_t d, std::int64_t q);
// theta d n / (t^2 - theta n (2t - d)) when the denominator is positive.
std::optional<Rational> johnson_list_real(std::int64_t n, std::int64_t d, std::int64_t q, std::int64_t t);
std::optional<BigInt> johnson_list(std::int64_t n, std::int64_t d, std::int64_t q, std::int64_t t);

struct Johnson {
  double tau = 0;
  std::int64_t t = 0;
  std::optional<BigInt> list;  // empty: unbounded by the Johnson list formula
};
Johnson johnson(std::int64_t n, std::int64_t d, std::int64_t q);

struct Sigma {
  double value = 0;
  std::int64_t ceil = 0;
};
Sigma sigma(double mu, double tau_g, double tau_l);
// max(0, mu - d/rho): sigma when the local radius is the local Johnson radius.
Rational sigma_exact(const CodeShape& s);

double tau_local(const CodeShape& s);
std::int64_t t_local(const CodeShape& s);
double tau_g(const CodeShape& s);
std::int64_t t_g(const CodeShape& s);
// Largest integer satisfying t^2 + theta floor(t/(t_l+1)) n_l (d - 2t) > 0,
// scanning upward from t_g.
std::int64_t bar_t_g(const CodeShape& s, std::int64_t t_l);

struct ListBounds {
  std::optional<BigInt> basic;     // floored component bounds
  std::optional<BigInt> improved;  // floored component bounds, max over xi
  std::optional<double> basic_real;
  std::optional<double> improved_real;
};
ListBounds list_bounds(const CodeShape& s);

struct Gain {
  bool mu_rho_exceeds_d = false;   // mu rho > d
  bool local_radius_gain = false;  // tau_l / n_l > theta (1 - sqrt(1 - d/(n theta)))
};
Gain gain_predicates(const CodeShape& s, double tau_l);

double normalized_radius(double beta, double delta, double theta);

double irs_radius(double n, double d, std::int64_t ell);
// Largest root of (N - tau)^{ell+1} = N (N - d)^ell with N = tau n_l / tau_l
// and tau_l the ell-interleaved local radius.
double tau_g_interleaved_real(const CodeShape& s, std::int64_t ell);
// Largest integer t with ((n - c n_l) - t)^{ell+1} > (n - c n_l)((n - c n_l) - d)^ell,
// c = ceil(sigma) for the ell-interleaved radii.
std::int64_t interleaved_radius_general(const CodeShape& s, std::int64_t ell);
// Closed form of the two-fold interleaved global radius.
double tau_g_l2(const CodeShape& s);

double h_value(double n, double d, std::int64_t ell, double theta);
// True iff h(n+1) <= h(n) + 1e-12 for all n in [n_lo, n_hi).
bool h_monotone_check(std::int64_t d, std::int64_t ell, std::int64_t q, std::int64_t n_lo, std::int64_t n_hi);

std::int64_t erasure_ghw(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t i);
BigInt erasure_list_size(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t q, std::int64_t t);

struct RadiusReport {
  CodeShape shape;
  std::int64_t ell = 2;
  double tau_J = 0;
  std::int64_t t_J = 0;
  double tau_J_local = 0;       // with theta of the shape
  double tau_J_local_free = 0;  // theta = 1
  std::int64_t t_l = 0;
  Rational sigma = 0;
  std::int64_t sigma_ceil = 0;
  double tau_g = 0;
  std::int64_t t_g = 0;
  std::int64_t bar_t_g = 0;
  std::optional<BigInt> L_johnson;
  ListBounds bounds;
  double tau_irs = 0;
  double tau_g_interleaved = 0;
  std::int64_t t_g_interleaved = 0;
  double tau_g_l2 = 0;
  Gain gain;
};
RadiusReport report(const CodeShape& s, std::int64_t ell = 2);

}  // namespace lrcdec::radii
