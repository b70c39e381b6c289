#include "lrcdec/radii.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "lrcdec/errors.hpp"
#include "lrcdec/lrc.hpp"

namespace lrcdec::radii {

namespace mp = boost::multiprecision;

CodeShape CodeShape::lrc(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t rho, std::int64_t q) {
  CodeShape s;
  s.n = n;
  s.k = k;
  s.r = r;
  s.rho = rho;
  s.q = q;
  s.d = lrc::optimal_distance(n, k, r, rho);
  return s;
}

Rational theta_of(std::int64_t q) {
  if (q == 0) return 1;
  if (q < 2) throw ConfigError("alphabet size must be at least 2");
  return Rational(q - 1, q);
}

Rational CodeShape::theta() const { return theta_of(q); }
double CodeShape::theta_d() const { return q == 0 ? 1.0 : 1.0 - 1.0 / static_cast<double>(q); }

CodeShape CodeShape::alphabet_free() const {
  CodeShape s = *this;
  s.q = 0;
  return s;
}

void validate(const CodeShape& s) {
  if (s.n < 1 || s.k < 1 || s.r < 1 || s.rho < 2) throw ConfigError("shape needs n, k, r >= 1 and rho >= 2");
  if (s.k > s.n) throw ConfigError("shape needs k <= n");
  if (s.n % s.n_l() != 0) throw ConfigError("shape needs (r + rho - 1) | n");
  if (s.d < 1 || s.d > s.n) throw ConfigError("shape needs 1 <= d <= n");
  if (s.q != 0 && s.q < 2) throw ConfigError("shape needs q >= 2 or q = infinity");
  if (Rational(s.d) > s.theta() * s.n) throw ConfigError("shape needs d <= n theta_q");
  if (Rational(s.rho) > s.theta() * s.n_l()) throw ConfigError("shape needs rho <= n_l theta_q");
}

namespace {

double theta_double(std::int64_t q) { return q == 0 ? 1.0 : 1.0 - 1.0 / static_cast<double>(q); }

// x < a - sqrt(b), decided over the rationals.
bool below_a_minus_sqrt_b(const Rational& x, const Rational& a, const Rational& b) {
  const Rational gap = a - x;
  return gap > 0 && gap * gap > b;
}

// Largest integer t satisfying a predicate that holds on an initial segment,
// starting from a floating-point estimate.
std::int64_t refine(double estimate, const std::function<bool(std::int64_t)>& pred) {
  auto t = static_cast<std::int64_t>(std::ceil(estimate - 1.0));
  while (!pred(t)) --t;
  while (pred(t + 1)) ++t;
  return t;
}

void check_domain(std::int64_t n, std::int64_t d, std::int64_t q) {
  if (n < 1 || d < 0) throw ConfigError("Johnson radius needs n >= 1 and d >= 0");
  if (Rational(d) > theta_of(q) * n) throw DomainError("Johnson radius needs d <= n theta_q");
}

}  // namespace

double johnson_radius(std::int64_t n, std::int64_t d, std::int64_t q) {
  check_domain(n, d, q);
  const double th = theta_double(q);
  const double nn = static_cast<double>(n);
  return th * nn * (1.0 - std::sqrt(std::max(0.0, 1.0 - static_cast<double>(d) / (nn * th))));
}

std::int64_t johnson_t(std::int64_t n, std::int64_t d, std::int64_t q) {
  const double tau = johnson_radius(n, d, q);
  const Rational a = theta_of(q) * n;
  const Rational b = a * (a - d);
  return refine(tau, [&](std::int64_t t) { return below_a_minus_sqrt_b(Rational(t), a, b); });
}

std::optional<Rational> johnson_list_real(std::int64_t n, std::int64_t d, std::int64_t q, std::int64_t t) {
  const Rational th = theta_of(q);
  const Rational den = Rational(t * t) - th * n * (2 * t - d);
  if (den <= 0) return std::nullopt;
  return th * d * n / den;
}

std::optional<BigInt> johnson_list(std::int64_t n, std::int64_t d, std::int64_t q, std::int64_t t) {
  auto v = johnson_list_real(n, d, q, t);
  if (!v) return std::nullopt;
  return BigInt(mp::numerator(*v) / mp::denominator(*v));
}

Johnson johnson(std::int64_t n, std::int64_t d, std::int64_t q) {
  Johnson j;
  j.tau = johnson_radius(n, d, q);
  j.t = johnson_t(n, d, q);
  j.list = johnson_list(n, d, q, j.t);
  return j;
}

Sigma sigma(double mu, double tau_g, double tau_l) {
  if (!(tau_l > 0)) throw DomainError("sigma needs a positive local radius");
  Sigma s;
  s.value = std::max(0.0, mu - tau_g / tau_l);
  // Ratios that are integers in exact arithmetic may land a rounding step above.
  const double near = std::round(s.value);
  s.ceil = static_cast<std::int64_t>(std::abs(s.value - near) < 1e-9 ? near : std::ceil(s.value));
  return s;
}

Rational sigma_exact(const CodeShape& s) {
  const Rational v = Rational(s.mu()) - Rational(s.d, s.rho);
  return v > 0 ? v : Rational(0);
}

namespace {

std::int64_t ceil_of(const Rational& v) {
  const BigInt num = mp::numerator(v), den = mp::denominator(v);
  BigInt q = num / den;
  if (q * den < num) ++q;
  return q.convert_to<std::int64_t>();
}

bool local_branch(const CodeShape& s) { return s.mu() * s.rho > s.d; }

}  // namespace

double tau_local(const CodeShape& s) { return johnson_radius(s.n_l(), s.rho, s.q); }

std::int64_t t_local(const CodeShape& s) { return johnson_t(s.n_l(), s.rho, s.q); }

double tau_g(const CodeShape& s) {
  validate(s);
  if (local_branch(s)) return static_cast<double>(s.d) / static_cast<double>(s.rho) * tau_local(s);
  return johnson_radius(s.n, s.d, s.q);
}

std::int64_t t_g(const CodeShape& s) {
  validate(s);
  if (!local_branch(s)) return johnson_t(s.n, s.d, s.q);
  const Rational a = s.theta() * s.n_l();
  const Rational b = a * (a - s.rho);
  return refine(tau_g(s), [&](std::int64_t t) { return below_a_minus_sqrt_b(Rational(t * s.rho, s.d), a, b); });
}

std::int64_t bar_t_g(const CodeShape& s, std::int64_t t_l) {
  validate(s);
  if (t_l < 0) throw ConfigError("bar_t_g needs t_l >= 0");
  const Rational th = s.theta();
  auto eq12 = [&](std::int64_t t) {
    return Rational(t * t) + th * Rational((t / (t_l + 1)) * s.n_l() * (s.d - 2 * t)) > 0;
  };
  std::int64_t t = std::max<std::int64_t>(0, t_g(s));
  while (t > 0 && !eq12(t)) --t;
  while (t + 1 <= s.n && eq12(t + 1)) ++t;
  return t;
}

ListBounds list_bounds(const CodeShape& s) {
  validate(s);
  ListBounds out;
  const std::int64_t tg = t_g(s);
  const std::int64_t c = ceil_of(sigma_exact(s));
  if (c == 0) {
    auto real = johnson_list_real(s.n, s.d, s.q, tg);
    if (!real) return out;
    out.basic = out.improved = johnson_list(s.n, s.d, s.q, tg);
    out.basic_real = out.improved_real = to_double(*real);
    return out;
  }
  const std::int64_t tl = t_local(s);
  const std::int64_t n_short = s.n - c * s.n_l();
  auto loc_real = johnson_list_real(s.n_l(), s.rho, s.q, tl);
  auto glob_real = johnson_list_real(n_short, s.d, s.q, tg);
  if (!loc_real || !glob_real) return out;
  const BigInt choose = binomial(s.mu(), c);
  const BigInt loc = *johnson_list(s.n_l(), s.rho, s.q, tl);
  const BigInt glob = *johnson_list(n_short, s.d, s.q, tg);
  out.basic = choose * ipow(loc, static_cast<std::uint64_t>(c)) * glob;
  out.basic_real = to_double(Rational(choose) * ipow(*loc_real, static_cast<std::uint64_t>(c)) * *glob_real);

  BigInt best = 0;
  Rational best_real = 0;
  bool bounded = true;
  for (std::int64_t xi = 0; xi <= c; ++xi) {
    const std::int64_t radius = tg - xi * (s.rho - tl);
    if (radius < 0) continue;  // no codeword can be that close
    auto g_real = johnson_list_real(n_short, s.d, s.q, radius);
    if (!g_real) {
      bounded = false;
      break;
    }
    const BigInt term = ipow(loc, static_cast<std::uint64_t>(xi)) * *johnson_list(n_short, s.d, s.q, radius);
    const Rational term_real = ipow(*loc_real, static_cast<std::uint64_t>(xi)) * *g_real;
    best = std::max(best, term);
    best_real = std::max(best_real, term_real);
  }
  if (bounded) {
    out.improved = choose * best;
    out.improved_real = to_double(Rational(choose) * best_real);
  }
  return out;
}

Gain gain_predicates(const CodeShape& s, double tau_l) {
  validate(s);
  Gain g;
  g.mu_rho_exceeds_d = s.mu() * s.rho > s.d;
  const double th = s.theta_d();
  const double rhs = th * (1.0 - std::sqrt(1.0 - static_cast<double>(s.d) / (static_cast<double>(s.n) * th)));
  g.local_radius_gain = tau_l / static_cast<double>(s.n_l()) > rhs;
  return g;
}

double normalized_radius(double beta, double delta, double theta) {
  if (beta < 1.0 || theta <= 0.0 || delta < 0.0) throw ConfigError("normalized radius needs beta >= 1, delta >= 0");
  const double x = beta * delta / theta;
  if (x > 1.0 + 1e-15) throw DomainError("normalized radius beyond the Singleton meeting point");
  return theta * (1.0 - std::sqrt(std::max(0.0, 1.0 - x))) / beta;
}

double irs_radius(double n, double d, std::int64_t ell) {
  if (ell < 1) throw ConfigError("interleaving order must be at least 1");
  const double e = static_cast<double>(ell) / static_cast<double>(ell + 1);
  return n * (1.0 - std::pow((n - d) / n, e));
}

double tau_g_interleaved_real(const CodeShape& s, std::int64_t ell) {
  validate(s);
  const double nl = static_cast<double>(s.n_l());
  const double d = static_cast<double>(s.d);
  const double tau_l = irs_radius(nl, static_cast<double>(s.rho), ell);
  const double c = nl / tau_l;
  const double e = static_cast<double>(ell);
  // g(tau)/tau = (c-1)^{ell+1} tau^ell - c (c tau - d)^ell, positive at d/c and
  // eventually negative; bisect for the sign change.
  auto g = [&](double tau) { return std::pow(c - 1.0, e + 1.0) * std::pow(tau, e) - c * std::pow(c * tau - d, e); };
  double lo = d / c, hi = std::max(2.0 * lo, 1.0);
  while (g(hi) > 0) hi *= 2.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    (g(mid) > 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

std::int64_t interleaved_radius_general(const CodeShape& s, std::int64_t ell) {
  validate(s);
  if (ell < 1) throw ConfigError("interleaving order must be at least 1");
  const double tau_l = irs_radius(static_cast<double>(s.n_l()), static_cast<double>(s.rho), ell);
  const Sigma sg = sigma(static_cast<double>(s.mu()), tau_g_interleaved_real(s, ell), tau_l);
  const BigInt np = s.n - sg.ceil * s.n_l();
  const BigInt rhs = np * ipow(BigInt(np - s.d), static_cast<std::uint64_t>(ell));
  std::int64_t t = -1;
  while (BigInt(t + 1) <= np && ipow(BigInt(np - (t + 1)), static_cast<std::uint64_t>(ell + 1)) > rhs) ++t;
  return t;
}

double tau_g_l2(const CodeShape& s) {
  validate(s);
  const double x = 1.0 - static_cast<double>(s.rho) / static_cast<double>(s.n_l());
  const double den = std::pow(x, 4.0 / 3.0) + std::pow(x, 2.0 / 3.0) + 1.0;
  return static_cast<double>(s.d) * (1.0 + x) / den;
}

double h_value(double n, double d, std::int64_t ell, double theta) {
  const double e = static_cast<double>(ell) / static_cast<double>(ell + 1);
  return theta * n * (1.0 - std::pow(1.0 - d / (n * theta), e));
}

bool h_monotone_check(std::int64_t d, std::int64_t ell, std::int64_t q, std::int64_t n_lo, std::int64_t n_hi) {
  if (ell < 1) throw ConfigError("interleaving order must be at least 1");
  if (Rational(n_lo) * theta_of(q) < d) throw ConfigError("h(n) is only defined for n >= d / theta_q");
  const double th = theta_double(q);
  for (std::int64_t n = n_lo; n < n_hi; ++n) {
    const double a = h_value(static_cast<double>(n), static_cast<double>(d), ell, th);
    const double b = h_value(static_cast<double>(n + 1), static_cast<double>(d), ell, th);
    if (b > a + 1e-12) return false;
  }
  return true;
}

std::int64_t erasure_ghw(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t i) {
  if (i < 1 || i > k || r < 1) throw ConfigError("erasure_ghw needs 1 <= i <= k and r >= 1");
  const std::int64_t blocks = (k - i + 1 + r - 1) / r;
  return n - k - blocks + i + 1;
}

BigInt erasure_list_size(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t q, std::int64_t t) {
  if (q < 2) throw ConfigError("erasure list size needs a finite q >= 2");
  for (std::int64_t j = 0; j < k; ++j) {
    if (erasure_ghw(n, k, r, j + 1) > t) return ipow(BigInt(q), static_cast<std::uint64_t>(j));
  }
  return ipow(BigInt(q), static_cast<std::uint64_t>(k));
}

RadiusReport report(const CodeShape& s, std::int64_t ell) {
  validate(s);
  RadiusReport r;
  r.shape = s;
  r.ell = ell;
  const Johnson j = johnson(s.n, s.d, s.q);
  r.tau_J = j.tau;
  r.t_J = j.t;
  r.L_johnson = j.list;
  r.tau_J_local = tau_local(s);
  r.tau_J_local_free = johnson_radius(s.n_l(), s.rho, 0);
  r.t_l = t_local(s);
  r.sigma = sigma_exact(s);
  r.sigma_ceil = ceil_of(r.sigma);
  r.tau_g = tau_g(s);
  r.t_g = t_g(s);
  r.bar_t_g = bar_t_g(s, r.t_l);
  r.bounds = list_bounds(s);
  r.tau_irs = irs_radius(static_cast<double>(s.n), static_cast<double>(s.d), ell);
  r.tau_g_interleaved = tau_g_interleaved_real(s, ell);
  r.t_g_interleaved = interleaved_radius_general(s, ell);
  r.tau_g_l2 = tau_g_l2(s);
  r.gain = gain_predicates(s, r.tau_J_local);
  return r;
}

}  // namespace lrcdec::radii
