#include "lrcdec/pmds.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "lrcdec/errors.hpp"
#include "lrcdec/grs.hpp"
#include "lrcdec/rng.hpp"

namespace lrcdec::pmds {

namespace mp = boost::multiprecision;

void validate(const PmdsShape& s) {
  if (s.n < 1 || s.k < 1 || s.r < 1 || s.rho < 2) throw ConfigError("PMDS shape needs n, k, r >= 1 and rho >= 2");
  if (s.n % s.n_l() != 0) throw ConfigError("PMDS shape needs (r + rho - 1) | n");
  if (s.k > s.mu() * s.r) throw ConfigError("PMDS shape needs k <= mu r");
}

Partition consecutive_partition(std::size_t n, std::size_t n_l) {
  if (n_l == 0 || n % n_l != 0) throw ConfigError("partition block size must divide n");
  Partition p(n / n_l);
  for (std::size_t i = 0; i < n; ++i) p[i / n_l].push_back(i);
  return p;
}

namespace {

// Calls visit(S) for every size-m subset meeting each block in at most cap
// positions; stops early when visit returns false.
bool for_each_capped_subset(const Partition& partition, std::size_t cap, std::size_t m,
                            const std::function<bool(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> block_of;
  std::size_t n = 0;
  for (const auto& R : partition) n += R.size();
  block_of.assign(n, 0);
  std::vector<std::size_t> order;
  for (std::size_t b = 0; b < partition.size(); ++b) {
    for (auto i : partition[b]) {
      block_of[i] = b;
      order.push_back(i);
    }
  }
  std::sort(order.begin(), order.end());
  std::vector<std::size_t> used(partition.size(), 0), chosen;
  std::function<bool(std::size_t)> rec = [&](std::size_t pos) -> bool {
    if (chosen.size() == m) return visit(chosen);
    if (order.size() - pos < m - chosen.size()) return true;
    const std::size_t i = order[pos];
    if (used[block_of[i]] < cap) {
      ++used[block_of[i]];
      chosen.push_back(i);
      const bool go = rec(pos + 1);
      chosen.pop_back();
      --used[block_of[i]];
      if (!go) return false;
    }
    return rec(pos + 1);
  };
  return rec(0);
}

PmdsShape shape_of(const Partition& partition, std::size_t k, std::size_t r) {
  PmdsShape s;
  for (const auto& R : partition) s.n += static_cast<std::int64_t>(R.size());
  s.k = static_cast<std::int64_t>(k);
  s.r = static_cast<std::int64_t>(r);
  s.rho = partition.empty() ? 2 : static_cast<std::int64_t>(partition[0].size() - r + 1);
  return s;
}

}  // namespace

bool verify_pmds(const gf::Field& F, const gf::Matrix& generator, const Partition& partition, std::size_t r,
                 std::uint64_t max_checks) {
  const std::size_t k = generator.rows();
  const PmdsShape shape = shape_of(partition, k, r);
  if (static_cast<std::size_t>(shape.n) != generator.cols()) throw ConfigError("partition does not cover the code");
  for (const auto& R : partition) {
    if (R.size() != partition[0].size() || R.size() < r + 1) throw ConfigError("repair sets must have equal size > r");
  }
  const BigInt checks = s_count(shape, shape.k);
  if (checks > max_checks) throw BudgetError("PMDS verification exceeds the exhaustive check budget");
  if (gf::rank(F, generator) != k) return false;
  for (const auto& R : partition) {
    const gf::Matrix local = generator.select_cols(R);
    if (gf::rank(F, local) != r) return false;
    Partition single{std::vector<std::size_t>(R.size())};
    for (std::size_t i = 0; i < R.size(); ++i) single[0][i] = i;
    const bool mds = for_each_capped_subset(single, r, r, [&](const std::vector<std::size_t>& S) {
      return gf::rank(F, local.select_cols(S)) == r;
    });
    if (!mds) return false;
  }
  return for_each_capped_subset(partition, r, k, [&](const std::vector<std::size_t>& S) {
    return gf::rank(F, generator.select_cols(S)) == k;
  });
}

PmdsCode random_pmds(const gf::FieldSpec& spec, const PmdsShape& shape, std::uint64_t seed, std::size_t max_tries) {
  validate(shape);
  const gf::Field F(spec);
  const auto n = static_cast<std::size_t>(shape.n), k = static_cast<std::size_t>(shape.k);
  const auto nl = static_cast<std::size_t>(shape.n_l()), mu = static_cast<std::size_t>(shape.mu());
  const auto rho = static_cast<std::size_t>(shape.rho), r = static_cast<std::size_t>(shape.r);
  if (nl > F.order()) throw ConfigError("field too small for the local GRS codes; use a larger q");
  const std::size_t local_checks = mu * (rho - 1);
  const std::size_t global = n - k - local_checks;

  std::vector<gf::Elem> locs(nl);
  for (std::size_t i = 0; i < nl; ++i) locs[i] = static_cast<gf::Elem>(i);
  const gf::Matrix HL = grs::GrsCode::reed_solomon(F, locs, r).parity_check_matrix();
  Partition partition = consecutive_partition(n, nl);

  Rng rng(seed);
  for (std::size_t attempt = 0; attempt < max_tries; ++attempt) {
    gf::Matrix H(n - k, n);
    for (std::size_t b = 0; b < mu; ++b) {
      for (std::size_t i = 0; i < rho - 1; ++i) {
        for (std::size_t j = 0; j < nl; ++j) H(b * (rho - 1) + i, b * nl + j) = HL(i, j);
      }
    }
    for (std::size_t i = 0; i < global; ++i) {
      for (std::size_t j = 0; j < n; ++j) H(local_checks + i, j) = static_cast<gf::Elem>(rng.uniform(F.order()));
    }
    if (gf::rank(F, H) != n - k) continue;
    gf::Matrix G = gf::nullspace(F, H);
    if (verify_pmds(F, G, partition, r)) {
      return PmdsCode{F, shape, std::move(G), std::move(H), std::move(partition), true};
    }
  }
  throw ConfigError("no PMDS code found within the retry limit; use a larger q");
}

BigInt s_count(const PmdsShape& s, std::int64_t m) {
  validate(s);
  if (m < 0) return 0;
  // Coefficient of x^m in (sum_{j<=r} C(n_l, j) x^j)^mu.
  std::vector<BigInt> acc{1};
  for (std::int64_t b = 0; b < s.mu(); ++b) {
    std::vector<BigInt> next(acc.size() + static_cast<std::size_t>(s.r), 0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      if (acc[i] == 0) continue;
      for (std::int64_t j = 0; j <= s.r; ++j) next[i + static_cast<std::size_t>(j)] += acc[i] * binomial(s.n_l(), j);
    }
    acc = std::move(next);
  }
  return static_cast<std::size_t>(m) < acc.size() ? acc[static_cast<std::size_t>(m)] : BigInt(0);
}

BigInt s_k1_size(const PmdsShape& s) { return s_count(s, s.k + 1); }

BigInt s_k1_complement_rho2(const PmdsShape& s) {
  validate(s);
  if (s.rho != 2) throw ConfigError("closed form requires rho = 2");
  BigInt sum = 0;
  const std::int64_t blocks = s.n / (s.r + 1);
  for (std::int64_t j = 1; j <= (s.k + 1) / (s.r + 1); ++j) {
    const BigInt term = binomial(blocks, j) * binomial(s.n - j * (s.r + 1), s.k + 1 - j * (s.r + 1));
    sum += (j % 2 == 1) ? term : BigInt(-term);
  }
  return sum;
}

Rational rank_full_fraction(const BigInt& q, std::int64_t ell, std::int64_t t) {
  if (q < 2 || ell < 1 || t < 0) throw ConfigError("rank fraction needs q >= 2, ell >= 1, t >= 0");
  if (t > ell) return 0;
  const BigInt ql = ipow(q, static_cast<std::uint64_t>(ell));
  BigInt num = 1, qj = 1;
  for (std::int64_t j = 0; j < t; ++j) {
    num *= ql - qj;
    qj *= q;
  }
  return Rational(num, ipow(ql, static_cast<std::uint64_t>(t)));
}

namespace {

std::int64_t xi_of(const PmdsShape& s) { return std::min(s.rho - 2, s.n_l() / 2); }

}  // namespace

double sk1_bound(const PmdsShape& s) {
  validate(s);
  const auto e = static_cast<std::uint64_t>(s.r + 1);
  const Rational v = Rational(BigInt(s.n) * binomial(s.n_l(), xi_of(s)) * ipow(BigInt(s.k + 1), e), ipow(BigInt(s.n), e));
  return to_double(1 - v);
}

Rational union_bound_failure(const PmdsShape& s) {
  validate(s);
  BigInt sum = 0;
  for (std::int64_t j = s.r + 1; j <= s.n_l(); ++j) sum += binomial(s.n_l(), j) * binomial(s.n - s.n_l(), s.k + 1 - j);
  return Rational(s.mu() * sum, binomial(s.n, s.k + 1));
}

std::pair<bool, bool> asymptotic_predicates(const PmdsShape& s, double c1, double c2) {
  validate(s);
  if (!(c1 > 1.0)) throw ConfigError("C1 must exceed 1");
  const double b = to_double(binomial(s.n_l(), xi_of(s)));
  const double lhs = std::pow(b, -1.0 / static_cast<double>(s.r + 1));
  const double n = static_cast<double>(s.n);
  const bool eq20 = lhs > c1 * static_cast<double>(s.k + 1) / n;
  const bool eq21 = static_cast<double>(s.r + 1) >= c2 * std::log2(n) / std::log2(c1);
  return {eq20, eq21};
}

namespace {

class FailureTable {
 public:
  FailureTable(const PmdsShape& s, std::int64_t t)
      : s_(s), t_(t), sigma_max_((s.mu() - 1) * (s.rho - 1)), tau_max_(s.n - t) {
    for (std::int64_t w = 0; w <= s.n_l(); ++w) binom_.push_back(binomial(s.n_l(), w));
    table_.assign(static_cast<std::size_t>(s.mu() * (tau_max_ + 1) * (sigma_max_ + 1) * 2), BigInt(-1));
  }

  BigInt W(std::int64_t eta, std::int64_t tau, std::int64_t sigma, int beta) {
    if (eta == 1) {
      if (tau > s_.n_l()) return 0;
      const int b = next_beta(beta, tau);
      const std::int64_t excess = sigma + std::max<std::int64_t>(0, tau - s_.r);
      return excess > s_.n - s_.k - t_ - b ? binom_[static_cast<std::size_t>(tau)] : BigInt(0);
    }
    BigInt& slot = table_[index(eta, tau, sigma, beta)];
    if (slot >= 0) return slot;
    ++touched_;
    BigInt sum = 0;
    for (std::int64_t w = 0; w <= std::min(tau, s_.n_l()); ++w) {
      const BigInt sub = W(eta - 1, tau - w, sigma + std::max<std::int64_t>(0, w - s_.r), next_beta(beta, w));
      if (sub != 0) sum += binom_[static_cast<std::size_t>(w)] * sub;
    }
    slot = sum;
    return sum;
  }

  std::size_t touched() const { return touched_; }

 private:
  int next_beta(int beta, std::int64_t w) const { return (beta == 1 || (w > 0 && w <= s_.r)) ? 1 : 0; }
  std::size_t index(std::int64_t eta, std::int64_t tau, std::int64_t sigma, int beta) const {
    if (sigma > sigma_max_) throw std::logic_error("excess outside the table bound");
    return static_cast<std::size_t>((((eta - 1) * (tau_max_ + 1) + tau) * (sigma_max_ + 1) + sigma) * 2 + beta);
  }

  PmdsShape s_;
  std::int64_t t_, sigma_max_, tau_max_;
  std::vector<BigInt> binom_;
  std::vector<BigInt> table_;
  std::size_t touched_ = 0;
};

}  // namespace

Rational failure_prob_exact(const PmdsShape& s, std::int64_t t, std::size_t& entries_touched) {
  validate(s);
  if (t < 0 || t > s.n) throw ConfigError("failure probability needs 0 <= t <= n");
  FailureTable table(s, t);
  const BigInt w = table.W(s.mu(), s.n - t, 0, 0);
  entries_touched = table.touched();
  return Rational(w, binomial(s.n, t));
}

Rational failure_prob_exact(const PmdsShape& s, std::int64_t t) {
  std::size_t ignored = 0;
  return failure_prob_exact(s, t, ignored);
}

Rational mk_success_prob(const PmdsShape& s, std::int64_t t, std::int64_t ell, const BigInt& q) {
  return (1 - failure_prob_exact(s, t)) * rank_full_fraction(q, ell, t);
}

}  // namespace lrcdec::pmds
