#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "lrcdec/exact.hpp"
#include "lrcdec/field.hpp"
#include "lrcdec/interleaved.hpp"
#include "lrcdec/matrix.hpp"

namespace lrcdec::pmds {

using interleaved::Partition;

struct PmdsShape {
  std::int64_t n = 0, k = 0, r = 0, rho = 0;
  std::int64_t n_l() const { return r + rho - 1; }
  std::int64_t mu() const { return n / n_l(); }
};
void validate(const PmdsShape& s);

// Repair sets {0..n_l-1}, {n_l..2n_l-1}, ...
Partition consecutive_partition(std::size_t n, std::size_t n_l);

struct PmdsCode {
  gf::Field field;
  PmdsShape shape;
  gf::Matrix generator;     // k x n
  gf::Matrix parity_check;  // (n - k) x n
  Partition partition;
  bool verified = false;
};

// Every repair set restricts to an [n_l, r] MDS code and every set meeting
// each repair set in at most r positions is an information set. Throws
// BudgetError when more than max_checks subsets would be examined.
bool verify_pmds(const gf::Field& F, const gf::Matrix& generator, const Partition& partition, std::size_t r,
                 std::uint64_t max_checks = 5'000'000);

// Local codes are a fixed [n_l, r] GRS code, the global parities are drawn
// uniformly at random until verify_pmds accepts.
PmdsCode random_pmds(const gf::FieldSpec& spec, const PmdsShape& shape, std::uint64_t seed, std::size_t max_tries = 50);

// Number of size-m subsets meeting every repair set in at most r positions.
BigInt s_count(const PmdsShape& s, std::int64_t m);
BigInt s_k1_size(const PmdsShape& s);
// Inclusion-exclusion count of (k+1)-subsets containing a whole repair set
// (rho = 2), i.e. C(n, k+1) - |S_{k+1}|.
BigInt s_k1_complement_rho2(const PmdsShape& s);

// Probability that a uniformly random ell x t matrix over GF(q) has rank t.
Rational rank_full_fraction(const BigInt& q, std::int64_t ell, std::int64_t t);

// 1 - n C(r+rho-1, xi) ((k+1)/n)^{r+1}, xi = min(rho-2, floor((r+rho-1)/2)).
double sk1_bound(const PmdsShape& s);
// mu sum_{j=r+1}^{n_l} C(n_l, j) C(n - n_l, k+1-j) / C(n, k+1).
Rational union_bound_failure(const PmdsShape& s);
// (C(n_l, xi)^{-1/(r+1)} > C1 (k+1)/n, r+1 >= C2 log2(n)/log2(C1)).
std::pair<bool, bool> asymptotic_predicates(const PmdsShape& s, double c1, double c2);

// Probability that a uniformly random t-subset is not (t+1)-independent for
// a PMDS code of the given shape, by memoized recursion over repair sets.
Rational failure_prob_exact(const PmdsShape& s, std::int64_t t);
// Same value, also reporting how many table entries the recursion touched.
Rational failure_prob_exact(const PmdsShape& s, std::int64_t t, std::size_t& entries_touched);

// (1 - failure_prob_exact) * rank_full_fraction(q, ell, t).
Rational mk_success_prob(const PmdsShape& s, std::int64_t t, std::int64_t ell, const BigInt& q);

}  // namespace lrcdec::pmds
