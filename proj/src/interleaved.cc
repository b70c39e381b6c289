#include "lrcdec/interleaved.hpp"

#include <algorithm>

#include "lrcdec/errors.hpp"

namespace lrcdec::interleaved {

Matrix apply_burst(const gf::Field& F, const Matrix& word, const BurstError& e) {
  if (e.values.rows() != word.rows() || e.values.cols() != e.support.size()) {
    throw ConfigError("burst error dimensions do not match the word");
  }
  Matrix out = word;
  for (std::size_t c = 0; c < e.support.size(); ++c) {
    if (e.support[c] >= word.cols()) throw ConfigError("burst support out of range");
    for (std::size_t i = 0; i < word.rows(); ++i) {
      out(i, e.support[c]) = F.add(out(i, e.support[c]), e.values(i, c));
    }
  }
  return out;
}

std::optional<MkResult> mk_decode(const gf::Field& F, const Matrix& H, const Matrix& R) {
  if (H.cols() != R.cols()) throw ConfigError("parity-check matrix and word differ in length");
  const std::size_t n = H.cols(), checks = H.rows(), ell = R.rows();
  const Matrix S = gf::multiply(F, H, R.transpose());  // checks x ell
  const gf::Rref red = gf::rref(F, S, true);
  if (red.rank() == 0) return MkResult{R, {}};
  const std::size_t zeta = checks - red.rank();
  if (zeta == 0) return std::nullopt;

  // Q: bottom zeta rows of P H; its zero columns are the declared support.
  const Matrix PH = gf::multiply(F, red.transform, H);
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < n; ++j) {
    bool zero = true;
    for (std::size_t i = checks - zeta; i < checks && zero; ++i) zero = PH(i, j) == 0;
    if (zero) support.push_back(j);
  }
  if (support.empty() || support.size() > checks) return std::nullopt;

  // Solve H_E A^T = S for the error values on the declared support.
  const Matrix HE = H.select_cols(support);
  auto sol = gf::solve(F, HE, S);
  if (!sol || !sol->unique) return std::nullopt;
  Matrix C = R;
  for (std::size_t c = 0; c < support.size(); ++c) {
    for (std::size_t i = 0; i < ell; ++i) C(i, support[c]) = F.sub(C(i, support[c]), sol->x(c, i));
  }
  if (!gf::multiply(F, H, C.transpose()).is_zero()) return std::nullopt;
  return MkResult{std::move(C), std::move(support)};
}

bool is_t1_independent_rank(const gf::Field& F, const Matrix& H, const std::vector<std::size_t>& E) {
  const std::size_t t = E.size();
  std::vector<bool> in_e(H.cols(), false);
  for (auto i : E) {
    if (i >= H.cols()) throw ConfigError("support index out of range");
    in_e[i] = true;
  }
  if (gf::rank(F, H.select_cols(E)) != t) return false;
  std::vector<std::size_t> cols(E);
  cols.push_back(0);
  for (std::size_t i = 0; i < H.cols(); ++i) {
    if (in_e[i]) continue;
    cols.back() = i;
    if (gf::rank(F, H.select_cols(cols)) != t + 1) return false;
  }
  return true;
}

namespace {

std::vector<std::size_t> clean_counts(const Partition& partition, std::size_t n, const std::vector<std::size_t>& E) {
  std::vector<bool> in_e(n, false);
  for (auto i : E) {
    if (i >= n) throw ConfigError("support index out of range");
    in_e[i] = true;
  }
  std::vector<std::size_t> T;
  for (const auto& R : partition) {
    std::size_t c = 0;
    for (auto i : R) c += !in_e[i];
    T.push_back(c);
  }
  return T;
}

}  // namespace

bool excess_criterion(const Partition& partition, std::size_t n, std::size_t k, std::size_t r,
                      const std::vector<std::size_t>& E) {
  const auto T = clean_counts(partition, n, E);
  std::int64_t excess = 0;
  bool partial = false;
  for (auto ti : T) {
    if (ti > r) excess += static_cast<std::int64_t>(ti - r);
    if (ti > 0 && ti <= r) partial = true;
  }
  const std::int64_t t = static_cast<std::int64_t>(E.size());
  const std::int64_t bound = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(k) - t - (partial ? 1 : 0);
  return excess <= bound;
}

bool sk1_sufficient(const Partition& partition, std::size_t k, std::size_t r, const std::vector<std::size_t>& E) {
  std::size_t n = 0;
  for (const auto& R : partition) n += R.size();
  std::size_t total = 0;
  for (auto ti : clean_counts(partition, n, E)) total += std::min(ti, r);
  return total >= k + 1;
}

std::vector<BigInt> to_extension_field(const gf::Field& F, const Matrix& word) {
  const BigInt q = F.order();
  std::vector<BigInt> out(word.cols());
  for (std::size_t j = 0; j < word.cols(); ++j) {
    BigInt v = 0;
    for (std::size_t i = word.rows(); i-- > 0;) v = v * q + word(i, j);
    out[j] = v;
  }
  return out;
}

Matrix from_extension_field(const gf::Field& F, const std::vector<BigInt>& symbols, std::size_t ell) {
  const BigInt q = F.order();
  Matrix m(ell, symbols.size());
  for (std::size_t j = 0; j < symbols.size(); ++j) {
    BigInt v = symbols[j];
    if (v < 0) throw ConfigError("negative extension-field symbol");
    for (std::size_t i = 0; i < ell; ++i) {
      m(i, j) = static_cast<Elem>(v % q);
      v /= q;
    }
    if (v != 0) throw ConfigError("extension-field symbol out of range");
  }
  return m;
}

std::optional<gf::FieldSpec> extension_field_spec(const gf::Field& F, std::size_t ell) {
  const std::uint64_t m = static_cast<std::uint64_t>(F.degree()) * ell;
  std::uint64_t q = 1;
  for (std::uint64_t i = 0; i < m; ++i) {
    q *= F.characteristic();
    if (q > gf::kMaxOrder) return std::nullopt;
  }
  return gf::FieldSpec{F.characteristic(), static_cast<std::uint32_t>(m), 0};
}

}  // namespace lrcdec::interleaved
