#include "lrcdec/lrc.hpp"

#include "lrcdec/errors.hpp"

namespace lrcdec::lrc {

std::int64_t optimal_distance(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t rho) {
  if (r < 1 || k < 1 || rho < 2) throw ConfigError("optimal_distance needs k, r >= 1 and rho >= 2");
  const std::int64_t groups = (k + r - 1) / r;
  return n - k + 1 - (groups - 1) * (rho - 1);
}

LrcCode::LrcCode(GrsCode supercode, std::size_t k, std::size_t r, std::size_t rho,
                 std::vector<std::vector<std::size_t>> repair_sets, gf::Matrix generator)
    : super_(std::move(supercode)), k_(k), r_(r), rho_(rho), repair_sets_(std::move(repair_sets)),
      gen_(std::move(generator)) {
  const std::size_t n = super_.n();
  if (r_ < 1 || rho_ < 2) throw ConfigError("LRC needs r >= 1 and rho >= 2");
  if (k_ < 1 || k_ % r_ != 0) throw ConfigError("LRC needs r | k");
  if (n % n_l() != 0) throw ConfigError("LRC needs (r + rho - 1) | n");
  if (repair_sets_.size() != n / n_l()) throw ConfigError("LRC repair set count must be n / n_l");
  std::vector<bool> covered(n, false);
  for (const auto& R : repair_sets_) {
    if (R.size() != n_l()) throw ConfigError("LRC repair sets must have size r + rho - 1");
    for (auto i : R) {
      if (i >= n || covered[i]) throw ConfigError("LRC repair sets must partition the coordinates");
      covered[i] = true;
    }
  }
  if (gen_.rows() != k_ || gen_.cols() != n) throw ConfigError("LRC generator must be k x n");
  const gf::Field& F = super_.field();
  if (gf::rank(F, gen_) != k_) throw ConfigError("LRC generator is rank deficient");
  for (std::size_t i = 0; i < k_; ++i) {
    if (!grs::is_codeword(super_, gen_.row(i))) throw ConfigError("LRC generator row outside the supercode");
  }
  for (std::size_t j = 0; j < mu(); ++j) {
    const GrsCode local = local_code(j);
    const gf::Matrix restricted = gen_.select_cols(repair_sets_[j]);
    if (gf::rank(F, restricted) != r_) throw ConfigError("LRC local generator must have rank r");
    for (std::size_t i = 0; i < k_; ++i) {
      if (!grs::is_codeword(local, restricted.row(i))) throw ConfigError("LRC restriction outside the local code");
    }
  }
  check_ = gf::nullspace(F, gen_);
}

std::int64_t LrcCode::distance_bound() const {
  return optimal_distance(static_cast<std::int64_t>(n()), static_cast<std::int64_t>(k_),
                          static_cast<std::int64_t>(r_), static_cast<std::int64_t>(rho_));
}

GrsCode LrcCode::local_code(std::size_t j) const {
  if (j >= mu()) throw ConfigError("repair set index out of range");
  std::vector<Elem> loc, mult;
  for (auto i : repair_sets_[j]) {
    loc.push_back(super_.locators()[i]);
    mult.push_back(super_.multipliers()[i]);
  }
  return GrsCode(super_.field(), std::move(loc), std::move(mult), r_);
}

bool LrcCode::contains(const Word& word) const {
  if (word.size() != n()) return false;
  for (Elem v : word) {
    if (!field().contains(v)) return false;
  }
  for (Elem s : gf::multiply(field(), check_, word)) {
    if (s != 0) return false;
  }
  return true;
}

Word encode_lrc(const LrcCode& code, const std::vector<Elem>& message) {
  if (message.size() != code.k()) throw ConfigError("LRC message must have k symbols");
  const gf::Field& F = code.field();
  Word c(code.n(), 0);
  for (std::size_t i = 0; i < code.k(); ++i) {
    if (message[i] == 0) continue;
    for (std::size_t j = 0; j < code.n(); ++j) c[j] = F.add(c[j], F.mul(message[i], code.generator()(i, j)));
  }
  return c;
}

Word restrict(const Word& word, const std::vector<std::size_t>& repair_set) {
  Word out;
  out.reserve(repair_set.size());
  for (auto i : repair_set) out.push_back(word.at(i));
  return out;
}

LrcCode construct_tamo_barg(const gf::Field& field, std::size_t n, std::size_t k, std::size_t r,
                            std::size_t rho) {
  if (r < 1 || rho < 2) throw ConfigError("Tamo-Barg needs r >= 1 and rho >= 2");
  const std::size_t nl = r + rho - 1;
  const std::size_t q1 = field.order() - 1;
  if (k == 0 || k % r != 0) throw ConfigError("Tamo-Barg needs r | k");
  if (n % nl != 0) throw ConfigError("Tamo-Barg needs (r + rho - 1) | n");
  if (q1 % n != 0) throw ConfigError("Tamo-Barg needs n | q - 1");
  const std::size_t mu = n / nl;
  const std::size_t groups = k / r;
  const std::size_t k_sup = (groups - 1) * nl + r;
  if (k_sup > n) throw ConfigError("Tamo-Barg supercode dimension exceeds n");

  const Elem h = field.pow(field.primitive(), q1 / n);  // order n
  const Elem zeta = field.pow(h, mu);                   // order n_l
  std::vector<Elem> locators(n);
  std::vector<std::vector<std::size_t>> sets(mu);
  for (std::size_t j = 0; j < mu; ++j) {
    const Elem coset = field.pow(h, j);
    for (std::size_t i = 0; i < nl; ++i) {
      locators[j * nl + i] = field.mul(coset, field.pow(zeta, i));
      sets[j].push_back(j * nl + i);
    }
  }
  GrsCode super = GrsCode::reed_solomon(field, locators, k_sup);
  gf::Matrix gen(k, n);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < groups; ++j) {
      const std::size_t deg = i + nl * j;
      for (std::size_t c = 0; c < n; ++c) gen(i * groups + j, c) = field.pow(locators[c], deg);
    }
  }
  return LrcCode(std::move(super), k, r, rho, std::move(sets), std::move(gen));
}

}  // namespace lrcdec::lrc
