#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "lrcdec/grs.hpp"
#include "lrcdec/matrix.hpp"

namespace lrcdec::lrc {

using grs::GrsCode;
using grs::Word;
using gf::Elem;

// Upper bound on the minimum distance of an LRC with (r, rho)-locality.
std::int64_t optimal_distance(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t rho);

// Locally repairable code realized as a subcode of a GRS supercode. The
// subcode is the row space of generator; each repair set restricts the code
// to an [n_l, r, rho] GRS local code.
class LrcCode {
 public:
  LrcCode(GrsCode supercode, std::size_t k, std::size_t r, std::size_t rho,
          std::vector<std::vector<std::size_t>> repair_sets, gf::Matrix generator);

  const GrsCode& supercode() const { return super_; }
  const gf::Field& field() const { return super_.field(); }
  std::size_t n() const { return super_.n(); }
  std::size_t k() const { return k_; }
  std::size_t r() const { return r_; }
  std::size_t rho() const { return rho_; }
  std::size_t n_l() const { return r_ + rho_ - 1; }
  std::size_t mu() const { return repair_sets_.size(); }
  // Singleton-like distance bound for these parameters.
  std::int64_t distance_bound() const;
  const std::vector<std::vector<std::size_t>>& repair_sets() const { return repair_sets_; }
  const gf::Matrix& generator() const { return gen_; }
  const gf::Matrix& parity_check() const { return check_; }

  GrsCode local_code(std::size_t j) const;
  bool contains(const Word& word) const;

 private:
  GrsCode super_;
  std::size_t k_, r_, rho_;
  std::vector<std::vector<std::size_t>> repair_sets_;
  gf::Matrix gen_;
  gf::Matrix check_;
};

Word encode_lrc(const LrcCode& code, const std::vector<Elem>& message);
Word restrict(const Word& word, const std::vector<std::size_t>& repair_set);

// Tamo-Barg construction with good polynomial x^{n_l}: the evaluation set is
// the order-n multiplicative subgroup, repair sets are the cosets of the
// order-n_l subgroup, and message symbol (i, j) is coefficient j of f_i in
// f(x) = sum_{i<r} f_i(x^{n_l}) x^i.
LrcCode construct_tamo_barg(const gf::Field& field, std::size_t n, std::size_t k, std::size_t r,
                            std::size_t rho);

}  // namespace lrcdec::lrc
