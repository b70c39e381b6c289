#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lrcdec/field.hpp"
#include "lrcdec/matrix.hpp"
#include "lrcdec/poly.hpp"

namespace lrcdec::grs {

using gf::Elem;
using gf::Field;
using gf::Poly;
using Word = std::vector<Elem>;

// Generalized Reed-Solomon code: symbol i of the codeword of f is
// multipliers[i] * f(locators[i]) with deg f < k.
class GrsCode {
 public:
  GrsCode(Field field, std::vector<Elem> locators, std::vector<Elem> multipliers, std::size_t k);
  // Reed-Solomon code: all multipliers one.
  static GrsCode reed_solomon(Field field, std::vector<Elem> locators, std::size_t k);

  const Field& field() const { return field_; }
  const std::vector<Elem>& locators() const { return locators_; }
  const std::vector<Elem>& multipliers() const { return multipliers_; }
  std::size_t n() const { return locators_.size(); }
  std::size_t k() const { return k_; }
  std::size_t d() const { return n() - k_ + 1; }
  std::optional<std::size_t> index_of(Elem locator) const;

  // Column multipliers of the dual GRS code.
  const std::vector<Elem>& dual_multipliers() const { return dual_; }
  gf::Matrix generator_matrix() const;
  gf::Matrix parity_check_matrix() const;

 private:
  Field field_;
  std::vector<Elem> locators_;
  std::vector<Elem> multipliers_;
  std::size_t k_;
  std::vector<Elem> dual_;
};

Word encode(const GrsCode& code, const Poly& message);
// Inverse of encode for codewords.
Poly message_of(const GrsCode& code, const Word& codeword);
bool is_codeword(const GrsCode& code, const Word& word);
std::size_t hamming_distance(const Word& a, const Word& b);
std::size_t weight(const Word& a);

struct BmdResult {
  Word codeword;
  Word error;  // received - codeword
};
// Unique decoding up to floor((d-1)/2) errors.
std::optional<BmdResult> bmd_decode(const GrsCode& code, const Word& received);

// Recovers the codeword agreeing with received outside the erased indices.
// Throws ConfigError when more than d-1 positions are erased.
std::optional<Word> erasure_decode(const GrsCode& code, const Word& received,
                                   const std::vector<std::size_t>& erased);

// Largest t with t < n - sqrt(n(n-d)), the radius guaranteed by the
// Guruswami-Sudan decoder.
std::int64_t gs_radius(std::int64_t n, std::int64_t d);

struct GsParams {
  std::size_t multiplicity = 0;
  std::size_t weighted_degree = 0;
};
// Smallest multiplicity reaching radius t for an [n, k] code.
GsParams gs_params(std::size_t n, std::size_t k, std::size_t t);

// All codewords within Hamming distance t of received. Throws ConfigError
// when t exceeds gs_radius(n, d).
std::vector<Word> gs_list_decode(const GrsCode& code, const Word& received, std::size_t t);

// The f^S map: repeated f^b = (f - f(b)) / (x - b) over the ordered set S.
Poly reduce_poly(const Field& F, const Poly& f, const std::vector<Elem>& S);

// [n - |S|, k - |S|] GRS code on the locators outside S, same multipliers.
GrsCode shorten_code(const GrsCode& code, const std::vector<Elem>& S);

struct ShortenContext {
  std::size_t n = 0;
  std::vector<std::size_t> kept;     // indices outside S, in code order
  std::vector<std::size_t> removed;  // indices of S
  std::vector<Elem> lift;            // prod_{b in S} (alpha_i - b) for kept i
};

struct Shortened {
  Word word;
  ShortenContext context;
};
// Maps a received word whose S positions are error-free to a received word of
// shorten_code(code, S) carrying the scaled errors of the kept positions.
Shortened shorten_received(const GrsCode& code, const Word& received, const std::vector<Elem>& S);
// Full-length error vector from an error of the shortened code (zero on S).
Word lift_error(const Field& F, const ShortenContext& ctx, const Word& shortened_error);

}  // namespace lrcdec::grs
