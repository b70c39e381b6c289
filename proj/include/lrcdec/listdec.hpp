#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "lrcdec/exact.hpp"
#include "lrcdec/lrc.hpp"
#include "lrcdec/radii.hpp"

namespace lrcdec::listdec {

using grs::Word;
using lrc::LrcCode;

enum class LocalDecoder { kGuruswamiSudan, kBoundedDistance };

struct DecodeConfig {
  std::int64_t t_l = 0;
  std::int64_t t_g = 0;
  LocalDecoder local = LocalDecoder::kGuruswamiSudan;
  // Stop after the first codeword is found.
  bool early_exit = false;
  // Maximum number of shortened-code decodes before giving up.
  std::uint64_t budget = 1'000'000;
};

struct DecodeStats {
  std::vector<std::size_t> local_list_sizes;
  std::size_t shortened_sets = 0;  // repair sets removed by shortening
  std::uint64_t combinations = 0;
  std::uint64_t shortened_decodes = 0;
  bool budget_exceeded = false;
};

struct DecodingList {
  std::vector<Word> codewords;  // sorted, distinct
  DecodeStats stats;
  bool complete = true;
};

// Shape of an LRC as seen by the decoder radii (theta = 1, d from the bound).
radii::CodeShape decoder_shape(const LrcCode& code);
// Default configuration: largest guaranteed local radius and bar_t_g.
DecodeConfig default_config(const LrcCode& code);
// Throws ConfigError when cfg is outside the decoder's guarantee.
void validate_config(const LrcCode& code, const DecodeConfig& cfg);
// Number of repair sets the decoder shortens: mu - floor(t_g / (t_l + 1)).
std::size_t shortened_set_count(const LrcCode& code, const DecodeConfig& cfg);

// All LRC codewords within distance t_g of received.
DecodingList list_decode_lrc(const LrcCode& code, const Word& received, const DecodeConfig& cfg);

// Decodes through the repair sets with the smallest nonempty local lists;
// empty when the choice or the result is not unique.
std::optional<Word> unique_decode_probabilistic(const LrcCode& code, const Word& received, const DecodeConfig& cfg);

// Miscorrection bound (q-1)^{-(d-1)} sum_{s<=t} (q-1)^s C(n, s).
Rational pe_tilde(std::int64_t n, std::int64_t d, const BigInt& q, std::int64_t t);

double success_prob_general(std::int64_t mu, std::int64_t t_g, std::int64_t t_l, double p_e, double p_loc1,
                            double p_glob1);

// (1 - P(n_l, rho, q, t_l))^mu (1 - P(floor(bar/(t_l+1)) n_l, d, q, bar)).
Rational success_prob_grs(const radii::CodeShape& s, std::int64_t q, std::int64_t t_l, std::int64_t bar_t_g);

// Success probability with an ell-interleaved code over GF(q); the unique
// decoding probabilities of the local and global decoders are supplied.
double interleaved_success_prob(const radii::CodeShape& s, std::int64_t ell, std::int64_t q, std::int64_t t_l,
                                std::int64_t t_g, double pr_uds_local, double pr_uds_global);

}  // namespace lrcdec::listdec
