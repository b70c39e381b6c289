#include "lrcdec/listdec.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "lrcdec/errors.hpp"

namespace lrcdec::listdec {

namespace mp = boost::multiprecision;

radii::CodeShape decoder_shape(const LrcCode& code) {
  radii::CodeShape s;
  s.n = static_cast<std::int64_t>(code.n());
  s.k = static_cast<std::int64_t>(code.k());
  s.r = static_cast<std::int64_t>(code.r());
  s.rho = static_cast<std::int64_t>(code.rho());
  s.d = code.distance_bound();
  s.q = 0;
  return s;
}

namespace {

std::int64_t local_limit(const LrcCode& code, LocalDecoder dec) {
  const auto nl = static_cast<std::int64_t>(code.n_l());
  const auto rho = static_cast<std::int64_t>(code.rho());
  return dec == LocalDecoder::kGuruswamiSudan ? grs::gs_radius(nl, rho) : (rho - 1) / 2;
}

}  // namespace

DecodeConfig default_config(const LrcCode& code) {
  DecodeConfig cfg;
  cfg.t_l = local_limit(code, cfg.local);
  cfg.t_g = radii::bar_t_g(decoder_shape(code), cfg.t_l);
  return cfg;
}

std::size_t shortened_set_count(const LrcCode& code, const DecodeConfig& cfg) {
  const auto mu = static_cast<std::int64_t>(code.mu());
  return static_cast<std::size_t>(std::max<std::int64_t>(0, mu - cfg.t_g / (cfg.t_l + 1)));
}

void validate_config(const LrcCode& code, const DecodeConfig& cfg) {
  if (cfg.t_l < 0 || cfg.t_g < 0) throw ConfigError("decoding radii must be nonnegative");
  if (cfg.t_l > local_limit(code, cfg.local)) throw ConfigError("local radius exceeds the local decoder guarantee");
  const auto shape = decoder_shape(code);
  if (cfg.t_g > radii::bar_t_g(shape, cfg.t_l)) throw ConfigError("global radius exceeds bar_t_g for this local radius");
  const std::size_t s = shortened_set_count(code, cfg);
  const std::size_t removed = s * code.n_l();
  const auto& sup = code.supercode();
  if (removed < sup.k()) {
    const auto n_short = static_cast<std::int64_t>(code.n() - removed);
    if (cfg.t_g > grs::gs_radius(n_short, static_cast<std::int64_t>(sup.d()))) {
      throw ConfigError("global radius exceeds the shortened decoder guarantee");
    }
  }
}

namespace {

struct LocalCandidate {
  Word word;
  std::size_t distance;
};

std::vector<std::vector<LocalCandidate>> decode_locals(const LrcCode& code, const Word& received,
                                                       const DecodeConfig& cfg) {
  std::vector<std::vector<LocalCandidate>> lists(code.mu());
  for (std::size_t j = 0; j < code.mu(); ++j) {
    const grs::GrsCode local = code.local_code(j);
    const Word w = lrc::restrict(received, code.repair_sets()[j]);
    std::vector<Word> found;
    if (cfg.local == LocalDecoder::kGuruswamiSudan) {
      found = grs::gs_list_decode(local, w, static_cast<std::size_t>(cfg.t_l));
    } else if (auto r = grs::bmd_decode(local, w); r && grs::hamming_distance(r->codeword, w) <= static_cast<std::size_t>(cfg.t_l)) {
      found.push_back(r->codeword);
    }
    for (auto& c : found) {
      const std::size_t dist = grs::hamming_distance(c, w);
      lists[j].push_back({std::move(c), dist});
    }
  }
  return lists;
}

// Candidate codewords of the global decoding step once the chosen repair sets
// are fixed to the given local codewords.
std::vector<Word> decode_shortened(const LrcCode& code, const Word& received, const std::vector<std::size_t>& sets,
                                   const std::vector<const LocalCandidate*>& picks, std::size_t radius) {
  const auto& sup = code.supercode();
  const gf::Field& F = sup.field();
  Word fixed = received;
  std::vector<gf::Elem> S;
  for (std::size_t a = 0; a < sets.size(); ++a) {
    const auto& R = code.repair_sets()[sets[a]];
    for (std::size_t i = 0; i < R.size(); ++i) {
      fixed[R[i]] = picks[a]->word[i];
      S.push_back(sup.locators()[R[i]]);
    }
  }
  std::vector<Word> out;
  if (S.size() >= sup.k()) {
    // The fixed positions already determine the supercode codeword.
    std::vector<std::size_t> erased;
    std::vector<bool> in_s(sup.n(), false);
    for (auto b : S) in_s[*sup.index_of(b)] = true;
    for (std::size_t i = 0; i < sup.n(); ++i) {
      if (!in_s[i]) erased.push_back(i);
    }
    std::vector<gf::Elem> xs, ys;
    for (std::size_t i = 0; i < sup.n() && xs.size() < sup.k(); ++i) {
      if (!in_s[i]) continue;
      xs.push_back(sup.locators()[i]);
      ys.push_back(F.div(fixed[i], sup.multipliers()[i]));
    }
    Word c = grs::encode(sup, gf::lagrange_interpolate(F, xs, ys));
    bool agrees = true;
    for (std::size_t i = 0; i < sup.n(); ++i) agrees = agrees && (!in_s[i] || c[i] == fixed[i]);
    if (agrees) out.push_back(std::move(c));
    return out;
  }
  const grs::Shortened sh = grs::shorten_received(sup, fixed, S);
  const grs::GrsCode sc = grs::shorten_code(sup, S);
  for (const Word& cs : grs::gs_list_decode(sc, sh.word, radius)) {
    Word es(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) es[i] = F.sub(sh.word[i], cs[i]);
    const Word e = grs::lift_error(F, sh.context, es);
    Word c(sup.n());
    for (std::size_t i = 0; i < sup.n(); ++i) c[i] = F.sub(fixed[i], e[i]);
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

DecodingList list_decode_lrc(const LrcCode& code, const Word& received, const DecodeConfig& cfg) {
  if (received.size() != code.n()) throw ConfigError("received word length mismatch");
  validate_config(code, cfg);
  DecodingList result;
  const auto lists = decode_locals(code, received, cfg);
  for (const auto& l : lists) result.stats.local_list_sizes.push_back(l.size());
  const std::size_t s = shortened_set_count(code, cfg);
  result.stats.shortened_sets = s;

  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < lists.size(); ++j) {
    if (!lists[j].empty()) order.push_back(j);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return lists[a].size() < lists[b].size(); });
  if (order.size() < s) return result;

  std::set<Word> found;
  const auto tg = static_cast<std::size_t>(cfg.t_g);
  std::vector<std::size_t> comb(s);
  std::iota(comb.begin(), comb.end(), 0);
  bool done = false;
  while (!done) {
    ++result.stats.combinations;
    std::vector<std::size_t> sets(s);
    for (std::size_t a = 0; a < s; ++a) sets[a] = order[comb[a]];
    // Mixed-radix walk over the entries of the chosen local lists.
    std::vector<std::size_t> pick(s, 0);
    while (true) {
      std::vector<const LocalCandidate*> picks(s);
      std::size_t chi = 0;
      for (std::size_t a = 0; a < s; ++a) {
        picks[a] = &lists[sets[a]][pick[a]];
        chi += picks[a]->distance;
      }
      if (chi <= tg) {
        if (result.stats.shortened_decodes >= cfg.budget) {
          result.stats.budget_exceeded = true;
          result.complete = false;
          done = true;
          break;
        }
        ++result.stats.shortened_decodes;
        for (Word& c : decode_shortened(code, received, sets, picks, tg - chi)) {
          if (grs::hamming_distance(c, received) <= tg && code.contains(c)) found.insert(std::move(c));
        }
        if (cfg.early_exit && !found.empty()) {
          done = true;
          break;
        }
      }
      std::size_t a = 0;
      while (a < s && ++pick[a] == lists[sets[a]].size()) pick[a++] = 0;
      if (a == s) break;
    }
    if (done) break;
    // Next s-combination of positions in `order`, lexicographic.
    std::size_t i = s;
    while (i > 0 && comb[i - 1] == order.size() - s + (i - 1)) --i;
    if (i == 0) break;
    ++comb[i - 1];
    for (std::size_t j = i; j < s; ++j) comb[j] = comb[j - 1] + 1;
  }
  if (cfg.early_exit && !found.empty()) result.complete = false;
  result.codewords.assign(found.begin(), found.end());
  return result;
}

std::optional<Word> unique_decode_probabilistic(const LrcCode& code, const Word& received, const DecodeConfig& cfg) {
  if (received.size() != code.n()) throw ConfigError("received word length mismatch");
  validate_config(code, cfg);
  const auto lists = decode_locals(code, received, cfg);
  const std::size_t s = shortened_set_count(code, cfg);
  std::vector<std::size_t> order;
  for (std::size_t j = 0; j < lists.size(); ++j) {
    if (!lists[j].empty()) order.push_back(j);
  }
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return lists[a].size() < lists[b].size(); });
  if (order.size() < s) return std::nullopt;
  std::vector<std::size_t> sets(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(s));
  std::vector<const LocalCandidate*> picks;
  std::size_t chi = 0;
  for (auto j : sets) {
    if (lists[j].size() != 1) return std::nullopt;
    picks.push_back(&lists[j][0]);
    chi += lists[j][0].distance;
  }
  const auto tg = static_cast<std::size_t>(cfg.t_g);
  if (chi > tg) return std::nullopt;
  std::set<Word> found;
  for (Word& c : decode_shortened(code, received, sets, picks, tg - chi)) {
    if (grs::hamming_distance(c, received) <= tg && code.contains(c)) found.insert(std::move(c));
  }
  if (found.size() != 1) return std::nullopt;
  return *found.begin();
}

Rational pe_tilde(std::int64_t n, std::int64_t d, const BigInt& q, std::int64_t t) {
  if (q < 2) throw ConfigError("miscorrection bound needs q >= 2");
  if (t < 0 || t > n || d < 1) throw ConfigError("miscorrection bound needs 0 <= t <= n and d >= 1");
  const BigInt qm1 = q - 1;
  BigInt sum = 0, p = 1;
  for (std::int64_t s = 0; s <= t; ++s) {
    sum += p * binomial(n, s);
    p *= qm1;
  }
  return Rational(sum, ipow(qm1, static_cast<std::uint64_t>(d - 1)));
}

double success_prob_general(std::int64_t mu, std::int64_t t_g, std::int64_t t_l, double p_e, double p_loc1,
                            double p_glob1) {
  if (t_l < 0 || t_g < 0) throw ConfigError("radii must be nonnegative");
  const std::int64_t f = t_g / (t_l + 1);
  if (f > mu) throw ConfigError("t_g / (t_l + 1) exceeds the number of repair sets");
  return std::pow(1.0 - p_e, static_cast<double>(f)) * std::pow(p_loc1, static_cast<double>(mu - f)) * p_glob1;
}

Rational success_prob_grs(const radii::CodeShape& s, std::int64_t q, std::int64_t t_l, std::int64_t bar_t_g) {
  radii::validate(s);
  const BigInt qq = q;
  const Rational local = 1 - pe_tilde(s.n_l(), s.rho, qq, t_l);
  const std::int64_t n_short = (bar_t_g / (t_l + 1)) * s.n_l();
  const Rational global = 1 - pe_tilde(n_short, s.d, qq, bar_t_g);
  return ipow(local, static_cast<std::uint64_t>(s.mu())) * global;
}

double interleaved_success_prob(const radii::CodeShape& s, std::int64_t ell, std::int64_t q, std::int64_t t_l,
                                std::int64_t t_g, double pr_uds_local, double pr_uds_global) {
  radii::validate(s);
  if (ell < 1) throw ConfigError("interleaving order must be at least 1");
  const BigInt q_ell = ipow(BigInt(q), static_cast<std::uint64_t>(ell));
  const double pe = to_double(pe_tilde(s.n_l(), s.rho, q_ell, t_l));
  return success_prob_general(s.mu(), t_g, t_l, pe, pr_uds_local, pr_uds_global);
}

}  // namespace lrcdec::listdec
