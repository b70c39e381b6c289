#include "simulate.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>

#include "common.hpp"
#include "lrcdec/descriptor.hpp"
#include "lrcdec/errors.hpp"
#include "lrcdec/interleaved.hpp"
#include "lrcdec/rng.hpp"

namespace lrcdec::tools {

namespace {

enum class Verdict { kSuccess, kFailure, kMiscorrection };

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::kSuccess:
      return "success";
    case Verdict::kMiscorrection:
      return "miscorrection";
    default:
      return "failure";
  }
}

struct Trial {
  std::vector<std::size_t> support;
  Verdict verdict = Verdict::kFailure;
  std::size_t list_size = 0;
  bool budget_exceeded = false;
  double wall_us = 0;
};

std::uint64_t stream_index(std::int64_t weight, std::uint64_t trial) {
  return (static_cast<std::uint64_t>(weight) << 32) | trial;
}

std::vector<std::size_t> random_support(Rng& rng, std::size_t n, std::size_t w) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  for (std::size_t i = 0; i < w; ++i) std::swap(idx[i], idx[i + rng.uniform(n - i)]);
  std::vector<std::size_t> s(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(w));
  std::sort(s.begin(), s.end());
  return s;
}

// Wilson score interval at 95%.
std::pair<double, double> wilson(std::uint64_t ok, std::uint64_t n) {
  const double z = 1.959963984540054;
  const double p = static_cast<double>(ok) / static_cast<double>(n);
  const double nn = static_cast<double>(n);
  const double den = 1 + z * z / nn;
  const double mid = (p + z * z / (2 * nn)) / den;
  const double half = z * std::sqrt(p * (1 - p) / nn + z * z / (4 * nn * nn)) / den;
  return {std::max(0.0, mid - half), std::min(1.0, mid + half)};
}

template <typename Run>
json run_weights(const SimOptions& opt, std::size_t n, Run&& run) {
  if (opt.trials < 1) throw ConfigError("trials must be at least 1");
  std::ofstream records;
  if (!opt.records_path.empty()) {
    records.open(opt.records_path);
    if (!records) throw ConfigError("cannot open records file " + opt.records_path);
  }
  json rows = json::array();
  for (const std::int64_t w : opt.weights) {
    if (w < 0 || static_cast<std::size_t>(w) > n) throw ConfigError("error weight outside [0, n]");
    std::vector<Trial> trials(opt.trials);
    parallel_for(opt.trials, opt.threads, [&](std::uint64_t i) {
      Rng rng = Rng::stream(opt.seed, stream_index(w, i));
      const auto start = std::chrono::steady_clock::now();
      trials[i] = run(static_cast<std::size_t>(w), rng);
      trials[i].wall_us =
          std::chrono::duration<double, std::micro>(std::chrono::steady_clock::now() - start).count();
    });
    std::uint64_t ok = 0, fail = 0, mis = 0, budget = 0, list_total = 0;
    for (std::uint64_t i = 0; i < opt.trials; ++i) {
      const Trial& t = trials[i];
      ok += t.verdict == Verdict::kSuccess;
      fail += t.verdict == Verdict::kFailure;
      mis += t.verdict == Verdict::kMiscorrection;
      budget += t.budget_exceeded;
      list_total += t.list_size;
      if (records.is_open()) {
        records << json({{"weight", w},
                         {"trial", i},
                         {"stream", stream_index(w, i)},
                         {"support", t.support},
                         {"verdict", verdict_name(t.verdict)},
                         {"list_size", t.list_size},
                         {"budget_exceeded", t.budget_exceeded},
                         {"wall_us", t.wall_us}})
                       .dump()
                << '\n';
      }
    }
    const auto [lo, hi] = wilson(ok, opt.trials);
    rows.push_back({{"weight", w},
                    {"trials", opt.trials},
                    {"successes", ok},
                    {"failures", fail},
                    {"miscorrections", mis},
                    {"budget_exceeded", budget},
                    {"rate", static_cast<double>(ok) / static_cast<double>(opt.trials)},
                    {"ci95", {lo, hi}},
                    {"mean_list_size", static_cast<double>(list_total) / static_cast<double>(opt.trials)}});
  }
  return rows;
}

json exact(const Rational& r) { return {{"exact", to_string(r)}, {"value", to_double(r)}}; }

}  // namespace

json simulate_lrc(const lrc::LrcCode& code, const listdec::DecodeConfig& cfg, bool unique, const SimOptions& opt) {
  listdec::validate_config(code, cfg);
  const gf::Field& F = code.field();
  auto run = [&](std::size_t w, Rng& rng) {
    Trial t;
    std::vector<gf::Elem> msg(code.k());
    for (auto& v : msg) v = static_cast<gf::Elem>(rng.uniform(F.order()));
    const auto c = lrc::encode_lrc(code, msg);
    auto y = c;
    t.support = random_support(rng, code.n(), w);
    for (auto i : t.support) y[i] = F.add(y[i], static_cast<gf::Elem>(1 + rng.uniform(F.order() - 1)));
    if (unique) {
      const auto u = listdec::unique_decode_probabilistic(code, y, cfg);
      t.list_size = u ? 1 : 0;
      t.verdict = !u ? Verdict::kFailure : (*u == c ? Verdict::kSuccess : Verdict::kMiscorrection);
    } else {
      const auto list = listdec::list_decode_lrc(code, y, cfg);
      t.list_size = list.codewords.size();
      t.budget_exceeded = list.stats.budget_exceeded;
      const bool found = std::binary_search(list.codewords.begin(), list.codewords.end(), c);
      t.verdict = found ? Verdict::kSuccess : Verdict::kFailure;
    }
    return t;
  };
  json out = {{"kind", unique ? "lrc-unique" : "lrc-list"},
              {"code", {{"n", code.n()}, {"k", code.k()}, {"r", code.r()}, {"rho", code.rho()}, {"q", F.order()}}},
              {"config", {{"t_l", cfg.t_l}, {"t_g", cfg.t_g}, {"budget", cfg.budget}}},
              {"seed", opt.seed},
              {"trials", opt.trials}};
  if (unique) {
    const auto shape = listdec::decoder_shape(code);
    out["success_bound"] = exact(listdec::success_prob_grs(shape, F.order(), cfg.t_l, cfg.t_g));
  }
  out["results"] = run_weights(opt, code.n(), run);
  return out;
}

json simulate_mk(const MkCode& code, std::int64_t ell, const SimOptions& opt) {
  if (ell < 1) throw ConfigError("interleaving order must be at least 1");
  const gf::Field& F = code.field;
  const std::size_t n = code.generator.cols(), k = code.generator.rows();
  const auto l = static_cast<std::size_t>(ell);
  auto run = [&](std::size_t w, Rng& rng) {
    Trial t;
    gf::Matrix msg(l, k);
    for (std::size_t a = 0; a < l; ++a)
      for (std::size_t b = 0; b < k; ++b) msg(a, b) = static_cast<gf::Elem>(rng.uniform(F.order()));
    const gf::Matrix C = gf::multiply(F, msg, code.generator);
    interleaved::BurstError e;
    e.support = random_support(rng, n, w);
    t.support = e.support;
    // Burst of rank min(ell, w) with no zero column.
    while (true) {
      e.values = gf::Matrix(l, w);
      for (std::size_t a = 0; a < l; ++a)
        for (std::size_t b = 0; b < w; ++b) e.values(a, b) = static_cast<gf::Elem>(rng.uniform(F.order()));
      bool zero_col = false;
      for (std::size_t b = 0; b < w && !zero_col; ++b) {
        bool z = true;
        for (std::size_t a = 0; a < l && z; ++a) z = e.values(a, b) == 0;
        zero_col = z;
      }
      if (!zero_col && gf::rank(F, e.values) == std::min(l, w)) break;
    }
    const auto res = interleaved::mk_decode(F, code.parity_check, interleaved::apply_burst(F, C, e));
    t.list_size = res ? 1 : 0;
    t.verdict = !res ? Verdict::kFailure : (res->codeword == C ? Verdict::kSuccess : Verdict::kMiscorrection);
    return t;
  };
  json out = {{"kind", "mk"},
              {"code", {{"n", n}, {"k", k}, {"q", F.order()}}},
              {"ell", ell},
              {"seed", opt.seed},
              {"trials", opt.trials}};
  json rows = run_weights(opt, n, run);
  if (code.shape) {
    for (auto& row : rows) {
      const std::int64_t w = row["weight"].get<std::int64_t>();
      row["predicted"] = exact(pmds::mk_success_prob(*code.shape, w, ell, F.order()));
    }
  }
  out["results"] = rows;
  return out;
}

}  // namespace lrcdec::tools
