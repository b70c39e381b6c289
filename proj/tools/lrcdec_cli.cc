// lrcdec command-line front end. Exit codes: 0 success, 1 decode failure,
// 2 configuration error.
#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "common.hpp"
#include "lrcdec/descriptor.hpp"
#include "lrcdec/errors.hpp"
#include "lrcdec/interleaved.hpp"
#include "simulate.hpp"
#include "tables.hpp"

using namespace lrcdec;
using namespace lrcdec::tools;

namespace {

constexpr int kDecodeFailure = 1;
constexpr int kConfigError = 2;

std::string g_output;
std::string g_format = "csv";

void emit(const std::string& text) {
  if (g_output.empty() || g_output == "-") {
    std::fwrite(text.data(), 1, text.size(), stdout);
    return;
  }
  std::ofstream out(g_output, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file " + g_output);
  out << text;
}

void emit_json(const json& j) { emit(j.dump(2) + "\n"); }

void emit_table(const Emitted& e) {
  for (const auto& w : e.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
  if (g_format == "json") {
    emit_json(e.data);
  } else {
    emit(e.csv);
  }
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::string kind_of(const json& j) { return j.contains("kind") ? j.at("kind").get<std::string>() : "grs"; }

// Received words: hex symbols separated by whitespace or commas, one word
// per line; blank lines and '#' comments are skipped.
std::vector<grs::Word> read_hex_words(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  std::vector<grs::Word> words;
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    for (char& ch : line)
      if (ch == ',') ch = ' ';
    std::istringstream tokens(line);
    grs::Word w;
    std::string tok;
    while (tokens >> tok) {
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(tok, &used, 16);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw ConfigError("'" + tok + "' in " + path + " is not a hex symbol");
      w.push_back(static_cast<gf::Elem>(v));
    }
    if (!w.empty()) words.push_back(std::move(w));
  }
  if (words.empty()) throw ConfigError(path + " holds no received word");
  return words;
}

void check_symbols(const gf::Field& F, const grs::Word& w, std::size_t n) {
  if (w.size() != n) throw ConfigError("received word has length " + std::to_string(w.size()) + ", code length is " +
                                       std::to_string(n));
  for (auto v : w)
    if (v >= F.order()) throw ConfigError("received symbol outside GF(" + std::to_string(F.order()) + ")");
}

json stats_json(const listdec::DecodeStats& s) {
  return {{"local_list_sizes", s.local_list_sizes},
          {"shortened_sets", s.shortened_sets},
          {"combinations", s.combinations},
          {"shortened_decodes", s.shortened_decodes},
          {"budget_exceeded", s.budget_exceeded}};
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text, std::int64_t n) {
  if (text.empty()) return {0, n};
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) {
      const auto t = std::stoll(text);
      return {t, t};
    }
    return {std::stoll(text.substr(0, colon)), std::stoll(text.substr(colon + 1))};
  } catch (const std::exception&) {
    throw ConfigError("t range '" + text + "' must be lo:hi");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Decoding radii, list and burst decoders, and success probabilities for LRC and PMDS codes"};
  app.require_subcommand(1);
  app.fallthrough();
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads for simulations (0 = all cores)");
  app.add_option("-o,--output", g_output, "Output file (default stdout)");
  std::function<int()> action;

  // radii
  auto* radii_cmd = app.add_subcommand("radii", "Decoding radii and list bounds of LRC shapes");
  std::vector<std::string> shape_texts;
  std::int64_t radii_ell = 2;
  radii_cmd->add_option("--shape", shape_texts, "n,k,r,rho[,q]; repeatable");
  radii_cmd->add_option("--ell", radii_ell, "Interleaving order for the interleaved radii");
  radii_cmd->add_option("--format", g_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  radii_cmd->callback([&] {
    action = [&] {
      std::vector<ShapeArg> shapes;
      for (const auto& t : shape_texts) shapes.push_back(parse_shape(t));
      emit_table(radii_rows(shapes, radii_ell));
      return 0;
    };
  });

  // tables
  auto* tables_cmd = app.add_subcommand("tables", "Reference tables: 1 (success bounds), 2 (radii), pmds");
  std::string table_id;
  tables_cmd->add_option("table", table_id, "1, 2 or pmds")->required()->check(CLI::IsMember({"1", "2", "pmds"}));
  tables_cmd->add_option("--format", g_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  tables_cmd->callback([&] {
    action = [&] {
      emit_table(table_id == "1" ? success_table() : table_id == "2" ? radius_table() : pmds_table());
      return 0;
    };
  });

  // pmds-prob
  auto* prob_cmd = app.add_subcommand("pmds-prob", "Failure probability of MK decoding on PMDS codes");
  PmdsProbRequest req;
  std::string t_range;
  bool want_exact = false, want_bound = false;
  prob_cmd->add_option("--n", req.shape.n)->required();
  prob_cmd->add_option("--k", req.shape.k)->required();
  prob_cmd->add_option("--r", req.shape.r)->required();
  prob_cmd->add_option("--rho", req.shape.rho)->required();
  prob_cmd->add_option("--t-range", t_range, "lo:hi or a single t (default 0:n)");
  prob_cmd->add_flag("--exact", want_exact, "Exact failure probability (default when --bound is absent)");
  prob_cmd->add_flag("--bound", want_bound, "Union and S_{k+1} bounds at t = n - k - 1");
  prob_cmd->add_option("--ell", req.ell, "Interleaving order for the MK success probability");
  prob_cmd->add_option("--q", req.q, "Field size for the MK success probability");
  prob_cmd->add_option("--format", g_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  prob_cmd->callback([&] {
    action = [&] {
      std::tie(req.t_lo, req.t_hi) = parse_range(t_range, req.shape.n);
      req.bound = want_bound;
      req.exact = want_exact || !want_bound;
      emit_table(pmds_prob(req));
      return 0;
    };
  });

  // simulate
  auto* sim_cmd = app.add_subcommand("simulate", "Seeded Monte-Carlo runs of the decoders");
  std::string sim_kind, sim_code;
  SimOptions sim;
  std::int64_t sim_ell = 8, sim_tl = -1, sim_tg = -1;
  std::uint64_t sim_budget = 1'000'000;
  sim_cmd->add_option("kind", sim_kind, "lrc-list, lrc-unique or mk")
      ->required()
      ->check(CLI::IsMember({"lrc-list", "lrc-unique", "mk"}));
  sim_cmd->add_option("--code", sim_code, "Code descriptor JSON (default: [15,6,3,3] Tamo-Barg or [12,4,2,2] PMDS)");
  sim_cmd->add_option("--weights,--t", sim.weights, "Error weights (default: 0..t_g, or 0..n-k for mk)");
  sim_cmd->add_option("--trials", sim.trials, "Trials per weight");
  sim_cmd->add_option("--seed", sim.seed, "Master seed");
  sim_cmd->add_option("--ell", sim_ell, "Interleaving order (mk)");
  sim_cmd->add_option("--tl", sim_tl, "Local decoding radius (lrc)");
  sim_cmd->add_option("--tg", sim_tg, "Global decoding radius (lrc)");
  sim_cmd->add_option("--budget", sim_budget, "Shortened-decode budget per word (lrc)");
  sim_cmd->add_option("--records", sim.records_path, "Per-trial JSON lines file");
  sim_cmd->callback([&] {
    action = [&] {
      sim.threads = threads;
      if (sim_kind == "mk") {
        MkCode mk{gf::Field::binary(1), {}, {}, std::nullopt};
        if (sim_code.empty()) {
          auto code = pmds::random_pmds({2, 10, 0}, {12, 4, 2, 2}, 1);
          mk = {code.field, code.generator, code.parity_check, code.shape};
        } else {
          const json j = read_json(sim_code);
          const std::string kind = kind_of(j);
          if (kind == "pmds") {
            auto code = io::pmds_from_json(j);
            mk = {code.field, code.generator, code.parity_check, code.verified ? std::optional(code.shape) : std::nullopt};
          } else if (kind == "lrc") {
            auto code = io::lrc_from_json(j);
            mk = {code.field(), code.generator(), code.parity_check(), std::nullopt};
          } else {
            auto code = io::grs_from_json(j);
            mk = {code.field(), code.generator_matrix(), code.parity_check_matrix(), std::nullopt};
          }
        }
        if (sim.weights.empty())
          for (std::size_t t = 0; t <= mk.parity_check.rows(); ++t) sim.weights.push_back(static_cast<std::int64_t>(t));
        emit_json(simulate_mk(mk, sim_ell, sim));
        return 0;
      }
      const lrc::LrcCode code = sim_code.empty()
                                    ? lrc::construct_tamo_barg(gf::Field::binary(4), 15, 6, 3, 3)
                                    : [&] {
                                        const json j = read_json(sim_code);
                                        if (kind_of(j) != "lrc") throw ConfigError("lrc simulations need an LRC descriptor");
                                        return io::lrc_from_json(j);
                                      }();
      auto cfg = listdec::default_config(code);
      if (sim_tl >= 0) cfg.t_l = sim_tl;
      if (sim_tg >= 0) cfg.t_g = sim_tg;
      cfg.budget = sim_budget;
      if (sim.weights.empty())
        for (std::int64_t w = 0; w <= cfg.t_g; ++w) sim.weights.push_back(w);
      emit_json(simulate_lrc(code, cfg, sim_kind == "lrc-unique", sim));
      return 0;
    };
  });

  // curves
  auto* curves_cmd = app.add_subcommand("curves", "Normalized global radius against relative distance");
  std::vector<double> betas{1, 2, 3, 4};
  double theta = 1.0;
  std::size_t steps = 100;
  curves_cmd->add_option("--beta", betas, "Curve parameters beta >= 1");
  curves_cmd->add_option("--theta", theta, "Alphabet factor 1 - 1/q (1 for unbounded q)");
  curves_cmd->add_option("--steps", steps, "Grid steps on [0, 1]");
  curves_cmd->add_option("--format", g_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  curves_cmd->callback([&] {
    action = [&] {
      emit_table(curves(betas, theta, steps));
      return 0;
    };
  });

  // gen-code
  auto* gen_cmd = app.add_subcommand("gen-code", "Write a code descriptor");
  std::string gen_kind;
  std::uint64_t gen_q = 0, gen_seed = 1;
  std::int64_t gn = 0, gk = 0, gr = 0, grho = 0;
  gen_cmd->add_option("kind", gen_kind, "tamo-barg or random-pmds")
      ->required()
      ->check(CLI::IsMember({"tamo-barg", "random-pmds"}));
  gen_cmd->add_option("--q", gen_q, "Field size")->required();
  gen_cmd->add_option("--n", gn)->required();
  gen_cmd->add_option("--k", gk)->required();
  gen_cmd->add_option("--r", gr)->required();
  gen_cmd->add_option("--rho", grho)->required();
  gen_cmd->add_option("--seed", gen_seed, "Seed (random-pmds)");
  gen_cmd->callback([&] {
    action = [&] {
      if (gn < 1 || gk < 1 || gr < 1 || grho < 1) throw ConfigError("n, k, r and rho must be positive");
      const auto spec = field_spec_of_order(gen_q);
      if (gen_kind == "tamo-barg") {
        const auto code = lrc::construct_tamo_barg(gf::Field(spec), static_cast<std::size_t>(gn),
                                                   static_cast<std::size_t>(gk), static_cast<std::size_t>(gr),
                                                   static_cast<std::size_t>(grho));
        emit_json(io::to_json(code));
      } else {
        emit_json(io::to_json(pmds::random_pmds(spec, {gn, gk, gr, grho}, gen_seed)));
      }
      return 0;
    };
  });

  // decode
  auto* dec_cmd = app.add_subcommand("decode", "Decode received words read from a hex file");
  std::string dec_code, dec_received, dec_mode = "list";
  std::int64_t dec_tl = -1, dec_tg = -1;
  std::uint64_t dec_seed = 1, dec_budget = 1'000'000;
  dec_cmd->add_option("--code", dec_code, "Code descriptor JSON")->required();
  dec_cmd->add_option("--received", dec_received, "Hex symbols, one word per line (one row per line for PMDS)")
      ->required();
  dec_cmd->add_option("--tl", dec_tl, "Local decoding radius");
  dec_cmd->add_option("--tg", dec_tg, "Global decoding radius");
  dec_cmd->add_option("--mode", dec_mode, "list or unique")->check(CLI::IsMember({"list", "unique"}));
  dec_cmd->add_option("--seed", dec_seed, "Recorded in the output; the decoders are deterministic");
  dec_cmd->add_option("--budget", dec_budget, "Shortened-decode budget");
  dec_cmd->callback([&] {
    action = [&] {
      const json j = read_json(dec_code);
      const std::string kind = kind_of(j);
      const auto words = read_hex_words(dec_received);
      json out = {{"mode", dec_mode}, {"seed", dec_seed}};
      bool ok = false;
      if (kind == "pmds") {
        const auto code = io::pmds_from_json(j);
        gf::Matrix R(words.size(), code.generator.cols());
        for (std::size_t i = 0; i < words.size(); ++i) {
          check_symbols(code.field, words[i], R.cols());
          for (std::size_t c = 0; c < R.cols(); ++c) R(i, c) = words[i][c];
        }
        const auto res = interleaved::mk_decode(code.field, code.parity_check, R);
        ok = res.has_value();
        out["list"] = ok ? json::array({io::matrix_to_json(res->codeword)}) : json::array();
        out["stats"] = {{"support", ok ? json(res->support) : json(nullptr)}};
      } else if (kind == "lrc") {
        const auto code = io::lrc_from_json(j);
        auto cfg = listdec::default_config(code);
        if (dec_tl >= 0) cfg.t_l = dec_tl;
        if (dec_tg >= 0) cfg.t_g = dec_tg;
        cfg.budget = dec_budget;
        listdec::validate_config(code, cfg);
        check_symbols(code.field(), words[0], code.n());
        out["config"] = {{"t_l", cfg.t_l}, {"t_g", cfg.t_g}};
        if (dec_mode == "list") {
          const auto list = listdec::list_decode_lrc(code, words[0], cfg);
          ok = !list.codewords.empty();
          out["list"] = list.codewords;
          out["complete"] = list.complete;
          out["stats"] = stats_json(list.stats);
        } else {
          const auto u = listdec::unique_decode_probabilistic(code, words[0], cfg);
          ok = u.has_value();
          out["list"] = ok ? json::array({*u}) : json::array();
          out["stats"] = json::object();
        }
      } else {
        const auto code = io::grs_from_json(j);
        check_symbols(code.field(), words[0], code.n());
        const auto d = static_cast<std::int64_t>(code.d());
        if (dec_mode == "list") {
          const std::int64_t t = dec_tg >= 0 ? dec_tg : grs::gs_radius(static_cast<std::int64_t>(code.n()), d);
          const auto list = grs::gs_list_decode(code, words[0], static_cast<std::size_t>(t));
          ok = !list.empty();
          out["list"] = list;
          out["stats"] = {{"t", t}};
        } else {
          const auto res = grs::bmd_decode(code, words[0]);
          ok = res.has_value();
          out["list"] = ok ? json::array({res->codeword}) : json::array();
          out["stats"] = {{"t", (d - 1) / 2}};
        }
      }
      emit_json(out);
      return ok ? 0 : kDecodeFailure;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }
  try {
    return action();
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kConfigError;
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kConfigError;
  } catch (const BudgetError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kConfigError;
  }
}
