#include "lrcdec/descriptor.hpp"

#include "lrcdec/errors.hpp"

namespace lrcdec::io {

namespace {

template <typename T>
T get(const json& j, const char* key) {
  if (!j.contains(key)) throw ConfigError(std::string("descriptor is missing '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("descriptor field '") + key + "': " + e.what());
  }
}

}  // namespace

json to_json(const gf::FieldSpec& spec) { return {{"p", spec.p}, {"m", spec.m}, {"modulus_bits", spec.modulus}}; }

gf::FieldSpec field_spec_from_json(const json& j) {
  gf::FieldSpec s;
  s.p = get<std::uint32_t>(j, "p");
  s.m = get<std::uint32_t>(j, "m");
  s.modulus = j.contains("modulus_bits") ? get<std::uint64_t>(j, "modulus_bits") : 0;
  return s;
}

json matrix_to_json(const gf::Matrix& m) { return m.to_rows(); }

gf::Matrix matrix_from_json(const json& j) {
  try {
    return gf::Matrix::from_rows(j.get<std::vector<std::vector<gf::Elem>>>());
  } catch (const json::exception& e) {
    throw ConfigError(std::string("matrix: ") + e.what());
  }
}

json to_json(const grs::GrsCode& code) {
  return {{"field", to_json(code.field().spec())},
          {"locators", code.locators()},
          {"multipliers", code.multipliers()},
          {"k", code.k()}};
}

grs::GrsCode grs_from_json(const json& j) {
  const gf::Field F(field_spec_from_json(get<json>(j, "field")));
  return grs::GrsCode(F, get<std::vector<gf::Elem>>(j, "locators"), get<std::vector<gf::Elem>>(j, "multipliers"),
                      get<std::size_t>(j, "k"));
}

json to_json(const lrc::LrcCode& code) {
  json j = to_json(code.supercode());
  j["kind"] = "lrc";
  j["supercode_k"] = code.supercode().k();
  j["k"] = code.k();
  j["r"] = code.r();
  j["rho"] = code.rho();
  j["repair_sets"] = code.repair_sets();
  j["generator"] = matrix_to_json(code.generator());
  return j;
}

lrc::LrcCode lrc_from_json(const json& j) {
  json sup = j;
  sup["k"] = get<std::size_t>(j, "supercode_k");
  grs::GrsCode super = grs_from_json(sup);
  const auto k = get<std::size_t>(j, "k");
  gf::Matrix gen = j.contains("generator") ? matrix_from_json(j.at("generator")) : gf::Matrix();
  if (!j.contains("generator")) {
    if (k != super.k()) throw ConfigError("LRC descriptor needs a generator unless k equals the supercode dimension");
    gen = super.generator_matrix();
  }
  return lrc::LrcCode(std::move(super), k, get<std::size_t>(j, "r"), get<std::size_t>(j, "rho"),
                      get<std::vector<std::vector<std::size_t>>>(j, "repair_sets"), std::move(gen));
}

json to_json(const pmds::PmdsCode& code) {
  return {{"kind", "pmds"},
          {"field", to_json(code.field.spec())},
          {"n", code.shape.n},
          {"k", code.shape.k},
          {"r", code.shape.r},
          {"rho", code.shape.rho},
          {"repair_sets", code.partition},
          {"generator", matrix_to_json(code.generator)},
          {"parity_check", matrix_to_json(code.parity_check)}};
}

pmds::PmdsCode pmds_from_json(const json& j) {
  const gf::Field F(field_spec_from_json(get<json>(j, "field")));
  pmds::PmdsShape s{get<std::int64_t>(j, "n"), get<std::int64_t>(j, "k"), get<std::int64_t>(j, "r"),
                    get<std::int64_t>(j, "rho")};
  pmds::validate(s);
  pmds::PmdsCode code{F, s, matrix_from_json(get<json>(j, "generator")), matrix_from_json(get<json>(j, "parity_check")),
                      get<pmds::Partition>(j, "repair_sets"), false};
  if (code.generator.rows() != static_cast<std::size_t>(s.k) || code.generator.cols() != static_cast<std::size_t>(s.n) ||
      code.parity_check.rows() != static_cast<std::size_t>(s.n - s.k) ||
      code.parity_check.cols() != static_cast<std::size_t>(s.n)) {
    throw ConfigError("PMDS descriptor matrices have the wrong dimensions");
  }
  if (!gf::multiply(F, code.generator, code.parity_check.transpose()).is_zero()) {
    throw ConfigError("PMDS descriptor generator and parity-check matrices are not orthogonal");
  }
  try {
    code.verified = pmds::verify_pmds(F, code.generator, code.partition, static_cast<std::size_t>(s.r));
  } catch (const BudgetError&) {
    code.verified = false;
  }
  return code;
}

json to_json(const interleaved::BurstError& e) { return {{"support", e.support}, {"values", matrix_to_json(e.values)}}; }

interleaved::BurstError burst_from_json(const json& j) {
  interleaved::BurstError e;
  e.support = get<std::vector<std::size_t>>(j, "support");
  e.values = matrix_from_json(get<json>(j, "values"));
  return e;
}

json to_json(const radii::CodeShape& s) {
  json j = {{"n", s.n}, {"k", s.k}, {"d", s.d}, {"r", s.r}, {"rho", s.rho}, {"n_l", s.n_l()}, {"mu", s.mu()}};
  j["q"] = s.q == 0 ? json("inf") : json(s.q);
  return j;
}

namespace {

json optional_int(const std::optional<BigInt>& v) { return v ? json(to_string(*v)) : json(nullptr); }
json optional_real(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

}  // namespace

json to_json(const radii::RadiusReport& r) {
  json j;
  j["shape"] = to_json(r.shape);
  j["theta"] = {{"exact", to_string(r.shape.theta())}, {"value", r.shape.theta_d()}};
  j["tau_J"] = r.tau_J;
  j["t_J"] = r.t_J;
  j["L_johnson"] = optional_int(r.L_johnson);
  j["tau_J_local"] = r.tau_J_local;
  j["tau_J_local_theta1"] = r.tau_J_local_free;
  j["t_l"] = r.t_l;
  j["sigma"] = {{"exact", to_string(r.sigma)}, {"value", to_double(r.sigma)}, {"ceil", r.sigma_ceil}};
  j["tau_g"] = r.tau_g;
  j["t_g"] = r.t_g;
  j["bar_t_g"] = r.bar_t_g;
  j["L_g"] = {{"exact", optional_int(r.bounds.basic)}, {"real", optional_real(r.bounds.basic_real)}};
  j["L_g_improved"] = {{"exact", optional_int(r.bounds.improved)}, {"real", optional_real(r.bounds.improved_real)}};
  j["ell"] = r.ell;
  j["tau_irs"] = r.tau_irs;
  j["tau_g_interleaved"] = r.tau_g_interleaved;
  j["t_g_interleaved"] = r.t_g_interleaved;
  j["tau_g_l2"] = r.tau_g_l2;
  j["gain"] = {{"mu_rho_exceeds_d", r.gain.mu_rho_exceeds_d}, {"local_radius_gain", r.gain.local_radius_gain}};
  return j;
}

}  // namespace lrcdec::io
