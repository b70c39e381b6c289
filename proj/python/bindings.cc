#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lrcdec/descriptor.hpp"
#include "lrcdec/errors.hpp"
#include "lrcdec/interleaved.hpp"
#include "lrcdec/listdec.hpp"
#include "lrcdec/pmds.hpp"
#include "lrcdec/radii.hpp"
#include "tables.hpp"

namespace py = pybind11;
using namespace lrcdec;

namespace {

// Descriptors and reports cross the boundary as JSON text; the Python
// package turns them into dicts and Fractions.
using Desc = std::string;
using nlohmann::json;

radii::CodeShape shape_of(std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t rho, std::int64_t q) {
  auto s = radii::CodeShape::lrc(n, k, r, rho, q);
  radii::validate(s);
  return s;
}

gf::FieldSpec spec_of(std::uint64_t q) {
  const auto f = gf::prime_factors(q);
  if (q < 2 || f.size() != 1) throw ConfigError("field order must be a prime power");
  std::uint32_t m = 0;
  for (std::uint64_t v = q; v > 1; v /= f[0]) ++m;
  return {static_cast<std::uint32_t>(f[0]), m, 0};
}

listdec::DecodeConfig config_for(const lrc::LrcCode& code, std::int64_t t_l, std::int64_t t_g) {
  auto cfg = listdec::default_config(code);
  if (t_l >= 0) cfg.t_l = t_l;
  if (t_g >= 0) cfg.t_g = t_g;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_lrcdec, m) {
  m.doc() = "Decoders and radius/probability computations for LRC and PMDS codes";

  py::register_exception<ConfigError>(m, "ConfigError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ArithmeticError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  // Radii.
  m.def("johnson_radius", &radii::johnson_radius, py::arg("n"), py::arg("d"), py::arg("q") = 0);
  m.def("johnson_t", &radii::johnson_t, py::arg("n"), py::arg("d"), py::arg("q") = 0);
  m.def(
      "radius_report",
      [](std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t rho, std::int64_t q, std::int64_t ell) {
        return io::to_json(radii::report(shape_of(n, k, r, rho, q), ell)).dump();
      },
      py::arg("n"), py::arg("k"), py::arg("r"), py::arg("rho"), py::arg("q") = 0, py::arg("ell") = 2);
  m.def(
      "bar_t_g",
      [](std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t rho) {
        const auto s = shape_of(n, k, r, rho, 0);
        return radii::bar_t_g(s, radii::t_local(s));
      },
      py::arg("n"), py::arg("k"), py::arg("r"), py::arg("rho"));
  m.def("irs_radius", &radii::irs_radius, py::arg("n"), py::arg("d"), py::arg("ell"));
  m.def("normalized_radius", &radii::normalized_radius, py::arg("beta"), py::arg("delta"), py::arg("theta") = 1.0);

  // Success probability of probabilistic unique decoding, exact.
  m.def(
      "success_prob_grs",
      [](std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t rho, std::int64_t q, std::int64_t t_l,
         std::int64_t t_g) {
        const auto s = shape_of(n, k, r, rho, 0);
        if (t_l < 0) t_l = radii::t_local(s);
        if (t_g < 0) t_g = radii::bar_t_g(s, t_l);
        return to_string(listdec::success_prob_grs(s, q, t_l, t_g));
      },
      py::arg("n"), py::arg("k"), py::arg("r"), py::arg("rho"), py::arg("q"), py::arg("t_l") = -1,
      py::arg("t_g") = -1);

  // PMDS probabilities, as exact rational strings.
  m.def(
      "failure_prob_exact",
      [](std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t rho, std::int64_t t) {
        return to_string(pmds::failure_prob_exact({n, k, r, rho}, t));
      },
      py::arg("n"), py::arg("k"), py::arg("r"), py::arg("rho"), py::arg("t"));
  m.def(
      "union_bound_failure",
      [](std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t rho) {
        return to_string(pmds::union_bound_failure({n, k, r, rho}));
      },
      py::arg("n"), py::arg("k"), py::arg("r"), py::arg("rho"));
  m.def(
      "mk_success_prob",
      [](std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t rho, std::int64_t t, std::int64_t ell,
         std::int64_t q) { return to_string(pmds::mk_success_prob({n, k, r, rho}, t, ell, BigInt(q))); },
      py::arg("n"), py::arg("k"), py::arg("r"), py::arg("rho"), py::arg("t"), py::arg("ell"), py::arg("q"));

  // Codes and decoders.
  m.def(
      "tamo_barg",
      [](std::uint64_t q, std::size_t n, std::size_t k, std::size_t r, std::size_t rho) -> Desc {
        return io::to_json(lrc::construct_tamo_barg(gf::Field(spec_of(q)), n, k, r, rho)).dump();
      },
      py::arg("q"), py::arg("n"), py::arg("k"), py::arg("r"), py::arg("rho"));
  m.def(
      "random_pmds",
      [](std::uint64_t q, std::int64_t n, std::int64_t k, std::int64_t r, std::int64_t rho,
         std::uint64_t seed) -> Desc { return io::to_json(pmds::random_pmds(spec_of(q), {n, k, r, rho}, seed)).dump(); },
      py::arg("q"), py::arg("n"), py::arg("k"), py::arg("r"), py::arg("rho"), py::arg("seed") = 1);
  m.def(
      "encode_lrc",
      [](const Desc& desc, const std::vector<gf::Elem>& message) {
        return lrc::encode_lrc(io::lrc_from_json(json::parse(desc)), message);
      },
      py::arg("code"), py::arg("message"));
  m.def(
      "list_decode",
      [](const Desc& desc, const grs::Word& received, std::int64_t t_l, std::int64_t t_g) {
        const auto code = io::lrc_from_json(json::parse(desc));
        const auto cfg = config_for(code, t_l, t_g);
        py::gil_scoped_release release;
        const auto list = listdec::list_decode_lrc(code, received, cfg);
        return std::make_pair(list.codewords, list.complete);
      },
      py::arg("code"), py::arg("received"), py::arg("t_l") = -1, py::arg("t_g") = -1);
  m.def(
      "unique_decode",
      [](const Desc& desc, const grs::Word& received, std::int64_t t_l, std::int64_t t_g) {
        const auto code = io::lrc_from_json(json::parse(desc));
        const auto cfg = config_for(code, t_l, t_g);
        py::gil_scoped_release release;
        return listdec::unique_decode_probabilistic(code, received, cfg);
      },
      py::arg("code"), py::arg("received"), py::arg("t_l") = -1, py::arg("t_g") = -1);
  m.def(
      "mk_decode",
      [](const Desc& desc, const std::vector<std::vector<gf::Elem>>& rows)
          -> std::optional<std::pair<std::vector<std::vector<gf::Elem>>, std::vector<std::size_t>>> {
        const auto code = io::pmds_from_json(json::parse(desc));
        const auto res = interleaved::mk_decode(code.field, code.parity_check, gf::Matrix::from_rows(rows));
        if (!res) return std::nullopt;
        return std::make_pair(res->codeword.to_rows(), res->support);
      },
      py::arg("code"), py::arg("rows"));

  // Reference tables as CSV.
  m.def(
      "table",
      [](const std::string& id) {
        if (id == "1") return tools::success_table().csv;
        if (id == "2") return tools::radius_table().csv;
        if (id == "pmds") return tools::pmds_table().csv;
        throw ConfigError("table must be '1', '2' or 'pmds'");
      },
      py::arg("id"));
}
