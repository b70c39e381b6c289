#include <doctest.h>

#include "lrcdec/descriptor.hpp"
#include "lrcdec/errors.hpp"

using namespace lrcdec;
using namespace lrcdec::io;

TEST_CASE("field and GRS descriptors round trip") {
  const gf::FieldSpec spec{2, 4, 0b10011};
  CHECK(field_spec_from_json(to_json(spec)) == spec);
  CHECK(field_spec_from_json(json{{"p", 7}, {"m", 1}}).modulus == 0);
  CHECK_THROWS_AS(field_spec_from_json(json{{"p", 7}}), ConfigError);
  CHECK_THROWS_AS(field_spec_from_json(json{{"p", "seven"}, {"m", 1}}), ConfigError);

  const gf::Field F(spec);
  const grs::GrsCode code(F, {1, 2, 3, 4, 5, 6, 7}, {1, 3, 5, 7, 9, 11, 13}, 3);
  const auto back = grs_from_json(json::parse(to_json(code).dump()));
  CHECK(back.locators() == code.locators());
  CHECK(back.multipliers() == code.multipliers());
  CHECK(back.k() == 3);
  CHECK(back.field().spec() == spec);
}

TEST_CASE("LRC descriptor round trip") {
  const auto code = lrc::construct_tamo_barg(gf::Field::binary(4), 15, 6, 3, 3);
  const auto j = to_json(code);
  CHECK(j["kind"] == "lrc");
  const auto back = lrc_from_json(json::parse(j.dump()));
  CHECK(back.generator() == code.generator());
  CHECK(back.repair_sets() == code.repair_sets());
  CHECK(back.supercode().k() == 8);
  CHECK(back.k() == 6);
  json broken = j;
  broken.erase("repair_sets");
  CHECK_THROWS_AS(lrc_from_json(broken), ConfigError);
}

TEST_CASE("PMDS descriptor round trip") {
  const auto code = pmds::random_pmds({2, 10, 0}, {12, 4, 2, 2}, 1);
  const auto back = pmds_from_json(json::parse(to_json(code).dump()));
  CHECK(back.verified);
  CHECK(back.generator == code.generator);
  CHECK(back.parity_check == code.parity_check);
  CHECK(back.partition == code.partition);
  json bad = to_json(code);
  bad["parity_check"][0][0] = (code.parity_check(0, 0) ^ 1u);
  CHECK_THROWS_AS(pmds_from_json(bad), ConfigError);
  bad = to_json(code);
  bad["k"] = 5;
  CHECK_THROWS_AS(pmds_from_json(bad), ConfigError);
}

TEST_CASE("bursts, matrices and reports") {
  interleaved::BurstError e{{1, 4}, gf::Matrix::from_rows({{1, 2}, {3, 0}})};
  const auto back = burst_from_json(json::parse(to_json(e).dump()));
  CHECK(back.support == e.support);
  CHECK(back.values == e.values);
  CHECK_THROWS_AS(matrix_from_json(json{{"a", 1}}), ConfigError);

  const auto rep = to_json(radii::report(radii::CodeShape::lrc(63, 16, 8, 14)));
  CHECK(rep["shape"]["q"] == "inf");
  CHECK(rep["t_g"] == 22);
  CHECK(rep["bar_t_g"] == 24);
  CHECK(rep["sigma"]["exact"] == "1/2");
  CHECK(rep["L_g"]["exact"].is_string());
  CHECK(rep["gain"]["mu_rho_exceeds_d"] == true);
  CHECK(to_json(radii::CodeShape::lrc(63, 16, 8, 14, 64))["q"] == 64);
}
