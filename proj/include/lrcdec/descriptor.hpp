#pragma once

#include <json.hpp>

#include "lrcdec/grs.hpp"
#include "lrcdec/interleaved.hpp"
#include "lrcdec/lrc.hpp"
#include "lrcdec/pmds.hpp"
#include "lrcdec/radii.hpp"

namespace lrcdec::io {

using nlohmann::json;

json to_json(const gf::FieldSpec& spec);
gf::FieldSpec field_spec_from_json(const json& j);

json to_json(const grs::GrsCode& code);
grs::GrsCode grs_from_json(const json& j);

// Supercode descriptor plus {k, r, rho, repair_sets, generator}.
json to_json(const lrc::LrcCode& code);
lrc::LrcCode lrc_from_json(const json& j);

json to_json(const pmds::PmdsCode& code);
// Re-runs the exhaustive verification when it fits the default budget.
pmds::PmdsCode pmds_from_json(const json& j);

json to_json(const interleaved::BurstError& e);
interleaved::BurstError burst_from_json(const json& j);

json to_json(const radii::CodeShape& s);
// Probabilities and big integers carried as strings, radii as numbers.
json to_json(const radii::RadiusReport& r);

json matrix_to_json(const gf::Matrix& m);
gf::Matrix matrix_from_json(const json& j);

}  // namespace lrcdec::io
