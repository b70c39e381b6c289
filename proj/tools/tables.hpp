#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lrcdec/pmds.hpp"
#include "lrcdec/radii.hpp"

namespace lrcdec::tools {

using nlohmann::json;

// A shape given on the command line; error holds the reason it was rejected.
struct ShapeArg {
  std::string text;
  std::optional<radii::CodeShape> shape;
  std::string error;
};
// "n,k,r,rho" or "n,k,r,rho,q" with q = 0 for an unbounded alphabet.
ShapeArg parse_shape(const std::string& text);

struct Emitted {
  std::string csv;
  json data;
  std::vector<std::string> warnings;
};

Emitted radii_rows(const std::vector<ShapeArg>& shapes, std::int64_t ell);

// Decoding radii of the six reference shapes (alphabet-free).
Emitted radius_table();
// Success-probability lower bounds of the fifteen reference rows.
Emitted success_table();
// Exact PMDS failure probabilities of the three reference parameter sets.
Emitted pmds_table();

struct PmdsProbRequest {
  pmds::PmdsShape shape;
  std::int64_t t_lo = 0, t_hi = 0;
  bool exact = true;
  bool bound = false;
  // Rank factor for the MK success probability; both zero to skip it.
  std::int64_t ell = 0;
  std::int64_t q = 0;
};
Emitted pmds_prob(const PmdsProbRequest& req);

// Normalized radius tau/n against d/n for each beta; the endpoint
// beta d/n = theta of every curve is part of the grid.
Emitted curves(const std::vector<double>& betas, double theta, std::size_t steps);

}  // namespace lrcdec::tools
