#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lrcdec/listdec.hpp"
#include "lrcdec/pmds.hpp"

namespace lrcdec::tools {

using nlohmann::json;

struct SimOptions {
  std::vector<std::int64_t> weights;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  unsigned threads = 1;
  // One JSON line per trial, including wall time; empty to skip.
  std::string records_path;
};

// Seeded trials of the LRC list decoder (unique = false) or the
// probabilistic unique decoder (unique = true).
json simulate_lrc(const lrc::LrcCode& code, const listdec::DecodeConfig& cfg, bool unique, const SimOptions& opt);

// Code decoded by the MK simulation: the PMDS shape, when known, adds the
// predicted success probability to each row.
struct MkCode {
  gf::Field field;
  gf::Matrix generator;
  gf::Matrix parity_check;
  std::optional<pmds::PmdsShape> shape;
};

// Seeded trials of the Metzner-Kapturowski decoder on ell-interleaved words
// hit by full-rank bursts of each weight.
json simulate_mk(const MkCode& code, std::int64_t ell, const SimOptions& opt);

}  // namespace lrcdec::tools
