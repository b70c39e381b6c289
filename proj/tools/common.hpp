#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "lrcdec/errors.hpp"
#include "lrcdec/field.hpp"

namespace lrcdec::tools {

// Floats in CSV and tables: 6 significant digits, '.' decimal point.
inline std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

// GF(q) parameters for a prime power q.
inline gf::FieldSpec field_spec_of_order(std::uint64_t q) {
  if (q < 2 || q > gf::kMaxOrder) throw ConfigError("field order " + std::to_string(q) + " is out of range");
  const auto factors = gf::prime_factors(q);
  if (factors.size() != 1) throw ConfigError("field order " + std::to_string(q) + " is not a prime power");
  std::uint32_t m = 0;
  for (std::uint64_t v = q; v > 1; v /= factors[0]) ++m;
  return {static_cast<std::uint32_t>(factors[0]), m, 0};
}

// Runs body(i) for i in [0, count) on up to `threads` workers. Results must be
// written to per-index slots so the outcome does not depend on scheduling.
template <typename Body>
void parallel_for(std::uint64_t count, unsigned threads, Body&& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads <= 1 || count <= 1) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  std::vector<std::thread> pool;
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&] {
      try {
        for (std::uint64_t i = next++; i < count && !failed; i = next++) body(i);
      } catch (...) {
        if (!failed.exchange(true)) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace lrcdec::tools
