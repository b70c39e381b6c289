#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lrcdec/exact.hpp"
#include "lrcdec/field.hpp"
#include "lrcdec/matrix.hpp"

namespace lrcdec::interleaved {

using gf::Elem;
using gf::Matrix;
using Partition = std::vector<std::vector<std::size_t>>;

// Burst error: the columns in support carry the nonzero columns of values.
struct BurstError {
  std::vector<std::size_t> support;  // increasing
  Matrix values;                     // ell x |support|
};

// ell x n matrix with the burst added column-wise.
Matrix apply_burst(const gf::Field& F, const Matrix& word, const BurstError& e);

struct MkResult {
  Matrix codeword;                   // ell x n
  std::vector<std::size_t> support;  // declared error positions
};

// Generalized Metzner-Kapturowski decoder for an ell x n received matrix R
// whose rows are codewords of the code with parity-check matrix H plus a
// burst. Empty result when the decoder cannot vouch for a unique answer.
std::optional<MkResult> mk_decode(const gf::Field& F, const Matrix& H, const Matrix& R);

// rank(H_{E + i}) = |E| + 1 for every i outside E.
bool is_t1_independent_rank(const gf::Field& F, const Matrix& H, const std::vector<std::size_t>& E);

// Excess criterion on a repair-set partition: with T_i = |complement(E) in R_i|
// and O_i = max(0, T_i - r), sum O_i <= n - k - t - 1 if some 0 < T_j <= r,
// else sum O_i <= n - k - t.
bool excess_criterion(const Partition& partition, std::size_t n, std::size_t k, std::size_t r,
                      const std::vector<std::size_t>& E);

// The complement of E contains k + 1 positions with at most r per repair set.
bool sk1_sufficient(const Partition& partition, std::size_t k, std::size_t r, const std::vector<std::size_t>& E);

// Column j of the ell x n matrix maps to sum_i R(i, j) q^i, a symbol of an
// alphabet of size q^ell.
std::vector<BigInt> to_extension_field(const gf::Field& F, const Matrix& word);
Matrix from_extension_field(const gf::Field& F, const std::vector<BigInt>& symbols, std::size_t ell);

// Field parameters of GF(p^{m ell}) when it fits the supported field sizes.
std::optional<gf::FieldSpec> extension_field_spec(const gf::Field& F, std::size_t ell);

}  // namespace lrcdec::interleaved
