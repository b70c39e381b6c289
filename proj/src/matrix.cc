#include "lrcdec/matrix.hpp"

#include "lrcdec/errors.hpp"

namespace lrcdec::gf {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Elem>>& rows) {
  if (rows.empty()) return {};
  Matrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw ConfigError("ragged matrix rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

std::vector<Elem> Matrix::row(std::size_t i) const {
  return {a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
          a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_)};
}

std::vector<Elem> Matrix::col(std::size_t j) const {
  std::vector<Elem> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<std::vector<Elem>> Matrix::to_rows() const {
  std::vector<std::vector<Elem>> out;
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

bool Matrix::is_zero() const {
  for (Elem v : a_) {
    if (v != 0) return false;
  }
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  }
  return t;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  Matrix m(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
  }
  return m;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix m(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(idx[i], j);
  }
  return m;
}

Matrix multiply(const Field& F, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw ConfigError("matrix dimension mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t l = 0; l < a.cols(); ++l) {
      const Elem v = a(i, l);
      if (v == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = F.add(c(i, j), F.mul(v, b(l, j)));
    }
  }
  return c;
}

std::vector<Elem> multiply(const Field& F, const Matrix& a, const std::vector<Elem>& x) {
  if (a.cols() != x.size()) throw ConfigError("matrix-vector dimension mismatch");
  std::vector<Elem> y(a.rows(), 0);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Elem acc = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) acc = F.add(acc, F.mul(a(i, j), x[j]));
    y[i] = acc;
  }
  return y;
}

Rref rref(const Field& F, const Matrix& a, bool with_transform) {
  Rref out;
  Matrix m = a;
  Matrix p = with_transform ? Matrix::identity(a.rows()) : Matrix();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  auto row_op = [&](Matrix& x, std::size_t dst, std::size_t src, Elem factor) {
    for (std::size_t j = 0; j < x.cols(); ++j) x(dst, j) = F.sub(x(dst, j), F.mul(factor, x(src, j)));
  };
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
      if (with_transform) {
        for (std::size_t j = 0; j < p.cols(); ++j) std::swap(p(piv, j), p(r, j));
      }
    }
    const Elem s = F.inv(m(r, c));
    for (std::size_t j = 0; j < cols; ++j) m(r, j) = F.mul(m(r, j), s);
    if (with_transform) {
      for (std::size_t j = 0; j < p.cols(); ++j) p(r, j) = F.mul(p(r, j), s);
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Elem f = m(i, c);
      row_op(m, i, r, f);
      if (with_transform) row_op(p, i, r, f);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  out.transform = std::move(p);
  return out;
}

std::size_t rank(const Field& F, const Matrix& a) { return rref(F, a).rank(); }

std::optional<Solution> solve(const Field& F, const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ConfigError("solve: row count mismatch");
  const std::size_t n = a.cols(), nb = b.cols();
  Matrix aug(a.rows(), n + nb);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    for (std::size_t j = 0; j < nb; ++j) aug(i, n + j) = b(i, j);
  }
  const Rref r = rref(F, aug);
  Solution sol;
  sol.x = Matrix(n, nb);
  std::size_t rank_a = 0;
  for (std::size_t i = 0; i < r.pivots.size(); ++i) {
    if (r.pivots[i] >= n) return std::nullopt;  // pivot in the right-hand side
    ++rank_a;
    for (std::size_t j = 0; j < nb; ++j) sol.x(r.pivots[i], j) = r.reduced(i, n + j);
  }
  sol.unique = rank_a == n;
  return sol;
}

Matrix nullspace(const Field& F, const Matrix& a) {
  const Rref r = rref(F, a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : r.pivots) is_pivot[c] = true;
  Matrix basis(n - r.rank(), n);
  std::size_t row = 0;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    basis(row, f) = 1;
    for (std::size_t i = 0; i < r.pivots.size(); ++i) basis(row, r.pivots[i]) = F.neg(r.reduced(i, f));
    ++row;
  }
  return basis;
}

}  // namespace lrcdec::gf
