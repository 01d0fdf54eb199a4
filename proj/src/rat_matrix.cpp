#include "grank/rat_matrix.hpp"

#include <algorithm>

#include "grank/errors.hpp"

namespace grank {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::transposed() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) fail(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
  RatMatrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rat& v = at(i, k);
      if (v == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

bool RatMatrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rat& v) { return v == 0; });
}

std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m.at(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    const Rat inv = Rat(1) / m.at(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const Rat f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rat_rank(const RatMatrix& m) {
  RatMatrix c = m;
  return rref(c).size();
}

std::size_t rat_left_kernel_dim(const RatMatrix& m) { return m.rows() - rat_rank(m); }

RatMatrix rat_inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) fail(ErrorCode::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (piv.size() != n || piv.back() != n - 1)
    fail(ErrorCode::SingularMatrix, "matrix is singular");
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

std::vector<std::vector<Rat>> rat_nullspace(const RatMatrix& m) {
  RatMatrix r = m;
  auto piv = rref(r);
  std::vector<bool> is_piv(m.cols(), false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_piv[f]) continue;
    std::vector<Rat> v(m.cols());
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r.at(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Rat>> rat_solve(const RatMatrix& m, const std::vector<Rat>& b) {
  if (b.size() != m.rows()) fail(ErrorCode::DimensionMismatch, "rhs size mismatch");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols()) = b[i];
  }
  auto piv = rref(aug);
  if (!piv.empty() && piv.back() == m.cols()) return std::nullopt;  // 0 = 1 row
  std::vector<Rat> x(m.cols());
  for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug.at(i, m.cols());
  return x;
}

std::size_t int_rank(const std::vector<Int>& a0, std::size_t rows, std::size_t cols) {
  std::vector<Int> a(a0);
  auto at = [&](std::size_t i, std::size_t j) -> Int& { return a[i * cols + j]; };
  Int prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && at(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        at(i, j) = (at(i, j) * at(r, c) - at(i, c) * at(r, j)) / prev;
      at(i, c) = 0;
    }
    prev = at(r, c);
    ++r;
  }
  return r;
}

std::vector<RatVec> span_basis(const std::vector<RatVec>& vecs) {
  std::vector<RatVec> basis;
  if (vecs.empty()) return basis;
  const std::size_t n = vecs.front().size();
  RatMatrix m(0, 0);
  std::vector<RatVec> kept;
  for (const auto& v : vecs) {
    std::vector<RatVec> trial = kept;
    trial.push_back(v);
    RatMatrix t(trial.size(), n);
    for (std::size_t i = 0; i < trial.size(); ++i)
      for (std::size_t j = 0; j < n; ++j) t.at(i, j) = trial[i][j];
    if (rat_rank(t) == trial.size()) kept.push_back(v);
  }
  return kept;
}

bool in_span(const RatVec& v, const std::vector<RatVec>& basis) {
  if (basis.empty()) return std::all_of(v.begin(), v.end(), [](const Rat& x) { return x == 0; });
  const std::size_t n = v.size();
  RatMatrix m(basis.size() + 1, n);
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = basis[i][j];
  for (std::size_t j = 0; j < n; ++j) m.at(basis.size(), j) = v[j];
  return rat_rank(m) == basis.size();
}

std::vector<RatVec> intersect_spans(const std::vector<RatVec>& u, const std::vector<RatVec>& v) {
  if (u.empty() || v.empty()) return {};
  const std::size_t n = u.front().size();
  RatMatrix m(n, u.size() + v.size());
  for (std::size_t j = 0; j < u.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = u[j][i];
  for (std::size_t j = 0; j < v.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) m.at(i, u.size() + j) = -v[j][i];
  std::vector<RatVec> out;
  for (const auto& ns : rat_nullspace(m)) {
    RatVec w(n);
    bool nonzero = false;
    for (std::size_t j = 0; j < u.size(); ++j)
      for (std::size_t i = 0; i < n; ++i) {
        w[i] += ns[j] * u[j][i];
      }
    for (const auto& x : w)
      if (x != 0) nonzero = true;
    if (nonzero) out.push_back(std::move(w));
  }
  return span_basis(out);
}

RatMatrix complete_basis(const std::vector<RatVec>& vecs, std::size_t n) {
  std::vector<RatVec> cols = vecs;
  for (std::size_t i = 0; i < n && cols.size() < n; ++i) {
    RatVec e(n);
    e[i] = 1;
    if (!in_span(e, cols)) cols.push_back(e);
  }
  if (cols.size() != n) fail(ErrorCode::BadParams, "cannot complete to a basis");
  RatMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m.at(i, j) = cols[j][i];
  return m;
}

}  // namespace grank
