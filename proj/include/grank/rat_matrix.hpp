#pragma once

#include <optional>
#include <vector>

#include "grank/numeric.hpp"

namespace grank {

// Dense matrix over Q. Small sizes only; all arithmetic exact.
class RatMatrix {
 public:
  RatMatrix() : rows_(0), cols_(0) {}
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static RatMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rat& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RatMatrix transposed() const;
  RatMatrix operator*(const RatMatrix& o) const;
  bool operator==(const RatMatrix& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

  bool is_zero() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rat> a_;
};

// In-place reduced row echelon form; returns pivot column indices.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t rat_rank(const RatMatrix& m);
std::size_t rat_left_kernel_dim(const RatMatrix& m);

// Inverse of a square matrix; throws SingularMatrix.
RatMatrix rat_inverse(const RatMatrix& m);

// Basis of the right kernel, one vector per column of the result.
std::vector<std::vector<Rat>> rat_nullspace(const RatMatrix& m);

// One solution x of m x = b, or nullopt when inconsistent.
std::optional<std::vector<Rat>> rat_solve(const RatMatrix& m, const std::vector<Rat>& b);

// Fraction-free (Bareiss) rank of an integer matrix, row-major.
std::size_t int_rank(const std::vector<Int>& a, std::size_t rows, std::size_t cols);

// --- span helpers over Q (vectors as std::vector<Rat>) ---
using RatVec = std::vector<Rat>;

std::vector<RatVec> span_basis(const std::vector<RatVec>& vecs);
bool in_span(const RatVec& v, const std::vector<RatVec>& basis);
std::vector<RatVec> intersect_spans(const std::vector<RatVec>& u, const std::vector<RatVec>& v);
// Completes the (independent) vectors to a basis of Q^n; result columns form the basis.
RatMatrix complete_basis(const std::vector<RatVec>& vecs, std::size_t n);

}  // namespace grank
