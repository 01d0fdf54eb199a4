#pragma once

#include <cstdint>
#include <vector>

#include "grank/errors.hpp"

namespace grank {

// Arithmetic mod a prime p < 2^31. Elements are uint32_t in [0, p).
class PrimeField {
 public:
  explicit PrimeField(uint32_t p);

  uint32_t p() const { return p_; }

  uint32_t add(uint32_t a, uint32_t b) const {
    uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  uint32_t sub(uint32_t a, uint32_t b) const { return a >= b ? a - b : a + p_ - b; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p_);
  }
  uint32_t neg(uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  uint32_t inv(uint32_t a) const;
  uint32_t pow(uint32_t a, uint64_t e) const;

  // Reduce a signed 64-bit value into [0, p).
  uint32_t reduce(int64_t v) const {
    int64_t r = v % static_cast<int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<uint32_t>(r);
  }

  static bool is_prime(uint32_t n);

 private:
  uint32_t p_;
};

// Dense row-major matrix over F_p.
class FpMatrix {
 public:
  FpMatrix(const PrimeField& field, std::size_t rows, std::size_t cols)
      : field_(&field), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return *field_; }

  uint32_t& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  uint32_t at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
  uint32_t* data() { return a_.data(); }
  const uint32_t* data() const { return a_.data(); }

  FpMatrix transposed() const;
  std::size_t rank() const;              // destructive internally; const interface
  std::size_t left_kernel_dim() const { return rows_ - rank(); }

 private:
  const PrimeField* field_;
  std::size_t rows_, cols_;
  std::vector<uint32_t> a_;
};

// Row-echelon rank of a raw buffer (rows x cols, row-major, entries in [0,p)).
// Clobbers the buffer. The hot path of the strata enumeration.
std::size_t fp_rank_inplace(uint32_t* a, std::size_t rows, std::size_t cols, const PrimeField& f);

}  // namespace grank
