#include "grank/prime_field.hpp"

#include <cstring>

namespace grank {

PrimeField::PrimeField(uint32_t p) : p_(p) {
  if (p >= (1u << 31)) fail(ErrorCode::BadParams, "prime modulus must be < 2^31");
  if (!is_prime(p)) fail(ErrorCode::BadParams, "modulus " + std::to_string(p) + " is not prime");
}

bool PrimeField::is_prime(uint32_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

uint32_t PrimeField::pow(uint32_t a, uint64_t e) const {
  uint64_t base = a % p_, r = 1;
  while (e) {
    if (e & 1) r = r * base % p_;
    base = base * base % p_;
    e >>= 1;
  }
  return static_cast<uint32_t>(r);
}

uint32_t PrimeField::inv(uint32_t a) const {
  if (a == 0) fail(ErrorCode::SingularMatrix, "inverse of zero in F_p");
  return pow(a, p_ - 2);
}

FpMatrix FpMatrix::transposed() const {
  FpMatrix t(*field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

std::size_t FpMatrix::rank() const {
  std::vector<uint32_t> scratch(a_);
  return fp_rank_inplace(scratch.data(), rows_, cols_, *field_);
}

std::size_t fp_rank_inplace(uint32_t* a, std::size_t rows, std::size_t cols,
                            const PrimeField& f) {
  const uint64_t p = f.p();
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + col] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = col; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
    const uint64_t inv = f.inv(a[r * cols + col]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const uint64_t v = a[i * cols + col];
      if (!v) continue;
      const uint64_t m = p - (v * inv) % p;  // multiplier so row_i += m * row_r kills the column
      for (std::size_t j = col; j < cols; ++j) {
        a[i * cols + j] =
            static_cast<uint32_t>((a[i * cols + j] + m * a[r * cols + j]) % p);
      }
    }
    ++r;
  }
  return r;
}

}  // namespace grank
