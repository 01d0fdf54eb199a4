#pragma once

// Test-only brute-force oracles. Deliberately independent of the library's
// enumeration path: slices are rebuilt entry-by-entry per covector and the
// sigma-hat oracle walks every covector pair.

#include <cstdint>
#include <map>
#include <vector>

#include "grank/numeric.hpp"
#include "grank/strata.hpp"
#include "grank/tensor.hpp"

namespace grank_test {

using grank::Axis;
using grank::Int;
using grank::Tensor3;

inline int64_t mod_coeff(const grank::Rat& c, uint32_t p) {
  Int v = grank::rat_num(c) % Int(p);
  if (v < 0) v += p;
  return v.convert_to<int64_t>();
}

inline std::size_t naive_rank_mod_p(std::vector<int64_t> m, std::size_t rows, std::size_t cols,
                                    uint32_t p) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv * cols + c] % p == 0) ++piv;
    if (piv == rows) continue;
    std::swap_ranges(m.begin() + piv * cols, m.begin() + (piv + 1) * cols, m.begin() + r * cols);
    // scale-free elimination: row_i <- row_i * pivot - row_r * lead (mod p)
    for (std::size_t i = r + 1; i < rows; ++i) {
      const int64_t lead = m[i * cols + c] % p;
      if (!lead) continue;
      const int64_t pivv = m[r * cols + c] % p;
      for (std::size_t j = 0; j < cols; ++j)
        m[i * cols + j] = ((m[i * cols + j] * pivv - m[r * cols + j] * lead) % p + p) % p;
    }
    ++r;
  }
  return r;
}

// Rank histogram over all covectors of F_p^d, slices rebuilt per point.
inline std::map<std::size_t, uint64_t> oracle_profile(const Tensor3& t, Axis axis, uint32_t p) {
  const auto& d = t.dims();
  const int ax = static_cast<int>(axis);
  std::size_t rows, cols;
  if (axis == Axis::A) { rows = d[1]; cols = d[2]; }
  else if (axis == Axis::B) { rows = d[0]; cols = d[2]; }
  else { rows = d[0]; cols = d[1]; }
  const std::size_t dim = d[ax];
  uint64_t total = 1;
  for (std::size_t q = 0; q < dim; ++q) total *= p;
  std::map<std::size_t, uint64_t> hist;
  std::vector<uint32_t> cov(dim, 0);
  for (uint64_t idx = 0; idx < total; ++idx) {
    uint64_t v = idx;
    for (std::size_t q = 0; q < dim; ++q) {
      cov[q] = static_cast<uint32_t>(v % p);
      v /= p;
    }
    std::vector<int64_t> m(rows * cols, 0);
    for (const auto& e : t.entries()) {
      int ci, ri, cj;
      if (axis == Axis::A) { ci = e.i; ri = e.j; cj = e.k; }
      else if (axis == Axis::B) { ci = e.j; ri = e.i; cj = e.k; }
      else { ci = e.k; ri = e.i; cj = e.j; }
      m[ri * cols + cj] = (m[ri * cols + cj] + cov[ci] * mod_coeff(e.coeff, p)) % p;
    }
    ++hist[naive_rank_mod_p(std::move(m), rows, cols, p)];
  }
  return hist;
}

// |sigma-hat| by walking every (alpha, beta) pair and testing the
// contraction T(alpha, beta, .) = 0 directly on the entry list.
inline Int oracle_sigma_hat_pairs(const Tensor3& t, grank::Pairing pairing, uint32_t p) {
  const auto& d = t.dims();
  int dx, dy;
  switch (pairing) {
    case grank::Pairing::AB: dx = d[0]; dy = d[1]; break;
    case grank::Pairing::AC: dx = d[0]; dy = d[2]; break;
    default: dx = d[1]; dy = d[2];
  }
  uint64_t tx = 1, ty = 1;
  for (int q = 0; q < dx; ++q) tx *= p;
  for (int q = 0; q < dy; ++q) ty *= p;
  const int rem = pairing == grank::Pairing::AB ? d[2] : (pairing == grank::Pairing::AC ? d[1] : d[0]);
  std::vector<uint32_t> a(dx), b(dy);
  Int count = 0;
  std::vector<int64_t> resid(rem);
  for (uint64_t ia = 0; ia < tx; ++ia) {
    uint64_t v = ia;
    for (int q = 0; q < dx; ++q) { a[q] = static_cast<uint32_t>(v % p); v /= p; }
    for (uint64_t ib = 0; ib < ty; ++ib) {
      v = ib;
      for (int q = 0; q < dy; ++q) { b[q] = static_cast<uint32_t>(v % p); v /= p; }
      std::fill(resid.begin(), resid.end(), 0);
      for (const auto& e : t.entries()) {
        int xi, yi, zi;
        if (pairing == grank::Pairing::AB) { xi = e.i; yi = e.j; zi = e.k; }
        else if (pairing == grank::Pairing::AC) { xi = e.i; yi = e.k; zi = e.j; }
        else { xi = e.j; yi = e.k; zi = e.i; }
        resid[zi] = (resid[zi] + static_cast<int64_t>(a[xi]) * b[yi] % p * mod_coeff(e.coeff, p)) % p;
      }
      bool zero = true;
      for (auto r : resid)
        if (r % p != 0) { zero = false; break; }
      if (zero) ++count;
    }
  }
  return count;
}

// every slice over F_p has rank <= r
inline bool oracle_bounded_rank(const Tensor3& t, Axis axis, uint32_t p, std::size_t r) {
  for (const auto& [rank, c] : oracle_profile(t, axis, p))
    if (rank > r && c > 0) return false;
  return true;
}

}  // namespace grank_test
