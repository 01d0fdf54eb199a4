#include "grank/genericity.hpp"

#include <algorithm>
#include <functional>

#include "grank/errors.hpp"

namespace grank {

namespace {

constexpr uint32_t kBigPrime = 2147483647u;  // 2^31 - 1

uint64_t splitmix64(uint64_t& s) {
  uint64_t z = (s += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Dense int64 basis slices along an axis; requires integral tensor after
// clearing a global denominator (rank is invariant under global scaling).
struct Int64Slices {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<int64_t>> s;
};

Int64Slices int64_basis_slices(const Tensor3& t, Axis axis) {
  Int lcm = 1;
  for (const auto& e : t.entries()) lcm = boost::multiprecision::lcm(lcm, rat_den(e.coeff));
  Int64Slices out;
  const auto& d = t.dims();
  const int ax = static_cast<int>(axis);
  if (axis == Axis::A) { out.rows = d[1]; out.cols = d[2]; }
  else if (axis == Axis::B) { out.rows = d[0]; out.cols = d[2]; }
  else { out.rows = d[0]; out.cols = d[1]; }
  out.s.assign(d[ax], std::vector<int64_t>(out.rows * out.cols, 0));
  for (const auto& e : t.entries()) {
    int ci, ri, cj;
    if (axis == Axis::A) { ci = e.i; ri = e.j; cj = e.k; }
    else if (axis == Axis::B) { ci = e.j; ri = e.i; cj = e.k; }
    else { ci = e.k; ri = e.i; cj = e.j; }
    const Int v = rat_num(e.coeff * lcm);
    if (!fits_int64(v)) fail(ErrorCode::BadParams, "tensor coefficient too large for grid scan");
    out.s[ci][ri * out.cols + cj] += v.convert_to<int64_t>();
  }
  return out;
}

// Enumerate the grid {0..side-1}^d, maintaining the slice sum incrementally.
// fn(point, matrix) returning false stops the scan. Returns false when stopped.
bool scan_grid(const Int64Slices& sl, std::size_t d, long side,
               const std::function<bool(const std::vector<long>&, const std::vector<int64_t>&)>& fn) {
  std::vector<long> digits(d, 0);
  std::vector<int64_t> m(sl.rows * sl.cols, 0);
  const std::size_t n = m.size();
  for (;;) {
    if (!fn(digits, m)) return false;
    std::size_t q = 0;
    for (; q < d; ++q) {
      ++digits[q];
      for (std::size_t t = 0; t < n; ++t) m[t] += sl.s[q][t];
      if (digits[q] < side) break;
      digits[q] = 0;
      for (std::size_t t = 0; t < n; ++t) m[t] -= side * sl.s[q][t];
    }
    if (q == d) return true;
  }
}

std::size_t rank_of_int64(const std::vector<int64_t>& m, std::size_t rows, std::size_t cols) {
  std::vector<Int> a(m.begin(), m.end());
  return int_rank(a, rows, cols);
}

// Random sampling over F_kBigPrime; returns max rank seen.
std::size_t sampled_max_rank(const Tensor3& t, Axis axis, int trials, uint64_t seed) {
  PrimeField f(kBigPrime);
  auto fsl = basis_slices_mod_p(t, axis, f);
  const std::size_t d = fsl.slices.size();
  std::vector<uint32_t> m(fsl.rows * fsl.cols);
  std::size_t best = 0;
  uint64_t state = seed;
  for (int trial = 0; trial < trials; ++trial) {
    std::fill(m.begin(), m.end(), 0);
    for (std::size_t q = 0; q < d; ++q) {
      const uint32_t x = static_cast<uint32_t>(splitmix64(state) % kBigPrime);
      if (!x) continue;
      for (std::size_t u = 0; u < m.size(); ++u)
        m[u] = f.add(m[u], f.mul(x, fsl.slices[q][u]));
    }
    best = std::max(best, fp_rank_inplace(m.data(), fsl.rows, fsl.cols, f));
  }
  return best;
}

uint64_t grid_size(std::size_t d, long side, uint64_t cap) {
  uint64_t n = 1;
  for (std::size_t q = 0; q < d; ++q) {
    if (n > cap / static_cast<uint64_t>(side)) return cap + 1;
    n *= static_cast<uint64_t>(side);
  }
  return n;
}

}  // namespace

MlRanks multilinear_ranks(const Tensor3& t) {
  auto fr = flattening_ranks(t);
  return {fr[0], fr[1], fr[2]};
}

bool is_concise(const Tensor3& t) {
  auto ml = multilinear_ranks(t);
  const auto& d = t.dims();
  return ml.ml_a == static_cast<std::size_t>(d[0]) && ml.ml_b == static_cast<std::size_t>(d[1]) &&
         ml.ml_c == static_cast<std::size_t>(d[2]);
}

GenericRankResult generic_slice_rank(const Tensor3& t, Axis axis, const GridOptions& opt) {
  auto sl = int64_basis_slices(t, axis);
  const std::size_t d = t.dim(axis);
  const std::size_t maxrank = std::min(sl.rows, sl.cols);
  const long side = static_cast<long>(maxrank) + 1;  // r-minors have per-var degree <= r
  GenericRankResult res;
  if (grid_size(d, side, opt.budget) <= opt.budget) {
    scan_grid(sl, d, side, [&](const std::vector<long>& pt, const std::vector<int64_t>& m) {
      const std::size_t r = rank_of_int64(m, sl.rows, sl.cols);
      if (r > res.value) {
        res.value = r;
        res.witness.assign(pt.begin(), pt.end());
      }
      return res.value < maxrank;
    });
    return res;
  }
  if (!opt.allow_probabilistic)
    fail(ErrorCode::BudgetExceeded, "grid too large and probabilistic fallback disabled");
  res.value = sampled_max_rank(t, axis, opt.trials, opt.seed);
  res.probabilistic = true;
  return res;
}

OneGenericResult is_one_generic(const Tensor3& t, Axis axis, const GridOptions& opt) {
  const auto& d = t.dims();
  OneGenericResult out;
  if (d[0] != d[1] || d[1] != d[2]) {
    out.verdict = OneGenericResult::Verdict::NotApplicable;
    return out;
  }
  auto g = generic_slice_rank(t, axis, opt);
  out.probabilistic = g.probabilistic;
  out.witness = g.witness;
  out.verdict = g.value == static_cast<std::size_t>(d[0]) ? OneGenericResult::Verdict::Yes
                                                          : OneGenericResult::Verdict::No;
  return out;
}

GenericityFlags genericity_flags(const Tensor3& t, const GridOptions& opt) {
  GenericityFlags fl;
  fl.concise = is_concise(t);
  const auto& d = t.dims();
  if (d[0] != d[1] || d[1] != d[2]) {
    fl.applicable = false;
    return fl;
  }
  auto ra = is_one_generic(t, Axis::A, opt);
  auto rb = is_one_generic(t, Axis::B, opt);
  auto rc = is_one_generic(t, Axis::C, opt);
  fl.one_a = ra.verdict == OneGenericResult::Verdict::Yes;
  fl.one_b = rb.verdict == OneGenericResult::Verdict::Yes;
  fl.one_c = rc.verdict == OneGenericResult::Verdict::Yes;
  fl.one_star = fl.one_a || fl.one_b || fl.one_c;
  fl.one_generic = fl.one_a && fl.one_b && fl.one_c;
  fl.probabilistic = ra.probabilistic || rb.probabilistic || rc.probabilistic;
  return fl;
}

BoundedRankResult bounded_rank_test(const Tensor3& t, Axis axis, std::size_t r,
                                    const GridOptions& opt) {
  auto sl = int64_basis_slices(t, axis);
  const std::size_t d = t.dim(axis);
  BoundedRankResult res;
  if (r >= std::min(sl.rows, sl.cols)) {  // trivially bounded by the matrix size
    res.bounded = true;
    return res;
  }
  const long side = static_cast<long>(r) + 2;  // (r+1)-minors, per-var degree <= r+1
  if (grid_size(d, side, opt.budget) <= opt.budget) {
    res.bounded = scan_grid(
        sl, d, side, [&](const std::vector<long>& pt, const std::vector<int64_t>& m) {
          if (rank_of_int64(m, sl.rows, sl.cols) > r) {
            res.witness = std::vector<long>(pt.begin(), pt.end());
            return false;
          }
          return true;
        });
    return res;
  }
  if (!opt.allow_probabilistic)
    fail(ErrorCode::BudgetExceeded, "grid too large and probabilistic fallback disabled");
  const std::size_t seen = sampled_max_rank(t, axis, opt.trials, opt.seed);
  if (seen > r) {
    res.bounded = false;  // a mod-p violation is exact
    return res;
  }
  res.bounded = true;
  res.probabilistic = true;
  return res;
}

}  // namespace grank
