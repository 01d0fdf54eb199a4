#include "grank/tensor.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "grank/errors.hpp"

namespace grank {

Axis axis_from_name(const std::string& s) {
  if (s == "A" || s == "a") return Axis::A;
  if (s == "B" || s == "b") return Axis::B;
  if (s == "C" || s == "c") return Axis::C;
  fail(ErrorCode::BadParams, "unknown axis '" + s + "'");
}

Tensor3::Tensor3(std::array<int, 3> dims, std::vector<TensorEntry> entries)
    : dims_(dims), entries_(std::move(entries)) {
  if (dims_[0] < 1 || dims_[1] < 1 || dims_[2] < 1)
    fail(ErrorCode::BadParams, "tensor dimensions must be positive");
  for (const auto& e : entries_) {
    if (e.i < 0 || e.i >= dims_[0] || e.j < 0 || e.j >= dims_[1] || e.k < 0 || e.k >= dims_[2])
      fail(ErrorCode::IndexOutOfRange,
           "entry (" + std::to_string(e.i) + "," + std::to_string(e.j) + "," +
               std::to_string(e.k) + ") out of range");
  }
  std::sort(entries_.begin(), entries_.end(), [](const TensorEntry& x, const TensorEntry& y) {
    return std::tie(x.i, x.j, x.k) < std::tie(y.i, y.j, y.k);
  });
  for (std::size_t q = 1; q < entries_.size(); ++q) {
    const auto& a = entries_[q - 1];
    const auto& b = entries_[q];
    if (a.i == b.i && a.j == b.j && a.k == b.k)
      fail(ErrorCode::DuplicateEntry, "duplicate entry (" + std::to_string(a.i) + "," +
                                          std::to_string(a.j) + "," + std::to_string(a.k) + ")");
  }
  std::erase_if(entries_, [](const TensorEntry& e) { return e.coeff == 0; });
}

bool Tensor3::integral() const {
  return std::all_of(entries_.begin(), entries_.end(),
                     [](const TensorEntry& e) { return is_integer(e.coeff); });
}

Tensor3 build_tensor(std::array<int, 3> dims, std::vector<TensorEntry> entries) {
  return Tensor3(dims, std::move(entries));
}

RatMatrix slice(const Tensor3& t, Axis axis, const std::vector<Rat>& covector) {
  const auto& d = t.dims();
  const int ax = static_cast<int>(axis);
  if (static_cast<int>(covector.size()) != d[ax])
    fail(ErrorCode::DimensionMismatch, "covector length does not match axis dimension");
  std::size_t rows, cols;
  if (axis == Axis::A) {
    rows = d[1]; cols = d[2];
  } else if (axis == Axis::B) {
    rows = d[0]; cols = d[2];
  } else {
    rows = d[0]; cols = d[1];
  }
  RatMatrix m(rows, cols);
  for (const auto& e : t.entries()) {
    int ci, ri, cj;
    if (axis == Axis::A) { ci = e.i; ri = e.j; cj = e.k; }
    else if (axis == Axis::B) { ci = e.j; ri = e.i; cj = e.k; }
    else { ci = e.k; ri = e.i; cj = e.j; }
    if (covector[ci] != 0) m.at(ri, cj) += covector[ci] * e.coeff;
  }
  return m;
}

std::vector<RatMatrix> basis_slices(const Tensor3& t, Axis axis) {
  const int d = t.dim(axis);
  std::vector<RatMatrix> out;
  out.reserve(d);
  for (int q = 0; q < d; ++q) {
    std::vector<Rat> cov(d);
    cov[q] = 1;
    out.push_back(slice(t, axis, cov));
  }
  return out;
}

FpSliceBasis basis_slices_mod_p(const Tensor3& t, Axis axis, const PrimeField& f) {
  const auto& d = t.dims();
  FpSliceBasis out;
  int ax = static_cast<int>(axis);
  if (axis == Axis::A) { out.rows = d[1]; out.cols = d[2]; }
  else if (axis == Axis::B) { out.rows = d[0]; out.cols = d[2]; }
  else { out.rows = d[0]; out.cols = d[1]; }
  out.slices.assign(d[ax], std::vector<uint32_t>(out.rows * out.cols, 0));
  const Int p(f.p());
  for (const auto& e : t.entries()) {
    if (!is_integer(e.coeff))
      fail(ErrorCode::BadParams, "mod-p reduction of a non-integral tensor");
    int ci, ri, cj;
    if (axis == Axis::A) { ci = e.i; ri = e.j; cj = e.k; }
    else if (axis == Axis::B) { ci = e.j; ri = e.i; cj = e.k; }
    else { ci = e.k; ri = e.i; cj = e.j; }
    Int v = rat_num(e.coeff) % p;
    if (v < 0) v += p;
    out.slices[ci][ri * out.cols + cj] =
        f.add(out.slices[ci][ri * out.cols + cj], v.convert_to<uint32_t>());
  }
  return out;
}

Tensor3 kronecker(const Tensor3& t, const Tensor3& s) {
  const auto& d = t.dims();
  const auto& e = s.dims();
  std::vector<TensorEntry> ent;
  ent.reserve(t.entry_count() * s.entry_count());
  for (const auto& x : t.entries())
    for (const auto& y : s.entries())
      ent.push_back({x.i * e[0] + y.i, x.j * e[1] + y.j, x.k * e[2] + y.k, x.coeff * y.coeff});
  return Tensor3({d[0] * e[0], d[1] * e[1], d[2] * e[2]}, std::move(ent));
}

Tensor3 direct_sum(const Tensor3& t, const Tensor3& s) {
  const auto& d = t.dims();
  const auto& e = s.dims();
  std::vector<TensorEntry> ent(t.entries());
  for (const auto& y : s.entries()) ent.push_back({y.i + d[0], y.j + d[1], y.k + d[2], y.coeff});
  return Tensor3({d[0] + e[0], d[1] + e[1], d[2] + e[2]}, std::move(ent));
}

Tensor3 change_basis(const Tensor3& t, const BasisChange& g) {
  const auto& d = t.dims();
  if (g.g_a.rows() != static_cast<std::size_t>(d[0]) || g.g_a.cols() != g.g_a.rows() ||
      g.g_b.rows() != static_cast<std::size_t>(d[1]) || g.g_b.cols() != g.g_b.rows() ||
      g.g_c.rows() != static_cast<std::size_t>(d[2]) || g.g_c.cols() != g.g_c.rows())
    fail(ErrorCode::DimensionMismatch, "basis-change matrices do not match tensor dims");
  // invertibility check (throws SingularMatrix)
  (void)rat_inverse(g.g_a);
  (void)rat_inverse(g.g_b);
  (void)rat_inverse(g.g_c);
  std::map<std::tuple<int, int, int>, Rat> acc;
  for (const auto& e : t.entries()) {
    for (int ip = 0; ip < d[0]; ++ip) {
      const Rat& va = g.g_a.at(ip, e.i);
      if (va == 0) continue;
      for (int jp = 0; jp < d[1]; ++jp) {
        const Rat& vb = g.g_b.at(jp, e.j);
        if (vb == 0) continue;
        const Rat vab = va * vb * e.coeff;
        for (int kp = 0; kp < d[2]; ++kp) {
          const Rat& vc = g.g_c.at(kp, e.k);
          if (vc == 0) continue;
          acc[{ip, jp, kp}] += vab * vc;
        }
      }
    }
  }
  std::vector<TensorEntry> ent;
  for (auto& [key, v] : acc)
    if (v != 0) ent.push_back({std::get<0>(key), std::get<1>(key), std::get<2>(key), v});
  return Tensor3(d, std::move(ent));
}

Tensor3 permute_factors(const Tensor3& t, const std::array<int, 3>& perm) {
  const auto& d = t.dims();
  std::array<int, 3> nd{d[perm[0]], d[perm[1]], d[perm[2]]};
  std::vector<TensorEntry> ent;
  ent.reserve(t.entry_count());
  for (const auto& e : t.entries()) {
    std::array<int, 3> idx{e.i, e.j, e.k};
    ent.push_back({idx[perm[0]], idx[perm[1]], idx[perm[2]], e.coeff});
  }
  return Tensor3(nd, std::move(ent));
}

std::array<std::size_t, 3> flattening_ranks(const Tensor3& t) {
  const auto& d = t.dims();
  std::array<std::size_t, 3> out{};
  for (int ax = 0; ax < 3; ++ax) {
    const int r1 = ax == 0 ? 1 : 0;
    const int r2 = ax == 2 ? 1 : 2;
    // integer matrix after clearing denominators per row is rank-equivalent;
    // clear globally for simplicity
    Int lcm = 1;
    for (const auto& e : t.entries()) {
      Int den = rat_den(e.coeff);
      lcm = boost::multiprecision::lcm(lcm, den);
    }
    std::vector<Int> m(static_cast<std::size_t>(d[ax]) * d[r1] * d[r2], 0);
    for (const auto& e : t.entries()) {
      std::array<int, 3> idx{e.i, e.j, e.k};
      const std::size_t row = idx[ax];
      const std::size_t col = static_cast<std::size_t>(idx[r1]) * d[r2] + idx[r2];
      m[row * (static_cast<std::size_t>(d[r1]) * d[r2]) + col] =
          rat_num(e.coeff * lcm);
    }
    out[ax] = int_rank(m, d[ax], static_cast<std::size_t>(d[r1]) * d[r2]);
  }
  return out;
}

std::array<std::size_t, 3> flattening_ranks_mod_p(const Tensor3& t, const PrimeField& f) {
  const auto& d = t.dims();
  std::array<std::size_t, 3> out{};
  for (int ax = 0; ax < 3; ++ax) {
    const int r1 = ax == 0 ? 1 : 0;
    const int r2 = ax == 2 ? 1 : 2;
    const std::size_t cols = static_cast<std::size_t>(d[r1]) * d[r2];
    std::vector<uint32_t> m(static_cast<std::size_t>(d[ax]) * cols, 0);
    const Int p(f.p());
    for (const auto& e : t.entries()) {
      if (!is_integer(e.coeff))
        fail(ErrorCode::BadParams, "mod-p reduction of a non-integral tensor");
      std::array<int, 3> idx{e.i, e.j, e.k};
      Int v = rat_num(e.coeff) % p;
      if (v < 0) v += p;
      m[static_cast<std::size_t>(idx[ax]) * cols + static_cast<std::size_t>(idx[r1]) * d[r2] +
        idx[r2]] = v.convert_to<uint32_t>();
    }
    out[ax] = fp_rank_inplace(m.data(), d[ax], cols, f);
  }
  return out;
}

}  // namespace grank
