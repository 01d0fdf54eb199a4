#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "grank/prime_field.hpp"
#include "grank/rat_matrix.hpp"

namespace grank {

enum class Axis : int { A = 0, B = 1, C = 2 };

inline const char* axis_name(Axis a) {
  switch (a) {
    case Axis::A: return "A";
    case Axis::B: return "B";
    default: return "C";
  }
}
Axis axis_from_name(const std::string& s);

struct TensorEntry {
  int i, j, k;
  Rat coeff;
  bool operator==(const TensorEntry&) const = default;
};

// Sparse order-3 tensor with exact coefficients (integers for everything the
// catalog and file format produce; rationals appear transiently under basis
// change). Immutable after construction.
class Tensor3 {
 public:
  Tensor3(std::array<int, 3> dims, std::vector<TensorEntry> entries);

  const std::array<int, 3>& dims() const { return dims_; }
  int dim(Axis x) const { return dims_[static_cast<int>(x)]; }
  const std::vector<TensorEntry>& entries() const { return entries_; }
  std::size_t entry_count() const { return entries_.size(); }

  bool integral() const;  // all coefficients integers
  bool operator==(const Tensor3& o) const { return dims_ == o.dims_ && entries_ == o.entries_; }

 private:
  std::array<int, 3> dims_;
  std::vector<TensorEntry> entries_;  // sorted by (i,j,k), no zeros, no duplicates
};

Tensor3 build_tensor(std::array<int, 3> dims, std::vector<TensorEntry> entries);

// Slice along an axis at a rational covector. Row/column factors per axis:
// A -> b x c, B -> a x c, C -> a x b.
RatMatrix slice(const Tensor3& t, Axis axis, const std::vector<Rat>& covector);

// The d slices at standard basis covectors along `axis` (d = dim of the axis).
std::vector<RatMatrix> basis_slices(const Tensor3& t, Axis axis);

// Dense mod-p reductions of the basis slices, row-major, one buffer per slice.
struct FpSliceBasis {
  std::size_t rows = 0, cols = 0;
  std::vector<std::vector<uint32_t>> slices;
};
FpSliceBasis basis_slices_mod_p(const Tensor3& t, Axis axis, const PrimeField& f);

Tensor3 kronecker(const Tensor3& t, const Tensor3& s);
Tensor3 direct_sum(const Tensor3& t, const Tensor3& s);

struct BasisChange {
  RatMatrix g_a, g_b, g_c;
};

// (g_a (x) g_b (x) g_c) . t ; requires invertible factors.
Tensor3 change_basis(const Tensor3& t, const BasisChange& g);

// New tensor with factors reordered: new factor i is old factor perm[i].
Tensor3 permute_factors(const Tensor3& t, const std::array<int, 3>& perm);

// Multilinear ranks over Q of the three flattenings (exact).
std::array<std::size_t, 3> flattening_ranks(const Tensor3& t);
std::array<std::size_t, 3> flattening_ranks_mod_p(const Tensor3& t, const PrimeField& f);

}  // namespace grank
