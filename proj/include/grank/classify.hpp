#pragma once

#include <array>
#include <optional>

#include "grank/genericity.hpp"
#include "grank/tensor.hpp"

namespace grank {

// --- spaces of bounded rank 2 ---

enum class Rank2Variant { TwoRows, RowPlusColumn, Skew3, NotBounded2, Unresolved };
const char* rank2_variant_name(Rank2Variant v);

struct Rank2SpaceKind {
  Rank2Variant variant = Rank2Variant::Unresolved;
  // after  P' = g_row * P * g_col^T  every slice P matches the variant's
  // zero pattern (TwoRows: rows >= 2 zero -- on columns when transposed;
  // RowPlusColumn: support in row 0 and column 0; Skew3: P'^T = -P')
  RatMatrix g_row, g_col;
  bool transposed = false;
};

Rank2SpaceKind classify_rank2_space(const Tensor3& t, Axis axis, const GridOptions& opt = {});

// --- concise GR-2 tensors ---

enum class GR2Variant { Skew3Tensor, UtrivM, NotConcise, NotGR2, SliceSpaceRank2, Unresolved };
const char* gr2_variant_name(GR2Variant v);

struct GR2Class {
  GR2Variant variant = GR2Variant::Unresolved;
  std::optional<Axis> bounded_axis;
  // change_basis(permute_factors(input, factor_perm), *witness) equals the
  // catalog tensor entry for entry when a normal form is claimed
  std::array<int, 3> factor_perm{0, 1, 2};
  std::optional<BasisChange> witness;
};

GR2Class classify_gr2_tensor(const Tensor3& t, const GridOptions& opt = {});

// --- compression spaces ---

struct CompressionWitness {
  std::size_t k = 0, l = 0;
  RatMatrix row_basis, col_basis;
};

// True iff row_basis * P * col_basis^T has an exactly zero lower-right
// (rows-k) x (cols-l) block for every basis slice P along the axis.
bool verify_compression(const Tensor3& t, Axis axis, const CompressionWitness& w);

// Heuristic search; any returned witness has been verified, with k+l <= max_r.
std::optional<CompressionWitness> find_compression(const Tensor3& t, Axis axis,
                                                   std::size_t max_r);

}  // namespace grank
