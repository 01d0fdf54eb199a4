#pragma once

#include <optional>
#include <vector>

#include "grank/tensor.hpp"

namespace grank {

struct MlRanks {
  std::size_t ml_a = 0, ml_b = 0, ml_c = 0;
  std::size_t min() const { return std::min(ml_a, std::min(ml_b, ml_c)); }
  std::size_t max() const { return std::max(ml_a, std::max(ml_b, ml_c)); }
};

MlRanks multilinear_ranks(const Tensor3& t);
bool is_concise(const Tensor3& t);

struct GridOptions {
  uint64_t budget = 10'000'000;     // max exact grid evaluations
  bool allow_probabilistic = true;  // fall back to random F_p sampling over budget
  int trials = 20;
  uint64_t seed = 0x5eed;
};

// Maximum slice rank over the axis's slice space. Exact when the grid
// {0..min(rows,cols)}^d fits the budget: an r-minor has per-variable degree
// <= r, so a grid of side r+1 detects non-vanishing. Otherwise a randomized
// large-prime estimate with `probabilistic` set.
struct GenericRankResult {
  std::size_t value = 0;
  std::vector<long> witness;  // grid point attaining the value (empty if probabilistic)
  bool probabilistic = false;
};
GenericRankResult generic_slice_rank(const Tensor3& t, Axis axis, const GridOptions& opt = {});

// One-sided genericity for cubes; NotApplicable on non-cubes.
struct OneGenericResult {
  enum class Verdict { Yes, No, NotApplicable } verdict = Verdict::NotApplicable;
  std::vector<long> witness;
  bool probabilistic = false;
};
OneGenericResult is_one_generic(const Tensor3& t, Axis axis, const GridOptions& opt = {});

struct GenericityFlags {
  bool concise = false;
  bool one_a = false, one_b = false, one_c = false;
  bool one_star = false, one_generic = false;
  bool applicable = true;         // false for non-cubes (1_X-genericity undefined)
  bool probabilistic = false;     // any one_* verdict came from sampling
};
GenericityFlags genericity_flags(const Tensor3& t, const GridOptions& opt = {});

// True iff every element of the slice space has rank <= r; exact via the
// rational grid {0..r+1}^d (all (r+1)-minors have per-variable degree <= r+1).
struct BoundedRankResult {
  bool bounded = false;
  bool probabilistic = false;           // true-verdict obtained by sampling only
  std::optional<std::vector<long>> witness;  // a point violating the bound
};
BoundedRankResult bounded_rank_test(const Tensor3& t, Axis axis, std::size_t r,
                                    const GridOptions& opt = {});

}  // namespace grank
