#pragma once

#include <cstdint>
#include <map>

#include "grank/tensor.hpp"

namespace grank {

enum class Pairing : int { AB = 0, AC = 1, BC = 2 };
const char* pairing_name(Pairing p);

// Exact histogram: for each rank r, the number of covectors in F_p^d whose
// slice along `axis` has that rank. Sums to p^d; the zero covector sits at r=0.
struct StrataProfile {
  Axis axis = Axis::A;
  uint32_t prime = 0;
  std::map<std::size_t, Int> counts;

  Int total() const;
  std::size_t max_rank() const;
  Int cumulative(std::size_t r) const;  // number of covectors with rank <= r
};

// Full enumeration of F_p^d (d = axis dimension), reducing the tensor mod p.
// threads = 0 picks GRANK_THREADS or hardware concurrency. Deterministic.
StrataProfile stratum_counts(const Tensor3& t, Axis axis, uint32_t p,
                             uint64_t budget = 100'000'000, int threads = 0);

// |sigma-hat| of a pairing from a one-sided profile: sum_r counts[r] * p^(other_dim - r).
Int sigma_hat_from_profile(const StrataProfile& prof, std::size_t other_dim);

// |{(alpha,beta) : T(alpha,beta,.) = 0}| over F_p, enumerating the cheaper side.
Int sigma_hat_count(const Tensor3& t, Pairing pairing, uint32_t p,
                    uint64_t budget = 100'000'000, int threads = 0);

int default_thread_count();

}  // namespace grank
