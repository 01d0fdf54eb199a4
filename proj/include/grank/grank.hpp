#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grank/dimfit.hpp"
#include "grank/strata.hpp"
#include "grank/tensor.hpp"

namespace grank {

struct GROptions {
  std::vector<uint32_t> primes{3, 5, 7};
  uint64_t budget = 100'000'000;  // max covectors enumerated per (axis, prime)
  bool auto_extend = true;        // extend the prime ladder while uncertified
  uint32_t max_prime = 97;
  std::size_t max_primes = 12;
  int threads = 0;
  std::vector<Pairing> pairings{Pairing::AB, Pairing::AC, Pairing::BC};
  double tol = 0.35;
};

struct GRReport {
  std::optional<long> gr;  // consensus over the computed routes
  std::map<Pairing, long> gr_pairing;
  std::map<Pairing, DimFit> pairing_fits;
  bool certified = false;
  bool concise = false;
  std::vector<uint32_t> primes_used;
  std::vector<uint32_t> primes_dropped;
  // per axis: stratum index j (>= 1) -> fitted projective dimension of the
  // locus {rank <= min - j}; empty-beyond-zero strata omitted
  std::map<Axis, std::map<std::size_t, long>> strata_dims;
  std::optional<std::pair<Axis, std::size_t>> max_stratum;
  std::optional<long> flag_excess;  // m - gr for concise cubes
  std::vector<std::string> warnings;
  std::map<Axis, std::map<uint32_t, StrataProfile>> profiles;
};

GRReport geometric_rank(const Tensor3& t, const GROptions& opt = {});

// GR_{X,j} from the fitted projective dimension of the j-th rank stratum;
// nullopt when the stratum holds only the zero covector (the paper's +infinity).
std::optional<long> gr_stratified(const Tensor3& t, Axis axis, std::size_t j,
                                  const std::vector<uint32_t>& primes,
                                  uint64_t budget = 100'000'000, int threads = 0);

std::pair<Axis, Axis> pairing_axes(Pairing p);

}  // namespace grank
