#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "grank/numeric.hpp"

namespace grank {

// Dimension of a variety fitted from exact point counts N(p) over a prime
// ladder, on the model N(p) ~ c * p^d. Pair slopes are reported as
// diagnostics; the estimate itself solves log N = c0 + d log p + c2/p on
// prime triples (the 1/p term absorbs the leading drift of the Lang-Weil
// constant), and near-integer in-range estimates vote.
struct DimFit {
  long dimension = 0;
  bool certified = false;
  std::vector<double> slope_estimates;   // one per consecutive prime pair
  std::vector<double> triple_estimates;  // one per prime triple (i<j<k)
};

DimFit dimension_fit(const std::map<uint32_t, Int>& counts, long dmax, double tol = 0.35);

}  // namespace grank
