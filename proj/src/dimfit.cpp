#include "grank/dimfit.hpp"

#include <algorithm>
#include <cmath>

#include "grank/errors.hpp"

namespace grank {

namespace {

double corrected_triple(double p1, double p2, double p3, double l1, double l2, double l3) {
  const double a11 = std::log(p1) - std::log(p2), a12 = 1.0 / p1 - 1.0 / p2;
  const double a21 = std::log(p2) - std::log(p3), a22 = 1.0 / p2 - 1.0 / p3;
  const double det = a11 * a22 - a12 * a21;
  return ((l1 - l2) * a22 - (l2 - l3) * a12) / det;
}

}  // namespace

DimFit dimension_fit(const std::map<uint32_t, Int>& counts, long dmax, double tol) {
  if (counts.size() < 2) fail(ErrorCode::InsufficientPrimes, "dimension fit needs >= 2 primes");
  std::vector<double> ps, ls;
  bool constant = true;
  const Int& first = counts.begin()->second;
  for (const auto& [p, n] : counts) {
    if (n < 1) fail(ErrorCode::BadParams, "point counts must be >= 1");
    if (n != first) constant = false;
    ps.push_back(static_cast<double>(p));
    ls.push_back(std::log(to_double(n)));
  }
  DimFit fit;
  const std::size_t n = ps.size();
  for (std::size_t i = 0; i + 1 < n; ++i)
    fit.slope_estimates.push_back((ls[i + 1] - ls[i]) / (std::log(ps[i + 1]) - std::log(ps[i])));
  if (constant) {
    fit.dimension = 0;
    fit.certified = true;
    return fit;
  }
  if (n == 2) {
    const double s = fit.slope_estimates[0];
    const long d = std::lround(s);
    fit.dimension = std::clamp(d, 0L, dmax);
    fit.certified = std::abs(s - static_cast<double>(d)) <= tol && d >= 0 && d <= dmax;
    return fit;
  }
  std::map<long, int> votes;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        const double t = corrected_triple(ps[i], ps[j], ps[k], ls[i], ls[j], ls[k]);
        fit.triple_estimates.push_back(t);
        const long r = std::lround(t);
        if (std::abs(t - static_cast<double>(r)) <= tol && r >= 0 && r <= dmax) ++votes[r];
      }
  if (votes.empty()) {
    // widest-pair slope as an uncertified point estimate
    const double s = (ls.back() - ls.front()) / (std::log(ps.back()) - std::log(ps.front()));
    fit.dimension = std::clamp(std::lround(s), 0L, dmax);
    fit.certified = false;
    return fit;
  }
  long best = 0;
  int best_votes = -1;
  for (const auto& [d, v] : votes)
    if (v > best_votes || (v == best_votes && d > best)) { best = d; best_votes = v; }
  fit.dimension = best;
  if (n == 3) {
    fit.certified = votes.size() == 1;
  } else {
    int runner = 0;
    for (const auto& [d, v] : votes)
      if (d != best) runner = std::max(runner, v);
    fit.certified = best_votes >= 3 && best_votes >= 2 * runner;
  }
  return fit;
}

}  // namespace grank
