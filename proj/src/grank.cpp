#include "grank/grank.hpp"

#include <algorithm>
#include <cmath>

#include "grank/errors.hpp"
#include "grank/genericity.hpp"

namespace grank {

std::pair<Axis, Axis> pairing_axes(Pairing p) {
  switch (p) {
    case Pairing::AB: return {Axis::A, Axis::B};
    case Pairing::AC: return {Axis::A, Axis::C};
    default: return {Axis::B, Axis::C};
  }
}

namespace {

uint64_t pow_u64(uint64_t p, std::size_t d, uint64_t cap) {
  uint64_t n = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (n > cap / p) return cap + 1;
    n *= p;
  }
  return n;
}

uint32_t next_prime_after(uint32_t p) {
  for (uint32_t q = p + 1;; ++q)
    if (PrimeField::is_prime(q)) return q;
}

struct RouteState {
  // profiles for every available axis and every usable prime
  std::map<Axis, std::map<uint32_t, StrataProfile>> profiles;
  std::vector<Axis> available_axes;
};

// Affine max-formula cross check: dim sigma-hat = max_r (dim{rank<=r} + other - r).
struct StrataRoute {
  long dim = -1;
  bool certified = false;
};

StrataRoute strata_route_dim(const std::map<uint32_t, StrataProfile>& profs, std::size_t axis_dim,
                             std::size_t other_dim, double tol) {
  std::size_t maxr = 0;
  for (const auto& [p, prof] : profs) maxr = std::max(maxr, prof.max_rank());
  StrataRoute out;
  out.certified = true;
  for (std::size_t r = 0; r <= maxr; ++r) {
    std::map<uint32_t, Int> counts;
    for (const auto& [p, prof] : profs) counts[p] = prof.cumulative(r);
    DimFit fit = dimension_fit(counts, static_cast<long>(axis_dim), tol);
    out.certified = out.certified && fit.certified;
    out.dim = std::max(out.dim, fit.dimension + static_cast<long>(other_dim) -
                                    static_cast<long>(r));
  }
  return out;
}

}  // namespace

GRReport geometric_rank(const Tensor3& t, const GROptions& opt) {
  GRReport rep;
  if (!t.integral())
    fail(ErrorCode::BadParams, "geometric_rank expects an integer-coefficient tensor");
  if (opt.pairings.empty()) fail(ErrorCode::BadParams, "no pairings requested");
  const auto& d = t.dims();
  const auto mlq = flattening_ranks(t);
  rep.concise = mlq[0] == static_cast<std::size_t>(d[0]) &&
                mlq[1] == static_cast<std::size_t>(d[1]) &&
                mlq[2] == static_cast<std::size_t>(d[2]);

  auto prime_ok = [&](uint32_t p) {
    PrimeField f(p);
    return flattening_ranks_mod_p(t, f) == mlq;
  };

  std::vector<uint32_t> ladder;
  for (uint32_t p : opt.primes) {
    if (!PrimeField::is_prime(p)) fail(ErrorCode::BadParams, "requested modulus is not prime");
    if (prime_ok(p)) {
      if (std::find(ladder.begin(), ladder.end(), p) == ladder.end()) ladder.push_back(p);
    } else {
      rep.primes_dropped.push_back(p);
      rep.warnings.push_back("dropped bad prime " + std::to_string(p) +
                             " (flattening rank loss mod p)");
    }
  }
  std::sort(ladder.begin(), ladder.end());
  auto extend_ladder = [&]() -> bool {
    uint32_t q = ladder.empty() ? 2 : ladder.back();
    while (ladder.size() < opt.max_primes) {
      q = next_prime_after(q);
      if (q > opt.max_prime) return false;
      if (!prime_ok(q)) {
        rep.primes_dropped.push_back(q);
        continue;
      }
      ladder.push_back(q);
      return true;
    }
    return false;
  };
  while (ladder.size() < 2)
    if (!extend_ladder())
      fail(ErrorCode::InsufficientPrimes, "fewer than two usable primes within limits");

  // axes we need: for each pairing the cheaper side plus, when affordable,
  // the other side and the remaining axis (cross checks and strata reports)
  auto axis_cost_ok = [&](Axis ax, uint32_t p) {
    return pow_u64(p, static_cast<std::size_t>(t.dim(ax)), opt.budget) <= opt.budget;
  };

  RouteState st;
  auto ensure_profiles = [&]() {
    st.available_axes.clear();
    for (Axis ax : {Axis::A, Axis::B, Axis::C}) {
      bool all_ok = true;
      for (uint32_t p : ladder)
        if (!axis_cost_ok(ax, p)) all_ok = false;
      if (!all_ok) continue;
      st.available_axes.push_back(ax);
      for (uint32_t p : ladder)
        if (!st.profiles[ax].count(p))
          st.profiles[ax].emplace(p, stratum_counts(t, ax, p, opt.budget, opt.threads));
    }
    if (st.available_axes.empty())
      fail(ErrorCode::BudgetExceeded, "no axis enumerable within the budget");
  };

  struct PairingEval {
    long gr = 0;
    DimFit fit;
    bool cross_ok = true;  // both-side fits and strata routes agree
  };

  auto other_dim_for = [&](Pairing pr, Axis side) -> std::size_t {
    auto [x, y] = pairing_axes(pr);
    return static_cast<std::size_t>(side == x ? t.dim(y) : t.dim(x));
  };

  bool done = false;
  std::map<Pairing, PairingEval> evals;
  while (!done) {
    ensure_profiles();
    evals.clear();
    bool all_certified = true;
    for (Pairing pr : opt.pairings) {
      auto [x, y] = pairing_axes(pr);
      std::vector<Axis> sides;
      for (Axis ax : {x, y})
        if (st.profiles.count(ax) && !st.profiles[ax].empty() &&
            std::find(st.available_axes.begin(), st.available_axes.end(), ax) !=
                st.available_axes.end())
          sides.push_back(ax);
      if (sides.empty())
        fail(ErrorCode::BudgetExceeded,
             std::string("pairing ") + pairing_name(pr) + " not enumerable within budget");
      // prefer the cheaper side
      std::sort(sides.begin(), sides.end(),
                [&](Axis u, Axis v) { return t.dim(u) < t.dim(v); });
      const long dmax = t.dim(x) + t.dim(y);
      PairingEval ev;
      bool first_side = true;
      for (Axis side : sides) {
        std::map<uint32_t, Int> counts;
        for (uint32_t p : ladder)
          counts[p] = sigma_hat_from_profile(st.profiles[side].at(p), other_dim_for(pr, side));
        DimFit fit = dimension_fit(counts, dmax, opt.tol);
        if (first_side) {
          ev.fit = fit;
          ev.gr = dmax - fit.dimension;
          first_side = false;
        } else if (fit.dimension != ev.fit.dimension || !fit.certified) {
          ev.cross_ok = false;
        }
        // affine strata cross-route from this side
        StrataRoute route = strata_route_dim(st.profiles[side], t.dim(side),
                                             other_dim_for(pr, side), opt.tol);
        if (!route.certified || route.dim != ev.fit.dimension) ev.cross_ok = false;
      }
      evals[pr] = ev;
      all_certified = all_certified && ev.fit.certified && ev.cross_ok;
    }
    // pairings must agree with each other
    std::optional<long> consensus;
    bool agree = true;
    for (const auto& [pr, ev] : evals) {
      if (!consensus)
        consensus = ev.gr;
      else if (*consensus != ev.gr)
        agree = false;
    }
    all_certified = all_certified && agree;

    // projective stratified formula must reproduce the value on concise tensors
    if (all_certified && rep.concise && consensus) {
      for (Axis ax : st.available_axes) {
        const std::size_t dx = t.dim(ax);
        const std::size_t dother =
            ax == Axis::A ? std::min(d[1], d[2])
                          : (ax == Axis::B ? std::min(d[0], d[2]) : std::min(d[0], d[1]));
        long best = -1;
        for (std::size_t j = 0; j <= dother; ++j) {
          std::map<uint32_t, Int> counts;
          for (uint32_t p : ladder)
            counts[p] = st.profiles[ax].at(p).cumulative(dother - j);
          bool empty = true;
          for (const auto& [p, c] : counts)
            if (c != 1) empty = false;
          if (empty) continue;
          DimFit fit = dimension_fit(counts, static_cast<long>(dx), opt.tol);
          if (!fit.certified) { all_certified = false; break; }
          best = std::max(best, fit.dimension - 1 + static_cast<long>(j));
        }
        if (!all_certified) break;
        const long grx = static_cast<long>(dx) + static_cast<long>(dother) - 1 - best;
        if (grx != *consensus) {
          all_certified = false;
          rep.warnings.push_back(std::string("stratified route on axis ") + axis_name(ax) +
                                 " gives " + std::to_string(grx));
        }
      }
    }

    if (all_certified) {
      rep.certified = true;
      done = true;
    } else if (!opt.auto_extend || !extend_ladder()) {
      rep.certified = false;
      done = true;
    }
  }

  rep.primes_used = ladder;
  for (const auto& [pr, ev] : evals) {
    rep.gr_pairing[pr] = ev.gr;
    rep.pairing_fits[pr] = ev.fit;
  }
  {
    std::optional<long> consensus;
    bool agree = true;
    for (const auto& [pr, ev] : evals) {
      if (!consensus)
        consensus = ev.gr;
      else if (*consensus != ev.gr)
        agree = false;
    }
    if (agree)
      rep.gr = consensus;
    else
      rep.warnings.push_back("pairing routes disagree; no consensus geometric rank");
  }

  // strata_dims: per available axis, j >= 1 with nonempty stratum
  long global_best = -1;
  for (Axis ax : st.available_axes) {
    const std::size_t dother =
        ax == Axis::A ? std::min(d[1], d[2])
                      : (ax == Axis::B ? std::min(d[0], d[2]) : std::min(d[0], d[1]));
    for (std::size_t j = 1; j <= dother; ++j) {
      std::map<uint32_t, Int> counts;
      for (uint32_t p : ladder)
        counts[p] = st.profiles[ax].at(p).cumulative(dother - j);
      bool empty = true;
      for (const auto& [p, c] : counts)
        if (c != 1) empty = false;
      if (empty) continue;
      DimFit fit = dimension_fit(counts, static_cast<long>(t.dim(ax)), opt.tol);
      const long projdim = fit.dimension - 1;
      rep.strata_dims[ax][j] = projdim;
      if (projdim + static_cast<long>(j) > global_best) {
        global_best = projdim + static_cast<long>(j);
        rep.max_stratum = std::make_pair(ax, j);
      }
    }
  }
  if (rep.gr && rep.concise && d[0] == d[1] && d[1] == d[2])
    rep.flag_excess = static_cast<long>(d[0]) - *rep.gr;
  rep.profiles = std::move(st.profiles);
  return rep;
}

std::optional<long> gr_stratified(const Tensor3& t, Axis axis, std::size_t j,
                                  const std::vector<uint32_t>& primes, uint64_t budget,
                                  int threads) {
  const auto& d = t.dims();
  const std::size_t dother =
      axis == Axis::A ? std::min(d[1], d[2])
                      : (axis == Axis::B ? std::min(d[0], d[2]) : std::min(d[0], d[1]));
  if (j < 1 || j > dother) fail(ErrorCode::BadParams, "stratum index out of range");
  std::map<uint32_t, Int> counts;
  for (uint32_t p : primes) {
    auto prof = stratum_counts(t, axis, p, budget, threads);
    counts[p] = prof.cumulative(dother - j);
  }
  bool empty = true;
  for (const auto& [p, c] : counts)
    if (c != 1) empty = false;
  if (empty) return std::nullopt;  // stratum is only the zero covector
  DimFit fit = dimension_fit(counts, static_cast<long>(t.dim(axis)));
  const long projdim = fit.dimension - 1;
  return static_cast<long>(t.dim(axis)) + static_cast<long>(dother) - 1 - projdim -
         static_cast<long>(j);
}

}  // namespace grank
