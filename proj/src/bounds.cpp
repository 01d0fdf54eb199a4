#include "grank/bounds.hpp"

#include <algorithm>

#include "grank/errors.hpp"

namespace grank {

const char* bound_source_name(BoundSource s) {
  switch (s) {
    case BoundSource::ConciseFloor: return "ConciseFloor";
    case BoundSource::MinRankExclusion: return "MinRankExclusion";
    case BoundSource::CompressionBound: return "CompressionBound";
    case BoundSource::GR3General: return "GR3General";
    default: return "GR3OneStarGeneric";
  }
}

long concise_floor(const Tensor3& t) {
  return static_cast<long>(multilinear_ranks(t).max());
}

std::optional<long> minrank_exclusion(const Tensor3& t, const GRReport& gr) {
  const auto& d = t.dims();
  if (!(d[0] == d[1] && d[1] == d[2])) return std::nullopt;
  if (!gr.certified || !gr.gr) return std::nullopt;
  if (!is_concise(t)) return std::nullopt;
  if (*gr.gr >= d[0]) return std::nullopt;
  return d[0] + 1;
}

namespace {

std::pair<Axis, Axis> non_axis_factors(Axis axis) {
  switch (axis) {
    case Axis::A: return {Axis::B, Axis::C};
    case Axis::B: return {Axis::A, Axis::C};
    default: return {Axis::A, Axis::B};
  }
}

}  // namespace

long compression_rank_bound(const Tensor3& t, Axis axis, const CompressionWitness& w) {
  auto [rowf, colf] = non_axis_factors(axis);
  auto ml = flattening_ranks(t);
  const auto& d = t.dims();
  const bool row_concise = ml[static_cast<int>(rowf)] == static_cast<std::size_t>(d[static_cast<int>(rowf)]);
  const bool col_concise = ml[static_cast<int>(colf)] == static_cast<std::size_t>(d[static_cast<int>(colf)]);
  if (!row_concise || !col_concise)
    fail(ErrorCode::PreconditionFailed,
         "compression bound needs the slice row and column factors concise");
  if (!verify_compression(t, axis, w))
    fail(ErrorCode::PreconditionFailed, "compression witness failed verification");
  const long rows = d[static_cast<int>(rowf)], cols = d[static_cast<int>(colf)];
  return rows + cols - static_cast<long>(w.k + w.l);
}

std::optional<long> gr3_rank_bound(const Tensor3& t, const GRReport& gr,
                                   const GenericityFlags& flags) {
  if (!gr.certified || !gr.gr || *gr.gr > 3) return std::nullopt;
  if (!is_concise(t)) return std::nullopt;
  const auto& d = t.dims();
  const bool cube = d[0] == d[1] && d[1] == d[2];
  if (cube && flags.one_star && !flags.probabilistic) return 2L * d[0] - 3;
  std::array<long, 3> s{d[0], d[1], d[2]};
  std::sort(s.begin(), s.end());  // s[0] <= s[1] <= s[2]
  if (s[0] > 4) return s[1] + (s[0] - 1 + 1) / 2 - 2;
  return std::nullopt;
}

BoundReport combined_bound_report(const Tensor3& t, const BoundOptions& opt) {
  BoundReport rep;
  const long floor = concise_floor(t);
  rep.bounds.push_back({floor, BoundSource::ConciseFloor, "max multilinear rank", false});

  GRReport gr;
  bool have_gr = false;
  try {
    gr = geometric_rank(t, opt.gr);
    have_gr = true;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::BudgetExceeded && e.code() != ErrorCode::InsufficientPrimes) throw;
    rep.notes.push_back(std::string("geometric rank skipped: ") + e.what());
  }

  if (have_gr) {
    if (auto b = minrank_exclusion(t, gr))
      rep.bounds.push_back({*b, BoundSource::MinRankExclusion,
                            "concise cube with degenerate geometric rank", false});
  }

  for (Axis axis : {Axis::A, Axis::B, Axis::C}) {
    auto [rowf, colf] = non_axis_factors(axis);
    const auto& d = t.dims();
    const std::size_t max_r =
        std::min(d[static_cast<int>(rowf)], d[static_cast<int>(colf)]) - 1;
    if (max_r == 0) continue;
    auto w = find_compression(t, axis, max_r);
    if (!w) continue;
    try {
      const long b = compression_rank_bound(t, axis, *w);
      rep.bounds.push_back({b, BoundSource::CompressionBound,
                            std::string("axis ") + axis_name(axis) + " (k=" + std::to_string(w->k) +
                                ", l=" + std::to_string(w->l) + ")",
                            false});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PreconditionFailed) throw;
    }
  }

  if (have_gr && gr.gr && *gr.gr <= 3 && is_concise(t)) {
    auto flags = genericity_flags(t, opt.grid);
    const auto& d = t.dims();
    const bool cube = d[0] == d[1] && d[1] == d[2];
    GRReport gr_for_bound = gr;
    auto b = gr3_rank_bound(t, gr_for_bound, flags);
    if (!gr.certified && *gr.gr <= 3) {
      // conditional: the theorem hypotheses hold only if the uncertified GR is right
      GRReport forced = gr;
      forced.certified = true;
      if (auto cb = gr3_rank_bound(t, forced, flags)) {
        const bool strong = cube && flags.one_star && !flags.probabilistic;
        rep.bounds.push_back({*cb,
                              strong ? BoundSource::GR3OneStarGeneric : BoundSource::GR3General,
                              "conditional on the uncertified geometric rank", true});
      }
    } else if (b) {
      const bool strong = cube && flags.one_star && !flags.probabilistic;
      rep.bounds.push_back({*b, strong ? BoundSource::GR3OneStarGeneric : BoundSource::GR3General,
                            strong ? "concise 1_*-generic cube" : "concise, dims sorted", false});
    }
  }

  long best = 0;
  bool any = false;
  for (const auto& b : rep.bounds)
    if (!b.conditional) {
      best = std::max(best, b.value);
      any = true;
    }
  if (any) rep.best = best;

  if (opt.catalog) {
    rep.known_rank = opt.catalog->known_rank;
    if (rep.known_rank && rep.best) rep.consistent = *rep.best <= *rep.known_rank;
    if (rep.known_rank && have_gr && gr.gr) {
      const auto& d = t.dims();
      if (d[0] == d[1] && d[1] == d[2]) {
        const long gap = 2L * d[0] - *gr.gr;
        rep.notes.push_back("open question datum: known rank " + std::to_string(*rep.known_rank) +
                            " vs 2m - GR = " + std::to_string(gap));
      }
    }
  }
  return rep;
}

}  // namespace grank
