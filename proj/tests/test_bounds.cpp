#include <doctest.h>

#include "grank/bounds.hpp"
#include "grank/catalog.hpp"

using namespace grank;

namespace {

Tensor3 two_rows_5() {
  // 5x5x5, A-slices supported on the first two rows: not B-concise
  std::vector<TensorEntry> e;
  for (int i = 0; i < 5; ++i) {
    e.push_back({i, 0, i, 1});
    e.push_back({i, 1, (i + 1) % 5, 1});
  }
  return Tensor3({5, 5, 5}, std::move(e));
}

}  // namespace

TEST_CASE("concise floor") {
  CHECK(concise_floor(catalog_make("diag", {4})) == 4);
  CHECK(concise_floor(catalog_make("matmul", {2})) == 4);
  for (long q : {2L, 3L}) CHECK(concise_floor(catalog_make("strassen", {q})) == q + 1);
}

TEST_CASE("minimal-rank exclusion") {
  auto u5 = catalog_make("utriv", {5});
  auto gr = geometric_rank(u5);
  REQUIRE(gr.certified);
  CHECK(minrank_exclusion(u5, gr) == 6);

  auto d4 = catalog_make("diag", {4});
  CHECK(!minrank_exclusion(d4, geometric_rank(d4)).has_value());

  auto st = catalog_make("strassen", {3});
  CHECK(!minrank_exclusion(st, geometric_rank(st)).has_value());
}

TEST_CASE("compression bound values") {
  CompressionWitness w;
  w.k = 1;
  w.l = 1;
  w.row_basis = RatMatrix::identity(4);
  w.col_basis = RatMatrix::identity(4);
  CHECK(compression_rank_bound(catalog_make("utriv", {4}), Axis::C, w) == 6);

  CompressionWitness w2 = w;
  w2.row_basis = RatMatrix::identity(2);
  w2.col_basis = RatMatrix::identity(2);
  CHECK(compression_rank_bound(catalog_make("W", {}), Axis::A, w2) == 2);

  for (long m : {3L, 4L, 5L, 6L, 7L, 8L}) {
    auto cw = find_compression(catalog_make("utriv", {m}), Axis::C, 2);
    REQUIRE(cw.has_value());
    CHECK(compression_rank_bound(catalog_make("utriv", {m}), Axis::C, *cw) == 2 * m - 2);
  }

  // whole zero rows kill the conciseness the substitution argument needs
  auto tr = find_compression(two_rows_5(), Axis::A, 3);
  REQUIRE(tr.has_value());
  CHECK_THROWS_AS(compression_rank_bound(two_rows_5(), Axis::A, *tr), Error);
}

TEST_CASE("rank bounds from geometric rank at most three") {
  auto run = [](const char* name, std::vector<long> params) {
    Tensor3 t = catalog_make(name, params);
    auto gr = geometric_rank(t);
    REQUIRE(gr.certified);
    return gr3_rank_bound(t, gr, genericity_flags(t));
  };
  CHECK(run("cw_big", {4}) == 9);           // 2m - 3, m = 6
  CHECK(run("cw_small", {3}) == 5);         // 2m - 3, m = q + 1 = 4
  CHECK(run("cw_small", {4}) == 7);         // 2m - 3, m = 5
  CHECK(run("maxsymcompr", {6}) == 9);      // 1_A-generic
  CHECK(run("gr3_1deg", {9}) == 11);        // 1-degenerate: b + ceil((a-1)/2) - 2
  // hypotheses unmet: nullopt, never a wrong bound
  auto d6 = catalog_make("diag", {6});
  CHECK(!gr3_rank_bound(d6, geometric_rank(d6), genericity_flags(d6)).has_value());
  auto u3 = catalog_make("utriv", {3});  // gr = 2 but m = 3 <= 4: no general branch
  auto gru3 = geometric_rank(u3);
  auto f3 = genericity_flags(u3);
  CHECK(gr3_rank_bound(u3, gru3, f3) == 3);  // cube + 1_*-generic branch still applies
}

TEST_CASE("combined report for utriv(5)") {
  BoundOptions opt;
  opt.catalog = catalog_info("utriv", {5});
  auto rep = combined_bound_report(catalog_make("utriv", {5}), opt);
  REQUIRE(rep.best.has_value());
  CHECK(*rep.best == 8);  // compression bound 2m-2 dominates floor 5 and exclusion 6
  bool saw_floor = false, saw_excl = false, saw_comp = false;
  for (const auto& b : rep.bounds) {
    if (b.source == BoundSource::ConciseFloor) { saw_floor = true; CHECK(b.value == 5); }
    if (b.source == BoundSource::MinRankExclusion) { saw_excl = true; CHECK(b.value == 6); }
    if (b.source == BoundSource::CompressionBound) { saw_comp = true; CHECK(b.value == 8); }
  }
  CHECK(saw_floor);
  CHECK(saw_excl);
  CHECK(saw_comp);
  CHECK(rep.known_rank == 9);
  CHECK(rep.consistent);
}

TEST_CASE("combined report for cw_small(4) and diag") {
  BoundOptions opt;
  opt.catalog = catalog_info("cw_small", {4});
  auto rep = combined_bound_report(catalog_make("cw_small", {4}), opt);
  bool saw_gr3 = false;
  for (const auto& b : rep.bounds)
    if (b.source == BoundSource::GR3OneStarGeneric) {
      saw_gr3 = true;
      CHECK(b.value == 7);  // 2m - 3 with m = q + 1 = 5
    }
  CHECK(saw_gr3);
  CHECK(rep.known_rank == 9);  // 2q + 1
  CHECK(rep.consistent);

  BoundOptions dopt;
  dopt.catalog = catalog_info("diag", {4});
  auto drep = combined_bound_report(catalog_make("diag", {4}), dopt);
  CHECK(drep.best == 4);
  CHECK(drep.consistent);
}

TEST_CASE("removing a bound source never raises the best bound") {
  BoundOptions opt;
  auto rep = combined_bound_report(catalog_make("utriv", {4}), opt);
  REQUIRE(rep.best.has_value());
  long without = 0;
  for (const auto& b : rep.bounds)
    if (!b.conditional && b.source != BoundSource::CompressionBound)
      without = std::max(without, b.value);
  CHECK(without <= *rep.best);
}
