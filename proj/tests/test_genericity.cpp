#include <doctest.h>

#include "grank/catalog.hpp"
#include "grank/genericity.hpp"
#include "oracles.hpp"

using namespace grank;

TEST_CASE("generic slice rank on catalog tensors") {
  for (long m : {2L, 3L, 5L})
    CHECK(generic_slice_rank(catalog_make("diag", {m}), Axis::A).value ==
          static_cast<std::size_t>(m));
  CHECK(generic_slice_rank(catalog_make("strassen", {2}), Axis::A).value == 2);
  auto r = generic_slice_rank(catalog_make("matmul", {2}), Axis::A);
  CHECK(r.value == 4);
  CHECK(!r.probabilistic);
  CHECK(!r.witness.empty());
}

TEST_CASE("one-genericity verdicts") {
  auto mm = is_one_generic(catalog_make("matmul", {2}), Axis::A);
  CHECK(mm.verdict == OneGenericResult::Verdict::Yes);
  auto sk = is_one_generic(catalog_make("skew3", {}), Axis::A);
  CHECK(sk.verdict == OneGenericResult::Verdict::No);
  // non-cube: the notion is undefined
  auto st = is_one_generic(catalog_make("strassen", {3}), Axis::A);
  CHECK(st.verdict == OneGenericResult::Verdict::NotApplicable);
  // small even member of the 1-degenerate family, exact grid
  auto g6 = is_one_generic(catalog_make("gr3_1deg", {6}), Axis::A);
  CHECK(g6.verdict == OneGenericResult::Verdict::No);
  CHECK(!g6.probabilistic);
  // m = 8 exceeds the default grid budget; the sampled verdict is flagged
  auto g8 = is_one_generic(catalog_make("gr3_1deg", {8}), Axis::A);
  CHECK(g8.verdict == OneGenericResult::Verdict::No);
  CHECK(g8.probabilistic);
  GridOptions strict;
  strict.allow_probabilistic = false;
  CHECK_THROWS_AS(is_one_generic(catalog_make("gr3_1deg", {8}), Axis::A, strict), Error);
}

TEST_CASE("genericity flags") {
  auto fu = genericity_flags(catalog_make("utriv", {4}));
  CHECK(fu.concise);
  CHECK(fu.one_a);
  CHECK(fu.one_b);
  CHECK(!fu.one_c);
  CHECK(fu.one_star);
  CHECK(!fu.one_generic);
  auto fm = genericity_flags(catalog_make("matmul", {2}));
  CHECK(fm.one_generic);
  auto fs = genericity_flags(catalog_make("strassen", {2}));
  CHECK(!fs.applicable);
}

TEST_CASE("bounded rank by grid identity testing") {
  CHECK(bounded_rank_test(catalog_make("skew3", {}), Axis::A, 2).bounded);
  CHECK(bounded_rank_test(catalog_make("utriv", {4}), Axis::C, 2).bounded);
  auto mm = bounded_rank_test(catalog_make("matmul", {2}), Axis::A, 3);
  CHECK(!mm.bounded);
  CHECK(mm.witness.has_value());
  // the A-slice space of utriv is x_1 I plus a first row: full rank, not bounded
  CHECK(!bounded_rank_test(catalog_make("utriv", {4}), Axis::A, 2).bounded);
}

TEST_CASE("bounded rank true implies generic rank <= r") {
  for (const char* name : {"skew3", "W"}) {
    Tensor3 t = catalog_make(name, {});
    for (Axis ax : {Axis::A, Axis::B, Axis::C}) {
      const std::size_t g = generic_slice_rank(t, ax).value;
      for (std::size_t r = 0; r <= g + 1; ++r) {
        auto b = bounded_rank_test(t, ax, r);
        if (b.bounded) CHECK(g <= r);
        if (!b.bounded) CHECK(g > r);
      }
    }
  }
}

TEST_CASE("grid verdicts agree with exhaustive F_p slice enumeration") {
  struct Case {
    const char* name;
    std::vector<long> params;
    Axis axis;
    std::size_t r;
  };
  const Case cases[] = {
      {"skew3", {}, Axis::A, 2},  {"skew3", {}, Axis::A, 1},
      {"utriv", {3}, Axis::C, 2}, {"utriv", {4}, Axis::C, 2},
      {"utriv", {4}, Axis::C, 1}, {"matmul", {2}, Axis::A, 3},
      {"W", {}, Axis::A, 1},      {"W", {}, Axis::A, 2},
      {"diag", {3}, Axis::A, 2},  {"strassen", {2}, Axis::A, 1},
  };
  for (const auto& c : cases) {
    Tensor3 t = catalog_make(c.name, c.params);
    const bool grid = bounded_rank_test(t, c.axis, c.r).bounded;
    for (uint32_t p : {2u, 3u, 5u})
      CHECK(grid == grank_test::oracle_bounded_rank(t, c.axis, p, c.r));
  }
}
