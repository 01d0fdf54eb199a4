#include <doctest.h>

#include "grank/bounds.hpp"
#include "grank/catalog.hpp"
#include "grank/classify.hpp"

using namespace grank;

namespace {

uint64_t rng_state = 0x5eedcafe;
int rnd_small() {
  rng_state = rng_state * 6364136223846793005ull + 1442695040888963407ull;
  return static_cast<int>((rng_state >> 33) % 7) - 3;
}

RatMatrix random_invertible(std::size_t n) {
  for (;;) {
    RatMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) g.at(i, j) = rnd_small();
    if (rat_rank(g) == n) return g;
  }
}

// a 4x4x4 tensor whose A-slices live in the first two rows
Tensor3 two_rows_tensor() {
  std::vector<TensorEntry> e{{0, 0, 0, 1}, {0, 0, 1, 1}, {1, 0, 2, 1}, {1, 1, 3, 1},
                             {2, 1, 0, 1}, {2, 1, 2, 1}, {3, 0, 3, 1}, {3, 1, 1, 1}};
  return Tensor3({4, 2 + 2, 4}, std::move(e));
}

}  // namespace

TEST_CASE("bounded-rank-2 space classification") {
  auto sk = classify_rank2_space(catalog_make("skew3", {}), Axis::A);
  CHECK(sk.variant == Rank2Variant::Skew3);

  auto ut = classify_rank2_space(catalog_make("utriv", {4}), Axis::C);
  CHECK(ut.variant == Rank2Variant::RowPlusColumn);

  auto tr = classify_rank2_space(two_rows_tensor(), Axis::A);
  CHECK(tr.variant == Rank2Variant::TwoRows);

  auto mm = classify_rank2_space(catalog_make("matmul", {2}), Axis::A);
  CHECK(mm.variant == Rank2Variant::NotBounded2);
}

TEST_CASE("row+column witness brings the space to the displayed pattern") {
  Tensor3 u4 = catalog_make("utriv", {4});
  BasisChange g{random_invertible(4), random_invertible(4), random_invertible(4)};
  Tensor3 scr = change_basis(u4, g);
  auto kind = classify_rank2_space(scr, Axis::C);
  REQUIRE(kind.variant == Rank2Variant::RowPlusColumn);
  const RatMatrix gct = kind.g_col.transposed();
  for (const auto& s : basis_slices(scr, Axis::C)) {
    RatMatrix tr = kind.g_row * s * gct;
    for (std::size_t i = 1; i < tr.rows(); ++i)
      for (std::size_t j = 1; j < tr.cols(); ++j) CHECK(tr.at(i, j) == 0);
  }
}

TEST_CASE("skew witness is exactly skew-symmetrizing") {
  Tensor3 sk = catalog_make("skew3", {});
  BasisChange g{random_invertible(3), random_invertible(3), random_invertible(3)};
  Tensor3 scr = change_basis(sk, g);
  auto kind = classify_rank2_space(scr, Axis::A);
  REQUIRE(kind.variant == Rank2Variant::Skew3);
  const RatMatrix gct = kind.g_col.transposed();
  for (const auto& s : basis_slices(scr, Axis::A)) {
    RatMatrix tr = kind.g_row * s * gct;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(tr.at(i, j) == -tr.at(j, i));
  }
}

TEST_CASE("classify catalog normal forms directly") {
  auto c1 = classify_gr2_tensor(catalog_make("skew3", {}));
  CHECK(c1.variant == GR2Variant::Skew3Tensor);
  REQUIRE(c1.witness.has_value());
  CHECK(change_basis(permute_factors(catalog_make("skew3", {}), c1.factor_perm), *c1.witness) ==
        catalog_make("skew3", {}));

  auto c2 = classify_gr2_tensor(catalog_make("utriv", {5}));
  CHECK(c2.variant == GR2Variant::UtrivM);
  REQUIRE(c2.witness.has_value());
  CHECK(change_basis(permute_factors(catalog_make("utriv", {5}), c2.factor_perm), *c2.witness) ==
        catalog_make("utriv", {5}));
}

TEST_CASE("classify a scrambled utriv with an exact round-trip witness") {
  for (long m : {3L, 4L}) {
    Tensor3 u = catalog_make("utriv", {m});
    for (int trial = 0; trial < 3; ++trial) {
      BasisChange g{random_invertible(m), random_invertible(m), random_invertible(m)};
      Tensor3 in = change_basis(u, g);
      auto cls = classify_gr2_tensor(in);
      REQUIRE(cls.variant == GR2Variant::UtrivM);
      CHECK(cls.factor_perm == std::array<int, 3>{0, 1, 2});
      REQUIRE(cls.witness.has_value());
      CHECK(change_basis(in, *cls.witness) == u);
    }
  }
}

TEST_CASE("classifier negative and non-cube verdicts") {
  CHECK(classify_gr2_tensor(catalog_make("matmul", {2})).variant == GR2Variant::NotGR2);
  CHECK(classify_gr2_tensor(two_rows_tensor()).variant == GR2Variant::NotConcise);
  auto st = classify_gr2_tensor(catalog_make("strassen", {3}));
  CHECK(st.variant == GR2Variant::SliceSpaceRank2);
  CHECK(st.bounded_axis == Axis::C);
}

TEST_CASE("a rational form inequivalent to utriv over Q is surfaced, not guessed") {
  // concise, C-slice space of bounded rank 2, but the row/column spans split:
  // equivalent to utriv over an extension field only
  Tensor3 path({3, 3, 3},
               {{0, 0, 0, 1}, {0, 1, 1, 1}, {0, 2, 2, 1}, {1, 0, 0, 1}, {2, 0, 2, 1}});
  CHECK(is_concise(path));
  auto cls = classify_gr2_tensor(path);
  CHECK(cls.variant == GR2Variant::Unresolved);
}

TEST_CASE("verify_compression") {
  CompressionWitness w11;
  w11.k = 1;
  w11.l = 1;
  w11.row_basis = RatMatrix::identity(4);
  w11.col_basis = RatMatrix::identity(4);
  CHECK(verify_compression(catalog_make("utriv", {4}), Axis::C, w11));
  CHECK(!verify_compression(catalog_make("matmul", {2}), Axis::A, w11));
  CompressionWitness w2;
  w2.k = 1;
  w2.l = 1;
  w2.row_basis = RatMatrix::identity(2);
  w2.col_basis = RatMatrix::identity(2);
  CHECK(verify_compression(catalog_make("W", {}), Axis::A, w2));
  CompressionWitness bad;
  bad.k = 1;
  bad.l = 1;
  bad.row_basis = RatMatrix::identity(3);
  bad.col_basis = RatMatrix::identity(3);
  CHECK_THROWS_AS(verify_compression(catalog_make("utriv", {4}), Axis::C, bad), Error);
}

TEST_CASE("find_compression returns verified witnesses only") {
  for (long m : {3L, 4L, 5L}) {
    auto w = find_compression(catalog_make("utriv", {m}), Axis::C, m - 1);
    REQUIRE(w.has_value());
    CHECK(w->k + w->l == 2);
    CHECK(verify_compression(catalog_make("utriv", {m}), Axis::C, *w));
    // compression of bounded rank k+l: the grid test must agree
    CHECK(bounded_rank_test(catalog_make("utriv", {m}), Axis::C, w->k + w->l).bounded);
  }
  auto tr = find_compression(two_rows_tensor(), Axis::A, 3);
  REQUIRE(tr.has_value());
  CHECK(tr->k == 2);
  CHECK(tr->l == 0);
  CHECK(!find_compression(catalog_make("matmul", {2}), Axis::A, 3).has_value());
}

TEST_CASE("scrambled compression is still found and verified") {
  Tensor3 u = catalog_make("utriv", {4});
  BasisChange g{random_invertible(4), random_invertible(4), random_invertible(4)};
  Tensor3 in = change_basis(u, g);
  auto w = find_compression(in, Axis::C, 3);
  REQUIRE(w.has_value());
  CHECK(w->k + w->l == 2);
  CHECK(verify_compression(in, Axis::C, *w));
}
