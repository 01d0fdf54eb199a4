#include <doctest.h>

#include "grank/prime_field.hpp"
#include "grank/rat_matrix.hpp"

using namespace grank;

namespace {

FpMatrix make(const PrimeField& f, std::size_t r, std::size_t c,
              std::initializer_list<int> vals) {
  FpMatrix m(f, r, c);
  auto it = vals.begin();
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = f.reduce(*it++);
  return m;
}

}  // namespace

TEST_CASE("prime field construction validates primality") {
  CHECK_NOTHROW(PrimeField(2));
  CHECK_NOTHROW(PrimeField(2147483647));
  CHECK_THROWS_AS(PrimeField(1), Error);
  CHECK_THROWS_AS(PrimeField(9), Error);
  CHECK_THROWS_AS(PrimeField(1000000), Error);
}

TEST_CASE("field arithmetic basics") {
  PrimeField f(7);
  CHECK(f.add(5, 4) == 2);
  CHECK(f.sub(2, 5) == 4);
  CHECK(f.mul(3, 5) == 1);
  CHECK(f.inv(3) == 5);
  CHECK(f.reduce(-1) == 6);
  for (uint32_t a = 1; a < 7; ++a) CHECK(f.mul(a, f.inv(a)) == 1);
}

TEST_CASE("matrix rank over F_p") {
  PrimeField f5(5);
  FpMatrix id(f5, 4, 4);
  for (int i = 0; i < 4; ++i) id.at(i, i) = 1;
  CHECK(id.rank() == 4);

  PrimeField f3(3);
  CHECK(make(f3, 2, 2, {1, 0, 0, 0}).rank() == 1);

  PrimeField f2(2);
  CHECK(make(f2, 3, 3, {2, 2, 2, 2, 2, 2, 2, 2, 2}).rank() == 0);
}

TEST_CASE("left kernel dimension") {
  PrimeField f5(5);
  FpMatrix id(f5, 4, 4);
  for (int i = 0; i < 4; ++i) id.at(i, i) = 1;
  CHECK(id.left_kernel_dim() == 0);
  FpMatrix z(f5, 3, 5);
  CHECK(z.left_kernel_dim() == 3);
  CHECK(make(f5, 2, 2, {0, 1, 1, 0}).left_kernel_dim() == 0);
}

TEST_CASE("rank equals rank of transpose, all 2x3 matrices over F_2") {
  PrimeField f(2);
  for (int bits = 0; bits < 64; ++bits) {
    FpMatrix m(f, 2, 3);
    for (int q = 0; q < 6; ++q) m.at(q / 3, q % 3) = (bits >> q) & 1;
    CHECK(m.rank() == m.transposed().rank());
  }
}

TEST_CASE("rank + left kernel dim = rows (random)") {
  PrimeField f(11);
  uint64_t state = 42;
  auto rnd = [&]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<uint32_t>((state >> 33) % 11);
  };
  for (int trial = 0; trial < 50; ++trial) {
    FpMatrix m(f, 4, 6);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 6; ++j) m.at(i, j) = rnd();
    CHECK(m.rank() + m.left_kernel_dim() == 4);
  }
}

TEST_CASE("mod-p rank is at most the rational rank, equal for most p") {
  uint64_t state = 7;
  auto rnd = [&]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return static_cast<int>((state >> 33) % 9) - 4;
  };
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Int> ints(12);
    for (auto& v : ints) v = rnd();
    const std::size_t rq = int_rank(ints, 3, 4);
    const uint32_t primes[] = {2, 3, 5, 7, 101, 1009};
    for (uint32_t p : primes) {
      PrimeField f(p);
      FpMatrix m(f, 3, 4);
      for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 4; ++j)
          m.at(i, j) = f.reduce(ints[i * 4 + j].convert_to<int64_t>());
      const std::size_t rp = m.rank();
      CHECK(rp <= rq);
      // entries <= 4 in magnitude keep every nonzero minor below 1009, so the
      // rank cannot drop at p = 1009
      if (p == 1009) CHECK(rp == rq);
    }
  }
}

TEST_CASE("rational matrix kernel and inverse") {
  RatMatrix m(2, 2);
  m.at(0, 0) = 0; m.at(0, 1) = 1; m.at(1, 0) = 1; m.at(1, 1) = 0;
  CHECK(rat_rank(m) == 2);
  CHECK(rat_left_kernel_dim(m) == 0);
  auto inv = rat_inverse(m);
  CHECK((inv * m) == RatMatrix::identity(2));

  RatMatrix s(2, 2);
  s.at(0, 0) = 1; s.at(0, 1) = 2; s.at(1, 0) = 2; s.at(1, 1) = 4;
  CHECK(rat_rank(s) == 1);
  CHECK(rat_nullspace(s).size() == 1);
  CHECK_THROWS_AS(rat_inverse(s), Error);
}

TEST_CASE("bareiss integer rank") {
  std::vector<Int> id{1, 0, 0, 0, 1, 0, 0, 0, 1};
  CHECK(int_rank(id, 3, 3) == 3);
  std::vector<Int> dep{1, 2, 3, 2, 4, 6, 1, 1, 1};
  CHECK(int_rank(dep, 3, 3) == 2);
  std::vector<Int> z(15, 0);
  CHECK(int_rank(z, 3, 5) == 0);
}
