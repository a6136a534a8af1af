#include "doctest.h"
#include "f2forms/bitmatrix.hpp"
#include "f2forms/errors.hpp"
#include "f2forms/random.hpp"
#include "f2forms/subspace.hpp"
#include "oracles.hpp"

using namespace f2forms;

TEST_SUITE("gf2_core") {

TEST_CASE("bitvec basics") {
  BitVec v = BitVec::from_string("0110001");
  CHECK(v.dim() == 7);
  CHECK(v.popcount() == 3);
  CHECK(v.support() == std::vector<std::size_t>{1, 2, 6});
  CHECK(v.lowest_set() == 1);
  CHECK(v.to_string() == "0110001");
  CHECK(BitVec(5).lowest_set() == 5);
  CHECK_THROWS_AS(BitVec::from_string("01x"), FormatError);

  // Tail bits stay clear after set/flip near word boundaries.
  BitVec w(kWordBits + 3);
  w.set(kWordBits + 2);
  w.flip(kWordBits + 2);
  CHECK(w.is_zero());
  CHECK(w == BitVec(kWordBits + 3));

  CHECK(BitVec::unit(4, 1).dot(BitVec::from_string("0100")));
  CHECK_FALSE(BitVec::unit(4, 1).dot(BitVec::from_string("1011")));
  CHECK(BitVec::from_uint(5, 0b10110).to_uint() == 0b10110);
  CHECK_THROWS_AS(BitVec(3) ^= BitVec(4), ShapeError);
}

TEST_CASE("bitvec ordering") {
  CHECK(BitVec(3) < BitVec(4));
  CHECK(BitVec::from_string("010") < BitVec::from_string("100"));
  CHECK(BitVec::from_string("110") > BitVec::from_string("100"));
}

TEST_CASE("rank examples") {
  for (std::size_t n : {1, 5, 64, 65, 130}) CHECK(rank(BitMatrix::identity(n)) == n);
  CHECK(rank(BitMatrix(6, 9)) == 0);
  CHECK(rank(BitMatrix(0, 0)) == 0);
  CHECK(rank(BitMatrix::outer(BitVec::from_string("101"), BitVec::from_string("011"))) == 1);
}

TEST_CASE("rank matches the kernel-counting oracle and is transpose invariant") {
  Rng rng(11);
  for (int t = 0; t < 300; ++t) {
    const std::size_t rows = 1 + rng.below(10);
    const std::size_t cols = 1 + rng.below(10);
    const BitMatrix m = rng.matrix(rows, cols);
    CHECK(rank(m) == oracle::rank(m));
    CHECK(rank(m) == rank(m.transpose()));
  }
}

TEST_CASE("rank-nullity on random matrices") {
  Rng rng(12);
  for (int t = 0; t < 1000; ++t) {
    const std::size_t rows = 1 + rng.below(64);
    const std::size_t cols = 1 + rng.below(64);
    // Mix of full-rank and deliberately deficient matrices.
    BitMatrix m = rng.matrix(rows, cols);
    if (t % 3 == 0) {
      for (std::size_t r = 1; r < rows; r += 2) m.row(r) = m.row(r - 1);
    }
    const Subspace k = kernel_basis(m);
    CHECK(rank(m) + k.dim() == cols);
    for (const auto& v : k.basis().row_data()) CHECK(m.apply(v).is_zero());
  }
}

TEST_CASE("kernel examples") {
  CHECK(kernel_basis(BitMatrix::identity(5)).dim() == 0);
  CHECK(kernel_basis(BitMatrix(4, 4)).codim() == 0);

  const BitMatrix e1e1 = BitMatrix::outer(BitVec::unit(3, 0), BitVec::unit(3, 0));
  const Subspace k = kernel_basis(e1e1);
  CHECK(k.dim() == 2);
  for (std::uint64_t b = 0; b < 8; ++b) {
    const BitVec v = oracle::point(3, b);
    CHECK(k.contains(v) == !v.get(0));
  }
}

TEST_CASE("subspace_from_constraints examples") {
  const Subspace full = Subspace::full(4);
  CHECK(subspace_from_constraints({}, full) == full);

  std::vector<BitVec> all;
  for (std::size_t i = 0; i < 4; ++i) all.push_back(BitVec::unit(4, i));
  CHECK(subspace_from_constraints(all, full).dim() == 0);

  const std::vector<BitVec> dup{BitVec::unit(4, 0), BitVec::unit(4, 0)};
  CHECK(subspace_from_constraints(dup, full).codim() == 1);
}

TEST_CASE("constraint codim growth equals the rank of the restricted constraints") {
  Rng rng(13);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.below(20);
    const Subspace ambient = rng.subspace_of_codim(n, rng.below(n + 1));
    std::vector<BitVec> fs;
    const std::size_t count = rng.below(n + 2);
    for (std::size_t i = 0; i < count; ++i) fs.push_back(rng.vec(n));
    const Subspace cut = subspace_from_constraints(fs, ambient);
    BitMatrix restricted(count, ambient.dim());
    for (std::size_t i = 0; i < count; ++i) restricted.row(i) = ambient.restrict_functional(fs[i]);
    CHECK(cut.codim() - ambient.codim() == rank(restricted));
    for (const auto& b : cut.basis().row_data()) {
      CHECK(ambient.contains(b));
      for (const auto& f : fs) CHECK_FALSE(f.dot(b));
    }
  }
}

TEST_CASE("subspace coordinates, embedding and functionals") {
  Rng rng(14);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + rng.below(70);
    const Subspace s = rng.subspace_of_codim(n, rng.below(n));
    const BitVec c = rng.vec(s.dim());
    const BitVec v = s.embed(c);
    CHECK(s.contains(v));
    CHECK(s.coordinates(v) == c);
    const BitVec g = rng.vec(s.dim());
    const BitVec f = s.extend_functional(g);
    CHECK(s.restrict_functional(f) == g);
    CHECK(f.dot(v) == g.dot(c));
  }
  const Subspace s = Subspace::span(3, std::vector<BitVec>{BitVec::from_string("110")});
  CHECK_THROWS_AS(s.coordinates(BitVec::from_string("100")), ShapeError);
}

TEST_CASE("subspace_of_codim is exact") {
  Rng rng(15);
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::size_t d = 0; d <= n; ++d) CHECK(rng.subspace_of_codim(n, d).codim() == d);
  }
}

TEST_CASE("restrict_bilinear examples") {
  Rng rng(16);
  const BitMatrix m = rng.matrix(6, 6);
  CHECK(restrict_bilinear(m, Subspace::full(6)) == m);

  const Subspace e12 = Subspace::span(4, std::vector<BitVec>{BitVec::unit(4, 0), BitVec::unit(4, 1)});
  CHECK(restrict_bilinear(BitMatrix::identity(4), e12) == BitMatrix::identity(2));
  CHECK_THROWS_AS(restrict_bilinear(BitMatrix(3, 3), Subspace::full(4)), ShapeError);
}

TEST_CASE("restriction agrees with evaluation on the subspace") {
  Rng rng(17);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = 1 + rng.below(12);
    const BitMatrix m = rng.matrix(n, n);
    const Subspace s = rng.subspace_of_codim(n, rng.below(n + 1));
    const BitMatrix r = restrict_bilinear(m, s);
    const BitMatrix left = restrict_bilinear_left(m, s);
    for (int q = 0; q < 20; ++q) {
      const BitVec a = rng.vec(s.dim());
      const BitVec b = rng.vec(s.dim());
      const BitVec y = rng.vec(n);
      CHECK(r.bilinear(a, b) == m.bilinear(s.embed(a), s.embed(b)));
      CHECK(left.bilinear(a, y) == m.bilinear(s.embed(a), y));
    }
  }
}

TEST_CASE("solve_linear") {
  Rng rng(18);
  for (int t = 0; t < 300; ++t) {
    const std::size_t rows = 1 + rng.below(12);
    const std::size_t cols = 1 + rng.below(12);
    const BitMatrix a = rng.matrix(rows, cols);
    const BitVec b = rng.vec(rows);
    const auto x = solve_linear(a, b);
    // Consistent iff b lies in the column space.
    const Subspace cols_space = Subspace::span(rows, std::vector<BitVec>(a.transpose().row_data()));
    CHECK(x.has_value() == cols_space.contains(b));
    if (x) CHECK(a.apply(*x) == b);
  }
}

TEST_CASE("rank factorization reproduces the matrix with rank-many terms") {
  Rng rng(19);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng.below(40);
    const BitMatrix m = rng.matrix_with_min_rank(n, rng.below(n + 1));
    const RankFactorization f = rank_factorization(m);
    CHECK(f.left.size() == rank(m));
    BitMatrix sum(n, n);
    for (std::size_t i = 0; i < f.left.size(); ++i) sum ^= BitMatrix::outer(f.left[i], f.right[i]);
    CHECK(sum == m);
  }
}

TEST_CASE("rng streams are reproducible") {
  Rng a(99), b(99);
  for (int i = 0; i < 10; ++i) CHECK(a.vec(100) == b.vec(100));
  Rng c(5);
  for (int i = 0; i < 1000; ++i) CHECK(c.below(7) < 7);
}

}  // TEST_SUITE
