#include <bit>

#include "doctest.h"
#include "f2forms/counterexample.hpp"
#include "f2forms/errors.hpp"
#include "f2forms/prank.hpp"
#include "f2forms/random.hpp"
#include "oracles.hpp"

using namespace f2forms;

namespace {

// rho(a, b) rho(c, d) by direct evaluation.
bool product(const BitVec& a, const BitVec& b, const BitVec& c, const BitVec& d) {
  return a.dot(b) && c.dot(d);
}

}  // namespace

TEST_SUITE("counterexample") {

TEST_CASE("phi monomial counts") {
  CHECK(build_phi(1).weight() == 0);
  CHECK(build_phi(2).weight() == 3);
  CHECK(build_phi(4).weight() == 18);
  CHECK(build_phi(10).weight() == 135);
}

TEST_CASE("phi against its defining sum") {
  Rng rng(61);
  for (std::size_t n = 1; n <= 7; ++n) {
    const MultilinearForm phi = build_phi(n);
    for (int t = 0; t < 50; ++t) {
      const BitVec x = rng.vec(n), y = rng.vec(n), z = rng.vec(n), w = rng.vec(n);
      bool expected = false;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          const bool t1 = x.get(i) && y.get(j) && z.get(j) && w.get(i);
          const bool t2 = x.get(j) && y.get(i) && z.get(j) && w.get(i);
          const bool t3 = x.get(j) && y.get(j) && z.get(i) && w.get(i);
          expected = expected != t1 != t2 != t3;
        }
      }
      CHECK(evaluate(phi, std::vector<BitVec>{x, y, z, w}) == expected);
    }
  }
}

TEST_CASE("rho examples") {
  CHECK(build_rho(4).rank() == 4);
  CHECK(build_rho(4).matrix() == BitMatrix::identity(4));
  CHECK(build_rho(3)(BitVec::from_string("110"), BitVec::from_string("011")));
  CHECK_FALSE(build_rho(3)(BitVec::from_string("110"), BitVec::from_string("111")));
}

TEST_CASE("phi is symmetric in its first three slots") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const MultilinearForm phi = build_phi(n);
    for (const auto& pi : Permutation::all(4)) {
      if (pi(3) != 3) continue;
      CHECK(permute(phi, pi) == phi);
    }
  }
}

TEST_CASE("transposition identities") {
  for (std::size_t n = 1; n <= 8; ++n) {
    const IdentityReport r = verify_transposition_identities(n);
    CHECK(r.all());
  }
  // (1 4) by direct evaluation against P1 + P2 at n = 4.
  Rng rng(62);
  const MultilinearForm phi = build_phi(4);
  const MultilinearForm swapped = phi + permute(phi, Permutation::from_cycles(4, "(1 4)"));
  for (int t = 0; t < 300; ++t) {
    const BitVec x = rng.vec(4), y = rng.vec(4), z = rng.vec(4), w = rng.vec(4);
    const bool expected = product(x, y, z, w) != product(x, z, y, w);
    CHECK(oracle::evaluate(swapped, {x, y, z, w}) == expected);
  }
}

TEST_CASE("v-space forms evaluate as products of rho") {
  Rng rng(63);
  for (unsigned code = 0; code < 8; ++code) {
    const VSpaceElement v{{(code & 1U) != 0, (code & 2U) != 0, (code & 4U) != 0}};
    const MultilinearForm f = v_space_form(v, 3);
    for (int t = 0; t < 40; ++t) {
      const BitVec x = rng.vec(3), y = rng.vec(3), z = rng.vec(3), w = rng.vec(3);
      bool expected = false;
      if (v.lambda[0]) expected = expected != product(x, y, z, w);
      if (v.lambda[1]) expected = expected != product(x, z, y, w);
      if (v.lambda[2]) expected = expected != product(x, w, y, z);
      CHECK(evaluate(f, std::vector<BitVec>{x, y, z, w}) == expected);
    }
    CHECK(verify_certificate(f, v_space_certificate(v, 3)));
    CHECK(v_space_certificate(v, 3).size() == static_cast<std::size_t>(std::popcount(code)));
  }
}

TEST_CASE("cocycle base values") {
  const auto& g = generators();
  CHECK(cocycle(Permutation::identity(4)).is_zero());
  CHECK(cocycle(g[0]).is_zero());
  CHECK(cocycle(g[1]).is_zero());
  CHECK(cocycle(g[2]) == VSpaceElement{{true, true, false}});
  CHECK(generator_words().size() == 24);
}

TEST_CASE("cocycle identity over all 576 pairs") {
  // c(sigma * pi) = c(sigma) o pi + c(pi).
  for (const auto& sigma : Permutation::all(4)) {
    for (const auto& pi : Permutation::all(4)) {
      CHECK(cocycle(sigma * pi) == act(cocycle(sigma), pi) + cocycle(pi));
    }
  }
}

TEST_CASE("cocycle matches phi + phi o pi as forms") {
  for (std::size_t n : {2, 3, 4}) {
    const MultilinearForm phi = build_phi(n);
    for (const auto& pi : Permutation::all(4)) {
      CHECK(phi + permute(phi, pi) == v_space_form(cocycle(pi), n));
    }
  }
}

TEST_CASE("act agrees with composing forms") {
  for (unsigned code = 0; code < 8; ++code) {
    const VSpaceElement v{{(code & 1U) != 0, (code & 2U) != 0, (code & 4U) != 0}};
    for (const auto& pi : Permutation::all(4)) {
      CHECK(v_space_form(act(v, pi), 3) == permute(v_space_form(v, 3), pi));
    }
  }
}

TEST_CASE("all 24 certificates verify with at most 3 summands") {
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto certs = approx_symmetry_certificates(n);
    REQUIRE(certs.size() == 24);
    const MultilinearForm phi = build_phi(n);
    for (const auto& c : certs) {
      CHECK(c.certificate.size() <= 3);
      CHECK(verify_certificate(phi + permute(phi, c.pi), c.certificate));
    }
  }
  CHECK_THROWS_AS(approx_symmetry_certificates(0), std::invalid_argument);
}

TEST_CASE("canonical representative") {
  const VSpaceElement v{{true, true, false}};
  CHECK(canonical_representative(v, 4) == v);
  CHECK(canonical_representative(v, 1) == VSpaceElement{});
  CHECK(canonical_representative(VSpaceElement{{true, true, true}}, 1) == VSpaceElement{{false, false, true}});
}

TEST_CASE("v_space_membership") {
  CHECK(v_space_membership(MultilinearForm(4, 3)) == VSpaceElement{});
  const MultilinearForm phi = build_phi(3);
  CHECK(v_space_membership(phi + permute(phi, Permutation::from_cycles(4, "(1 4)"))) ==
        VSpaceElement{{true, true, false}});
  CHECK_FALSE(v_space_membership(build_phi(2)).has_value());
  CHECK_THROWS_AS(v_space_membership(MultilinearForm(3, 3)), ShapeError);
}

TEST_CASE("analytic rank of phi + phi o pi is at most its partition rank bound") {
  for (std::size_t n = 2; n <= 5; ++n) {
    const MultilinearForm phi = build_phi(n);
    for (const auto& pi : Permutation::all(4)) {
      const MultilinearForm d = phi + permute(phi, pi);
      CHECK(analytic_rank(d) <= 3.0 + 1e-12);
    }
  }
}

}  // TEST_SUITE
