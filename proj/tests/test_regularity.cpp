#include <vector>

#include "doctest.h"
#include "f2forms/counterexample.hpp"
#include "f2forms/counting.hpp"
#include "f2forms/errors.hpp"
#include "f2forms/prescribed_pairs.hpp"
#include "f2forms/random.hpp"
#include "f2forms/regularity.hpp"
#include "oracles.hpp"

using namespace f2forms;

namespace {

std::vector<BilinearForm> random_bilinear(Rng& rng, std::size_t count, std::size_t n) {
  std::vector<BilinearForm> out;
  for (std::size_t i = 0; i < count; ++i) out.emplace_back(rng.matrix(n, n));
  return out;
}

BitVec bits(const char* s) { return BitVec::from_string(s); }

}  // namespace

TEST_SUITE("regularity") {

TEST_CASE("low_rank_vanishing_subspace examples") {
  CHECK(low_rank_vanishing_subspace(BilinearForm(5)).codim() == 0);
  CHECK(low_rank_vanishing_subspace(build_rho(6)).dim() == 0);

  // e1 e1^T on F_2^3: beta(x, .) = 0 exactly when x_1 = 0.
  const BilinearForm e1e1(BitMatrix::outer(BitVec::unit(3, 0), BitVec::unit(3, 0)));
  const Subspace k = low_rank_vanishing_subspace(e1e1);
  for (std::uint64_t a = 0; a < 8; ++a) {
    const BitVec x = oracle::point(3, a);
    bool vanishes = true;
    for (std::uint64_t b = 0; b < 8; ++b) vanishes = vanishes && !e1e1(x, oracle::point(3, b));
    CHECK(k.contains(x) == vanishes);
  }
}

TEST_CASE("low_rank_vanishing_subspace has codim equal to rank") {
  Rng rng(51);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng.below(30);
    const BilinearForm b(rng.matrix(n, n));
    const Subspace k = low_rank_vanishing_subspace(b);
    CHECK(k.codim() == b.rank());
    for (const auto& x : k.basis().row_data()) CHECK(b.left_functional(x).is_zero());
  }
}

TEST_CASE("regularize examples") {
  const BilinearForm rho = build_rho(10);

  // beta = rho: the lone input is dropped and expressed through rho.
  const std::vector<BilinearForm> just_rho{rho};
  const RegularityResult one = bilinear_regularize(rho, just_rho, 2);
  CHECK(one.kept.empty());
  CHECK(one.expressions.size() == 1);
  CHECK(one.expressions[0] == bits("1"));
  CHECK(one.subspace.codim() == 0);
  CHECK(audit_regularity(one, rho, just_rho).ok());

  // No inputs: nothing to do.
  const RegularityResult none = bilinear_regularize(rho, {}, 3);
  CHECK(none.kept.empty());
  CHECK(none.steps.empty());
  CHECK(none.subspace.codim() == 0);
  CHECK(audit_regularity(none, rho, {}).ok());

  // Zero input: zero combination over (beta, rho) = (1, 0).
  const std::vector<BilinearForm> zero{BilinearForm(10)};
  const RegularityResult z = bilinear_regularize(rho, zero, 2);
  CHECK(z.kept.empty());
  CHECK(z.expressions[0] == bits("0"));
  CHECK(audit_regularity(z, rho, zero).ok());
}

TEST_CASE("regularize audits on random instances") {
  Rng rng(52);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 26;
    const std::size_t r = 1 + rng.below(3);
    const std::size_t m = 2;
    const BilinearForm rho = build_rho(n);
    auto betas = random_bilinear(rng, r, n);
    // Plant low-rank structure in some inputs.
    if (t % 2 == 0) betas[0] = BilinearForm(BitMatrix::outer(rng.vec(n), rng.vec(n)));
    if (t % 3 == 0 && r > 1) betas[1] = betas[0] + rho;
    const RegularityResult res = bilinear_regularize(rho, betas, m);
    const RegularityAudit audit = audit_regularity(res, rho, betas);
    CHECK(audit.ok());
    CHECK(res.subspace.codim() <= 2 * r * m);
    CHECK(res.kept.size() + res.steps.size() == r);
    if (t % 2 == 0) CHECK(res.steps.size() >= 1);
  }
}

TEST_CASE("regularize preconditions") {
  Rng rng(53);
  const BilinearForm rho = build_rho(8);
  const auto betas = random_bilinear(rng, 2, 8);
  // (4r + 1) m = 9 m > 8 for m = 1.
  CHECK_THROWS_AS(bilinear_regularize(rho, betas, 1), PreconditionViolated);
  RegularizeOptions lax;
  lax.require_rank_hypothesis = false;
  const RegularityResult res = bilinear_regularize(rho, betas, 1, lax);
  CHECK_FALSE(res.rank_hypothesis_met);
  CHECK(audit_regularity(res, rho, betas).ok());
  // rho itself below the target cannot be regularized.
  CHECK_THROWS_AS(bilinear_regularize(BilinearForm(8), betas, 1, lax), PreconditionViolated);
  CHECK_THROWS_AS(bilinear_regularize(rho, random_bilinear(rng, 1, 7), 1, lax), ShapeError);
}

TEST_CASE("min_combination_rank") {
  CHECK(min_combination_rank(std::vector<BilinearForm>{build_rho(5)}) == 5);
  const std::vector<BilinearForm> pair{build_rho(5), build_rho(5)};
  CHECK(min_combination_rank(pair) == 0);
  Rng rng(54);
  const auto forms = random_bilinear(rng, 3, 6);
  std::size_t expected = 99;
  for (unsigned mask = 1; mask < 8; ++mask) {
    BilinearForm c(6);
    for (unsigned i = 0; i < 3; ++i) {
      if ((mask >> i) & 1U) c += forms[i];
    }
    expected = std::min(expected, oracle::rank(c.matrix()));
  }
  CHECK(min_combination_rank(forms) == expected);
}

TEST_CASE("counting examples") {
  const std::vector<BilinearForm> rho3{build_rho(3)};
  const Coset full{Subspace::full(3), BitVec(3)};
  const CountingReport rep = counting_check(rho3, full, 0.5);
  CHECK(rep.value_counts == std::vector<std::uint64_t>{36, 28});
  CHECK(rep.surjective);
  CHECK(rep.coset_size == 8);
  CHECK(rep.min_count == 28);
  CHECK(rep.epsilon_achieved == doctest::Approx(1.0 - 28.0 * 2 / 64));

  const std::vector<BilinearForm> zeros{BilinearForm(3), BilinearForm(3)};
  const CountingReport z = counting_check(zeros, full, 0.5);
  CHECK_FALSE(z.surjective);
  CHECK(z.value_counts[0] == 64);
  CHECK(z.min_count == 0);
  CHECK_FALSE(z.conclusion_holds);

  CHECK_THROWS_AS(counting_check(rho3, full, 0.0), std::invalid_argument);
  EnumOptions tiny;
  tiny.max_enum = 32;
  CHECK_THROWS_AS(counting_check(rho3, full, 0.5, tiny), BudgetExceeded);
  CHECK(counting_threshold(1, 0, 0.5) == doctest::Approx(8.0));
}

TEST_CASE("counts sum to |C|^2 and match the rank formula") {
  Rng rng(55);
  for (std::size_t n = 1; n <= 10; ++n) {
    const BilinearForm b(rng.matrix(n, n));
    const std::vector<BilinearForm> one{b};
    const CountingReport rep = counting_check(one, Coset{Subspace::full(n), BitVec(n)}, 0.5);
    const std::uint64_t total = std::uint64_t{1} << (2 * n);
    CHECK(rep.value_counts[0] + rep.value_counts[1] == total);
    // #{x : x^T M != 0} * 2^{n-1} = (1 - 2^{-rank}) 2^{2n-1}.
    const std::uint64_t ones = ((std::uint64_t{1} << n) - (std::uint64_t{1} << (n - b.rank()))) << (n - 1);
    CHECK(rep.value_counts[1] == ones);
  }
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 3 + rng.below(5);
    const auto forms = random_bilinear(rng, 1 + rng.below(3), n);
    const Coset c{rng.subspace_of_codim(n, rng.below(3)), rng.vec(n)};
    const CountingReport rep = counting_check(forms, c, 0.25);
    std::uint64_t sum = 0;
    for (auto v : rep.value_counts) sum += v;
    CHECK(sum == c.size() * c.size());
    CHECK(rep.d == c.codim());
  }
}

TEST_CASE("prescribed pairs: empty prescription") {
  const BilinearForm rho = build_rho(6);
  const PrescribedPairsResult res = solve_prescribed_pairs({}, rho, Subspace::full(6), {});
  CHECK(res.quadruple.x.is_zero());
  CHECK(res.quadruple.w.is_zero());
}

TEST_CASE("prescribed pairs: rho with one nonzero pair") {
  for (std::size_t n = 10; n <= 14; ++n) {
    const BilinearForm rho = build_rho(n);
    Prescription p;
    p[{Var::x, Var::z}] = bits("1");
    p[{Var::y, Var::w}] = bits("0");
    p[{Var::x, Var::y}] = bits("0");
    PrescribedPairsOptions opt;
    opt.seed = n;
    const PrescribedPairsResult res = solve_prescribed_pairs({}, rho, Subspace::full(n), p, opt);
    CHECK(res.matching == "xz|yw");
    CHECK(check_prescription({}, rho, p, res.quadruple));
    CHECK(rho(res.quadruple.x, res.quadruple.z));
  }
}

TEST_CASE("prescribed pairs: reversed orientation and two nonzero pairs") {
  Rng rng(56);
  const std::size_t n = 16;
  const BilinearForm rho = build_rho(n);
  const auto alphas = random_bilinear(rng, 1, n);
  Prescription p;
  p[{Var::y, Var::x}] = bits("11");
  p[{Var::z, Var::w}] = bits("10");
  p[{Var::x, Var::z}] = bits("00");
  const PrescribedPairsResult res = solve_prescribed_pairs(alphas, rho, Subspace::full(n), p);
  CHECK(res.matching == "xy|zw");
  CHECK(check_prescription(alphas, rho, p, res.quadruple));
  CHECK(alphas[0](res.quadruple.y, res.quadruple.x));
  CHECK(rho(res.quadruple.y, res.quadruple.x));
  CHECK(alphas[0](res.quadruple.z, res.quadruple.w));
  CHECK_FALSE(rho(res.quadruple.z, res.quadruple.w));
}

TEST_CASE("prescribed pairs: rejected prescriptions") {
  const BilinearForm rho = build_rho(8);
  Prescription crossing;
  crossing[{Var::x, Var::y}] = bits("1");
  crossing[{Var::x, Var::z}] = bits("1");
  CHECK_THROWS_AS(solve_prescribed_pairs({}, rho, Subspace::full(8), crossing), PreconditionViolated);

  Prescription both;
  both[{Var::x, Var::y}] = bits("1");
  both[{Var::y, Var::x}] = bits("1");
  CHECK_THROWS_AS(solve_prescribed_pairs({}, rho, Subspace::full(8), both), std::invalid_argument);

  Prescription repeat;
  repeat[{Var::x, Var::x}] = bits("1");
  CHECK_THROWS_AS(solve_prescribed_pairs({}, rho, Subspace::full(8), repeat), std::invalid_argument);

  // rho = 0 cannot take the value 1.
  Prescription one;
  one[{Var::x, Var::y}] = bits("1");
  CHECK_THROWS_AS(solve_prescribed_pairs({}, BilinearForm(4), Subspace::full(4), one), NoSolution);
}

}  // TEST_SUITE
