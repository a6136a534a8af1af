#include "f2forms/prescribed_pairs.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

#include "f2forms/errors.hpp"
#include "f2forms/random.hpp"
#include "f2forms/regularity.hpp"

namespace f2forms {

char var_name(Var v) { return "xyzw"[static_cast<int>(v)]; }

const BitVec& Quadruple::operator[](Var v) const {
  switch (v) {
    case Var::x: return x;
    case Var::y: return y;
    case Var::z: return z;
    case Var::w: return w;
  }
  throw std::logic_error("Quadruple: bad variable");
}

BitVec& Quadruple::operator[](Var v) {
  return const_cast<BitVec&>(static_cast<const Quadruple&>(*this)[v]);
}

namespace {

using OrderedPair = std::pair<Var, Var>;

bool same_unordered(OrderedPair a, OrderedPair b) {
  return (a.first == b.first && a.second == b.second) || (a.first == b.second && a.second == b.first);
}

constexpr std::array<std::array<OrderedPair, 2>, 3> kMatchings{{
    {{{Var::x, Var::y}, {Var::z, Var::w}}},
    {{{Var::x, Var::z}, {Var::y, Var::w}}},
    {{{Var::x, Var::w}, {Var::y, Var::z}}},
}};

// A matched pair oriented as prescribed, with its target (zero if absent).
struct Stage {
  OrderedPair vars;
  BitVec target;
};

class PairFinder {
 public:
  PairFinder(std::span<const BitMatrix> forms, Rng& rng, const PrescribedPairsOptions& options,
             std::uint64_t& samples)
      : forms_(forms), rng_(rng), options_(options), samples_(samples) {}

  // Some (a, b) in `sub` x `sub` with a^T F_f b = target_f for every f.
  std::optional<std::pair<BitVec, BitVec>> find(const Subspace& sub, const BitVec& target) {
    const std::size_t k = sub.dim();
    std::vector<BitMatrix> local;
    for (const auto& f : forms_) local.push_back(restrict_bilinear(f, sub));
    auto attempt = [&](const BitVec& a) -> std::optional<std::pair<BitVec, BitVec>> {
      BitMatrix system(local.size(), k);
      for (std::size_t f = 0; f < local.size(); ++f) system.row(f) = local[f].apply_left(a);
      auto b = solve_linear(system, target);
      if (!b) return std::nullopt;
      return std::make_pair(sub.embed(a), sub.embed(*b));
    };
    for (std::uint64_t t = 0; t < options_.retry_cap; ++t) {
      ++samples_;
      if (auto hit = attempt(rng_.vec(k))) return hit;
    }
    if (k <= options_.exhaustive_dim) {
      for (std::uint64_t c = 0; c < (std::uint64_t{1} << k); ++c) {
        ++samples_;
        if (auto hit = attempt(BitVec::from_uint(k, c))) return hit;
      }
    }
    return std::nullopt;
  }

 private:
  std::span<const BitMatrix> forms_;
  Rng& rng_;
  const PrescribedPairsOptions& options_;
  std::uint64_t& samples_;
};

}  // namespace

bool check_prescription(std::span<const BilinearForm> alphas, const BilinearForm& rho,
                        const Prescription& prescription, const Quadruple& q) {
  const std::size_t s = alphas.size();
  for (const auto& [vars, target] : prescription) {
    const BitVec& u = q[vars.first];
    const BitVec& v = q[vars.second];
    for (std::size_t i = 0; i < s; ++i) {
      if (alphas[i](u, v) != target.get(i)) return false;
    }
    if (rho(u, v) != target.get(s)) return false;
  }
  return true;
}

PrescribedPairsResult solve_prescribed_pairs(std::span<const BilinearForm> alphas, const BilinearForm& rho,
                                             const Subspace& space, const Prescription& prescription,
                                             const PrescribedPairsOptions& options) {
  const std::size_t n = rho.dim();
  const std::size_t s = alphas.size();
  if (space.ambient_dim() != n) throw ShapeError("solve_prescribed_pairs: space dimension mismatch");
  for (const auto& a : alphas) {
    if (a.dim() != n) throw ShapeError("solve_prescribed_pairs: form dimension mismatch");
  }
  for (const auto& [vars, target] : prescription) {
    if (vars.first == vars.second) throw std::invalid_argument("solve_prescribed_pairs: pair repeats a variable");
    if (target.dim() != s + 1) throw ShapeError("solve_prescribed_pairs: target length must be s + 1");
    if (prescription.contains({vars.second, vars.first})) {
      throw std::invalid_argument("solve_prescribed_pairs: both orientations of a pair prescribed");
    }
  }

  PrescribedPairsResult result;
  std::vector<BilinearForm> family(alphas.begin(), alphas.end());
  family.push_back(rho);
  std::vector<BilinearForm> on_space;
  for (const auto& f : family) on_space.push_back(f.restricted(space));
  result.min_rank = min_combination_rank(on_space);
  const std::size_t lin = s + 1;
  const std::size_t quad = s * s + s + 1;
  result.thresholds = {{{"40(s+1)", 40 * lin, false},
                        {"100(s^2+s+1)", 100 * quad, false},
                        {"200(s^2+s+1)", 200 * quad, false},
                        {"300(s^2+s+1)", 300 * quad, false}}};
  for (auto& t : result.thresholds) t.met = result.min_rank >= t.value;

  // Pick the first pairing that contains every nonzero prescription.
  std::optional<std::size_t> chosen;
  for (std::size_t p = 0; p < kMatchings.size() && !chosen; ++p) {
    bool fits = true;
    for (const auto& [vars, target] : prescription) {
      if (target.is_zero()) continue;
      fits = fits && (same_unordered(vars, kMatchings[p][0]) || same_unordered(vars, kMatchings[p][1]));
    }
    if (fits) chosen = p;
  }
  if (!chosen) {
    throw PreconditionViolated("solve_prescribed_pairs: nonzero prescriptions do not fit one pairing");
  }

  std::array<Stage, 2> stages;
  for (std::size_t t = 0; t < 2; ++t) {
    const OrderedPair natural = kMatchings[*chosen][t];
    stages[t] = {natural, BitVec(s + 1)};
    for (const auto& [vars, target] : prescription) {
      if (same_unordered(vars, natural)) stages[t] = {vars, target};
    }
  }
  result.matching = std::string{var_name(kMatchings[*chosen][0].first), var_name(kMatchings[*chosen][0].second),
                                '|', var_name(kMatchings[*chosen][1].first),
                                var_name(kMatchings[*chosen][1].second)};

  std::vector<BitMatrix> matrices;
  for (const auto& f : family) matrices.push_back(f.matrix());
  Rng rng(options.seed);
  PairFinder finder(matrices, rng, options, result.samples);

  Quadruple q{BitVec(n), BitVec(n), BitVec(n), BitVec(n)};
  bool done = false;
  for (std::size_t restart = 0; restart <= options.outer_retries && !done; ++restart) {
    result.restarts = restart;
    BitVec a(n), b(n);
    if (!stages[0].target.is_zero()) {
      auto first = finder.find(space, stages[0].target);
      if (!first) throw NoSolution("solve_prescribed_pairs: no first pair in the space");
      std::tie(a, b) = *first;
    }
    BitVec c(n), d(n);
    if (!stages[1].target.is_zero()) {
      std::vector<BitVec> cuts;
      for (const auto& f : family) {
        for (const BitVec* v : {&a, &b}) {
          cuts.push_back(f.left_functional(*v));
          cuts.push_back(f.right_functional(*v));
        }
      }
      const Subspace cut = subspace_from_constraints(cuts, space);
      auto second = finder.find(cut, stages[1].target);
      if (!second) {
        // A deterministic first stage would only repeat itself.
        if (stages[0].target.is_zero()) break;
        continue;
      }
      std::tie(c, d) = *second;
    }
    q[stages[0].vars.first] = a;
    q[stages[0].vars.second] = b;
    q[stages[1].vars.first] = c;
    q[stages[1].vars.second] = d;
    done = true;
  }
  if (!done) throw NoSolution("solve_prescribed_pairs: second pair not found after restarts");
  if (!check_prescription(alphas, rho, prescription, q)) {
    throw std::logic_error("solve_prescribed_pairs: returned quadruple fails re-evaluation");
  }
  result.quadruple = std::move(q);
  return result;
}

}  // namespace f2forms
