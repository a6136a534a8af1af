#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>

#include "f2forms/bilinear_form.hpp"
#include "f2forms/subspace.hpp"

namespace f2forms {

enum class Var { x = 0, y = 1, z = 2, w = 3 };

char var_name(Var v);

/// Ordered variable pair -> target vector of length s + 1: bit i is the value
/// of alpha_i on the pair, bit s the value of rho. At most one orientation of
/// each unordered pair may appear.
using Prescription = std::map<std::pair<Var, Var>, BitVec>;

struct Quadruple {
  BitVec x, y, z, w;

  const BitVec& operator[](Var v) const;
  BitVec& operator[](Var v);
};

struct ThresholdStatus {
  std::string name;
  std::size_t value = 0;
  bool met = false;
};

struct PrescribedPairsOptions {
  std::uint64_t seed = 0;
  std::uint64_t retry_cap = std::uint64_t{1} << 16;
  /// Exhaustive scan once random sampling fails on a space of at most
  /// 2^exhaustive_dim points.
  std::size_t exhaustive_dim = 20;
  /// First-stage restarts allowed when the second stage finds nothing.
  std::size_t outer_retries = 64;
};

struct PrescribedPairsResult {
  Quadruple quadruple;
  /// The pairing used, e.g. "xz|yw".
  std::string matching;
  /// Least rank of a nonzero combination of the alphas and rho on the space.
  std::size_t min_rank = 0;
  /// 40(s+1), 100(s^2+s+1), 200(s^2+s+1), 300(s^2+s+1) against min_rank.
  std::array<ThresholdStatus, 4> thresholds;
  std::uint64_t samples = 0;
  std::size_t restarts = 0;
};

/// Finds x, y, z, w in `space` with every prescribed pair taking its target.
///
/// The nonzero prescriptions must lie inside one of the pairings xy|zw,
/// xz|yw, xw|yz (tried in that order); pairs of the pairing with no nonzero
/// target are set to (0, 0). The first pair (a, b) is found by sampling a
/// and solving the linear system for b. Then U~ = {u in space : f(a, u) =
/// f(u, a) = f(b, u) = f(u, b) = 0 for f in alphas and rho}, which zeroes
/// every cross pair, and the second pair is found in U~ the same way.
///
/// Throws NoSolution when the search is exhausted and PreconditionViolated
/// for prescriptions outside every pairing.
PrescribedPairsResult solve_prescribed_pairs(std::span<const BilinearForm> alphas, const BilinearForm& rho,
                                             const Subspace& space, const Prescription& prescription,
                                             const PrescribedPairsOptions& options = {});

/// Direct evaluation of every prescribed value.
bool check_prescription(std::span<const BilinearForm> alphas, const BilinearForm& rho,
                        const Prescription& prescription, const Quadruple& q);

}  // namespace f2forms
