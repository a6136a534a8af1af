#pragma once

// The 4-linear form
//   phi(x, y, z, w) = sum_{i<j} x_i y_j z_j w_i + x_j y_i z_j w_i + x_j y_j z_i w_i
// and rho(x, y) = sum_i x_i y_i. phi is symmetric in x, y, z, and every
// phi + phi o pi lies in the 3-dimensional space V spanned by
//   P1 = rho(x,y) rho(z,w),  P2 = rho(x,z) rho(y,w),  P3 = rho(x,w) rho(y,z),
// so phi + phi o pi has partition rank at most 3 for every pi.

#include <array>
#include <optional>
#include <vector>

#include "f2forms/bilinear_form.hpp"
#include "f2forms/multilinear_form.hpp"
#include "f2forms/permutation.hpp"
#include "f2forms/prank.hpp"

namespace f2forms {

MultilinearForm build_phi(std::size_t n);
BilinearForm build_rho(std::size_t n);

/// Coefficients of P1, P2, P3.
struct VSpaceElement {
  std::array<bool, 3> lambda{};

  bool is_zero() const { return !lambda[0] && !lambda[1] && !lambda[2]; }
  VSpaceElement& operator+=(const VSpaceElement& other);
  friend VSpaceElement operator+(VSpaceElement a, const VSpaceElement& b) { return a += b; }
  friend bool operator==(const VSpaceElement&, const VSpaceElement&) = default;
  friend auto operator<=>(const VSpaceElement&, const VSpaceElement&) = default;
};

/// The element whose form is (form of v) o pi. Pi acts on pairings of the
/// four slots: P o pi is the pairing pi^{-1}(P).
VSpaceElement act(const VSpaceElement& v, const Permutation& pi);

/// Summands {1, partner} x rho x rho for each nonzero coefficient, in the
/// order P1, P2, P3.
PartitionCertificate v_space_certificate(const VSpaceElement& v, std::size_t n);
MultilinearForm v_space_form(const VSpaceElement& v, std::size_t n);

/// At n = 1 all three products coincide; only the parity of v matters and
/// this returns the lexicographically least triple with that parity. For
/// n >= 2 it returns v unchanged.
VSpaceElement canonical_representative(const VSpaceElement& v, std::size_t n);

struct IdentityReport {
  std::size_t n = 0;
  bool swap12 = false;  // phi + phi o (1 2) = 0
  bool swap13 = false;  // phi + phi o (1 3) = 0
  bool swap14 = false;  // phi + phi o (1 4) = P1 + P2
  bool all() const { return swap12 && swap13 && swap14; }
};

IdentityReport verify_transposition_identities(std::size_t n);

/// The generators (1 2), (1 3), (1 4) as 0-based permutations of 4 slots.
const std::array<Permutation, 3>& generators();

/// For each permutation of 4 slots (lexicographic order), the shortest word
/// in the generators whose product t_1 * ... * t_r equals it, ties broken by
/// generator order. Values are generator indices 0..2.
const std::vector<std::pair<Permutation, std::vector<std::size_t>>>& generator_words();

/// phi + phi o pi as an element of V, pushed through the generator word of
/// pi: starting from zero, each letter t maps c to (c o t) + c(t).
VSpaceElement cocycle(const Permutation& pi);

struct SymmetryCertificate {
  Permutation pi;
  std::vector<std::size_t> word;
  VSpaceElement element;
  PartitionCertificate certificate;
};

/// Certificates of partition rank <= 3 for phi + phi o pi, all 24 pi, each
/// checked against the coefficient tensor before returning. Throws
/// std::logic_error if any check fails.
std::vector<SymmetryCertificate> approx_symmetry_certificates(std::size_t n);

/// The triple realizing `form` if it lies in V (compared against all 8
/// members), otherwise nothing.
std::optional<VSpaceElement> v_space_membership(const MultilinearForm& form);

}  // namespace f2forms
