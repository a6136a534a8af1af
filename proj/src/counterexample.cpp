#include "f2forms/counterexample.hpp"

#include <deque>
#include <map>
#include <stdexcept>

#include "f2forms/errors.hpp"

namespace f2forms {

MultilinearForm build_phi(std::size_t n) {
  MultilinearForm phi(4, n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      phi.set_coeff(std::array{i, j, j, i});
      phi.set_coeff(std::array{j, i, j, i});
      phi.set_coeff(std::array{j, j, i, i});
    }
  }
  return phi;
}

BilinearForm build_rho(std::size_t n) { return BilinearForm(BitMatrix::identity(n)); }

VSpaceElement& VSpaceElement::operator+=(const VSpaceElement& other) {
  for (std::size_t t = 0; t < 3; ++t) lambda[t] = lambda[t] != other.lambda[t];
  return *this;
}

namespace {

// Pairing t pairs slot 0 with slot t + 1.
std::size_t partner(std::size_t pairing, std::size_t slot) {
  const std::size_t mate = pairing + 1;
  if (slot == 0) return mate;
  if (slot == mate) return 0;
  // The other two slots pair with each other.
  for (std::size_t s = 1; s < 4; ++s) {
    if (s != mate && s != slot) return s;
  }
  throw std::logic_error("partner: bad slot");
}

}  // namespace

VSpaceElement act(const VSpaceElement& v, const Permutation& pi) {
  if (pi.arity() != 4) throw ShapeError("act: permutation must act on 4 slots");
  const Permutation inv = pi.inverse();
  VSpaceElement out;
  for (std::size_t t = 0; t < 3; ++t) {
    if (!v.lambda[t]) continue;
    // pi^{-1}(P) pairs slot 0 with pi^{-1}(partner of pi(0)).
    const std::size_t mate = inv(partner(t, pi(0)));
    out.lambda[mate - 1] = !out.lambda[mate - 1];
  }
  return out;
}

PartitionCertificate v_space_certificate(const VSpaceElement& v, std::size_t n) {
  PartitionCertificate c;
  c.arity = 4;
  c.dim = n;
  const MultilinearForm rho = build_rho(n).to_form();
  for (std::size_t t = 0; t < 3; ++t) {
    if (v.lambda[t]) c.summands.push_back({{0, t + 1}, rho, rho});
  }
  return c;
}

MultilinearForm v_space_form(const VSpaceElement& v, std::size_t n) {
  return certificate_to_form(v_space_certificate(v, n));
}

VSpaceElement canonical_representative(const VSpaceElement& v, std::size_t n) {
  if (n != 1) return v;
  const bool parity = (v.lambda[0] != v.lambda[1]) != v.lambda[2];
  VSpaceElement out;
  out.lambda[2] = parity;
  return out;
}

IdentityReport verify_transposition_identities(std::size_t n) {
  const MultilinearForm phi = build_phi(n);
  const auto& gens = generators();
  IdentityReport report;
  report.n = n;
  report.swap12 = (phi + permute(phi, gens[0])).is_zero();
  report.swap13 = (phi + permute(phi, gens[1])).is_zero();
  const VSpaceElement p1_plus_p2{{true, true, false}};
  report.swap14 = verify_certificate(phi + permute(phi, gens[2]), v_space_certificate(p1_plus_p2, n));
  return report;
}

const std::array<Permutation, 3>& generators() {
  static const std::array<Permutation, 3> gens{
      Permutation::transposition(4, 0, 1),
      Permutation::transposition(4, 0, 2),
      Permutation::transposition(4, 0, 3),
  };
  return gens;
}

const std::vector<std::pair<Permutation, std::vector<std::size_t>>>& generator_words() {
  static const auto table = [] {
    std::map<Permutation, std::vector<std::size_t>> words;
    std::deque<Permutation> queue;
    words[Permutation::identity(4)] = {};
    queue.push_back(Permutation::identity(4));
    while (!queue.empty()) {
      const Permutation p = queue.front();
      queue.pop_front();
      for (std::size_t g = 0; g < 3; ++g) {
        const Permutation next = p * generators()[g];
        if (words.contains(next)) continue;
        auto word = words[p];
        word.push_back(g);
        words.emplace(next, std::move(word));
        queue.push_back(next);
      }
    }
    std::vector<std::pair<Permutation, std::vector<std::size_t>>> out;
    for (const auto& pi : Permutation::all(4)) out.emplace_back(pi, words.at(pi));
    return out;
  }();
  return table;
}

VSpaceElement cocycle(const Permutation& pi) {
  // c(t) for the generators: (1 2) and (1 3) fix phi, (1 4) gives P1 + P2.
  static const std::array<VSpaceElement, 3> base{
      VSpaceElement{}, VSpaceElement{}, VSpaceElement{{true, true, false}}};
  for (const auto& [p, word] : generator_words()) {
    if (p != pi) continue;
    VSpaceElement c;
    for (std::size_t g : word) c = act(c, generators()[g]) + base[g];
    return c;
  }
  throw ShapeError("cocycle: permutation must act on 4 slots");
}

std::vector<SymmetryCertificate> approx_symmetry_certificates(std::size_t n) {
  if (n == 0) throw std::invalid_argument("approx_symmetry_certificates: n must be positive");
  const MultilinearForm phi = build_phi(n);
  std::vector<SymmetryCertificate> out;
  for (const auto& [pi, word] : generator_words()) {
    SymmetryCertificate entry{pi, word, canonical_representative(cocycle(pi), n), {}};
    entry.certificate = v_space_certificate(entry.element, n);
    if (entry.certificate.size() > 3 || !verify_certificate(phi + permute(phi, pi), entry.certificate)) {
      throw std::logic_error("approx_symmetry_certificates: certificate for " + pi.to_cycles() +
                             " does not verify at n = " + std::to_string(n));
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::optional<VSpaceElement> v_space_membership(const MultilinearForm& form) {
  if (form.arity() != 4) throw ShapeError("v_space_membership: arity must be 4");
  // Lexicographic order of (lambda1, lambda2, lambda3).
  for (unsigned code = 0; code < 8; ++code) {
    const VSpaceElement v{{(code & 4U) != 0, (code & 2U) != 0, (code & 1U) != 0}};
    if (v_space_form(v, form.dim()) == form) return v;
  }
  return std::nullopt;
}

}  // namespace f2forms
