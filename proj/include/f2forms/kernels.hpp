#pragma once

// Exhaustive enumeration kernels. Each kernel exists twice: a plain serial
// reference and an OpenMP version. Both return identical results for every
// worker count; the tests hold them to that and bench/ compares their speed.

#include <cstdint>
#include <span>
#include <vector>

#include "f2forms/bitmatrix.hpp"
#include "f2forms/bitvec.hpp"
#include "f2forms/multilinear_form.hpp"
#include "f2forms/subspace.hpp"

namespace f2forms::kernels {

/// Marker for unreached entries of an oracle distance table.
inline constexpr std::uint8_t kUnreached = 0xFF;

namespace serial {

/// Number of (x_1, ..., x_{k-1}) in (F_2^n)^{k-1} for which the linear form
/// form(x_1, ..., x_{k-1}, .) vanishes identically. Arity >= 1.
std::uint64_t zero_contraction_count(const MultilinearForm& form);

/// counts[v] = #{(x, y) in C x C : (x^T M_i y)_i = v}, C = shift + subspace,
/// value vectors packed with bit i for form i.
std::vector<std::uint64_t> count_values(std::span<const BitMatrix> forms, const Subspace& subspace,
                                        const BitVec& shift);

/// For every f in frontier and g in generators: if table[f ^ g] is
/// unreached, set it to `label`.
void expand_layer(std::span<const std::uint64_t> frontier, std::span<const std::uint64_t> generators,
                  std::vector<std::uint8_t>& table, std::uint8_t label);

}  // namespace serial

namespace parallel {

/// workers <= 0 selects the OpenMP default.
std::uint64_t zero_contraction_count(const MultilinearForm& form, int workers = 0);

std::vector<std::uint64_t> count_values(std::span<const BitMatrix> forms, const Subspace& subspace,
                                        const BitVec& shift, int workers = 0);

void expand_layer(std::span<const std::uint64_t> frontier, std::span<const std::uint64_t> generators,
                  std::vector<std::uint8_t>& table, std::uint8_t label, int workers = 0);

}  // namespace parallel

int resolve_workers(int workers);

}  // namespace f2forms::kernels
