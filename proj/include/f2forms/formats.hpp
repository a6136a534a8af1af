#pragma once

// Text formats for forms and partition-rank certificates. Both are JSON
// documents written in a canonical layout, so parse -> write reproduces a
// written file byte for byte.
//
// Sparse form:
//   {"arity": k, "dim": n, "monomials": [[i_1, ..., i_k], ...]}
// with 1-based indices listing the coefficients equal to one, in
// lexicographic order. Unlisted tuples are zero; duplicates are an error.
//
// Certificate:
//   {"arity": k, "dim": n, "summands": [{"axes": [...], "left": <form>, "right": <form>}, ...]}
// with 1-based sorted axes; `right` lives on the complementary axes.

#include <filesystem>
#include <string>
#include <string_view>

#include "f2forms/multilinear_form.hpp"
#include "f2forms/prank.hpp"

namespace f2forms {

std::string write_sparse_form(const MultilinearForm& form);
/// Single-line variant used when a form is nested inside another document.
std::string write_sparse_form_inline(const MultilinearForm& form);
MultilinearForm parse_sparse_form(std::string_view text);

std::string write_certificate(const PartitionCertificate& certificate);
PartitionCertificate parse_certificate(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace f2forms
