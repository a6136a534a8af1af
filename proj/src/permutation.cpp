#include "f2forms/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "f2forms/errors.hpp"

namespace f2forms {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t v : images_) {
    if (v >= images_.size() || seen[v]) throw ShapeError("Permutation: images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t arity) {
  std::vector<std::size_t> images(arity);
  std::iota(images.begin(), images.end(), std::size_t{0});
  return Permutation(std::move(images));
}

Permutation Permutation::transposition(std::size_t arity, std::size_t a, std::size_t b) {
  Permutation p = identity(arity);
  if (a >= arity || b >= arity) throw ShapeError("Permutation::transposition: point out of range");
  std::swap(p.images_[a], p.images_[b]);
  return p;
}

Permutation Permutation::from_cycles(std::size_t arity, std::string_view cycles) {
  Permutation p = identity(arity);
  std::vector<std::size_t> cycle;
  bool open = false;
  std::size_t i = 0;
  auto close_cycle = [&] {
    std::vector<bool> used(arity, false);
    for (std::size_t v : cycle) {
      if (used[v]) throw FormatError("Permutation::from_cycles: repeated point in a cycle");
      used[v] = true;
    }
    Permutation c = identity(arity);
    for (std::size_t j = 0; j < cycle.size(); ++j) {
      c.images_[cycle[j]] = cycle[(j + 1) % cycle.size()];
    }
    // Cycles written left to right compose right to left, as usual.
    p = p * c;
    cycle.clear();
  };
  while (i < cycles.size()) {
    const char ch = cycles[i];
    if (ch == '(') {
      if (open) throw FormatError("Permutation::from_cycles: nested '('");
      open = true;
      ++i;
    } else if (ch == ')') {
      if (!open) throw FormatError("Permutation::from_cycles: unmatched ')'");
      open = false;
      close_cycle();
      ++i;
    } else if (ch == ' ' || ch == ',') {
      ++i;
    } else if (ch >= '0' && ch <= '9') {
      if (!open) throw FormatError("Permutation::from_cycles: point outside a cycle");
      std::size_t v = 0;
      while (i < cycles.size() && cycles[i] >= '0' && cycles[i] <= '9') {
        v = v * 10 + static_cast<std::size_t>(cycles[i] - '0');
        ++i;
      }
      if (v == 0 || v > arity) throw FormatError("Permutation::from_cycles: point out of range");
      cycle.push_back(v - 1);
    } else {
      throw FormatError("Permutation::from_cycles: unexpected character");
    }
  }
  if (open) throw FormatError("Permutation::from_cycles: unterminated cycle");
  return p;
}

std::vector<Permutation> Permutation::all(std::size_t arity) {
  std::vector<std::size_t> images(arity);
  std::iota(images.begin(), images.end(), std::size_t{0});
  std::vector<Permutation> out;
  do {
    out.emplace_back(images);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::string Permutation::to_cycles() const {
  std::string out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start] || images_[start] == start) continue;
    out += '(';
    std::size_t v = start;
    bool first = true;
    while (!seen[v]) {
      seen[v] = true;
      if (!first) out += ' ';
      out += std::to_string(v + 1);
      first = false;
      v = images_[v];
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& s, const Permutation& p) {
  if (s.arity() != p.arity()) throw ShapeError("Permutation: arity mismatch");
  std::vector<std::size_t> images(p.arity());
  for (std::size_t i = 0; i < p.arity(); ++i) images[i] = s.images_[p.images_[i]];
  return Permutation(std::move(images));
}

}  // namespace f2forms
