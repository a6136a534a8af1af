#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace f2forms {

/// Permutation of the argument slots {0, ..., k-1} (printed 1-based in cycle
/// notation). Product is composition: (s * p)(i) = s(p(i)).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t arity);
  static Permutation transposition(std::size_t arity, std::size_t a, std::size_t b);
  /// Parses cycle notation with 1-based points, e.g. "(1 2 3)(4)" or "()".
  static Permutation from_cycles(std::size_t arity, std::string_view cycles);
  /// All arity! permutations in lexicographic order of their image arrays.
  static std::vector<Permutation> all(std::size_t arity);

  std::size_t arity() const { return images_.size(); }
  std::size_t operator()(std::size_t i) const { return images_[i]; }
  const std::vector<std::size_t>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  std::string to_cycles() const;

  friend Permutation operator*(const Permutation& s, const Permutation& p);
  friend bool operator==(const Permutation& a, const Permutation& b) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) = default;

 private:
  std::vector<std::size_t> images_;
};

}  // namespace f2forms
