#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace f2forms {

/// Exact value numerator / 2^exponent, kept normalized (numerator odd or
/// exponent zero) so that == is value equality.
class Dyadic {
 public:
  Dyadic() = default;
  Dyadic(std::int64_t numerator, unsigned exponent);

  static Dyadic pow2(int e);  // 2^e, e may be negative

  std::int64_t numerator() const { return numerator_; }
  unsigned exponent() const { return exponent_; }
  double to_double() const;
  /// "1", "-1", "0", "2^-6", "3/16".
  std::string to_string() const;

  friend bool operator==(const Dyadic&, const Dyadic&) = default;
  friend std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b);

 private:
  std::int64_t numerator_ = 0;
  unsigned exponent_ = 0;
};

}  // namespace f2forms
