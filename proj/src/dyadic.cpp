#include "f2forms/dyadic.hpp"

#include <cmath>
#include <cstdlib>

#include "f2forms/errors.hpp"

namespace f2forms {

Dyadic::Dyadic(std::int64_t numerator, unsigned exponent)
    : numerator_(numerator), exponent_(exponent) {
  if (exponent_ > 62) throw ShapeError("Dyadic: exponent too large");
  if (numerator_ == 0) {
    exponent_ = 0;
    return;
  }
  while (exponent_ > 0 && (numerator_ % 2) == 0) {
    numerator_ /= 2;
    --exponent_;
  }
}

Dyadic Dyadic::pow2(int e) {
  if (e >= 0) {
    if (e > 62) throw ShapeError("Dyadic::pow2: exponent too large");
    return Dyadic(std::int64_t{1} << e, 0);
  }
  return Dyadic(1, static_cast<unsigned>(-e));
}

double Dyadic::to_double() const { return std::ldexp(static_cast<double>(numerator_), -static_cast<int>(exponent_)); }

std::string Dyadic::to_string() const {
  if (exponent_ == 0) return std::to_string(numerator_);
  if (numerator_ == 1) return "2^-" + std::to_string(exponent_);
  return std::to_string(numerator_) + "/" + std::to_string(std::int64_t{1} << exponent_);
}

std::strong_ordering operator<=>(const Dyadic& a, const Dyadic& b) {
  // Bring both to the larger exponent; both exponents are <= 62 and the
  // numerators are bounded by 2^62 in every use here.
  const unsigned e = a.exponent_ > b.exponent_ ? a.exponent_ : b.exponent_;
  __extension__ using Wide = __int128;
  const Wide lhs = static_cast<Wide>(a.numerator_) << (e - a.exponent_);
  const Wide rhs = static_cast<Wide>(b.numerator_) << (e - b.exponent_);
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace f2forms
