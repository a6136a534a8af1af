#pragma once

// Random instance builders shared by the unit and acceptance tests.

#include <vector>

#include "f2forms/multilinear_form.hpp"
#include "f2forms/prank.hpp"
#include "f2forms/random.hpp"

namespace support {

using namespace f2forms;

inline MultilinearForm random_form(Rng& rng, std::size_t k, std::size_t n) {
  MultilinearForm f(k, n);
  const std::size_t entries = checked_pow(n, k);
  std::vector<std::size_t> idx(k);
  for (std::size_t flat = 0; flat < entries; ++flat) {
    std::size_t rest = flat;
    for (std::size_t b = k; b-- > 0;) {
      idx[b] = rest % n;
      rest /= n;
    }
    if (rng.bit()) f.set_coeff(idx);
  }
  return f;
}

inline std::vector<BitVec> random_args(Rng& rng, std::size_t k, std::size_t n) {
  std::vector<BitVec> a;
  for (std::size_t b = 0; b < k; ++b) a.push_back(rng.vec(n));
  return a;
}

/// `size` summands over random proper axis sets with random factors.
inline PartitionCertificate random_certificate(Rng& rng, std::size_t k, std::size_t n, std::size_t size) {
  PartitionCertificate c;
  c.arity = k;
  c.dim = n;
  for (std::size_t s = 0; s < size; ++s) {
    std::vector<std::size_t> axes;
    while (axes.empty() || axes.size() == k) {
      axes.clear();
      for (std::size_t a = 0; a < k; ++a) {
        if (rng.bit()) axes.push_back(a);
      }
    }
    c.summands.push_back({axes, random_form(rng, axes.size(), n), random_form(rng, k - axes.size(), n)});
  }
  return c;
}

}  // namespace support
