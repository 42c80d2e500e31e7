#pragma once

// Semisimple part from generalized eigenspaces: S acts as c on ker (X - c)^n.
// Needs a rational spectrum; independent of the Newton iteration.

#include "jkv/matrix.hpp"
#include "jkv/poly.hpp"

#include <optional>

namespace jkv::oracle {

inline std::optional<RatMatrix> oracle_semisimple_part(const RatMatrix& x) {
  const std::size_t n = x.rows();
  // det(tI - X) interpolated from its values at t = 0..n
  std::vector<Rational> samples, values;
  for (std::size_t k = 0; k <= n; ++k) {
    samples.push_back(static_cast<long>(k));
    values.push_back(determinant(Rational(static_cast<long>(k)) * RatMatrix::identity(n) - x));
  }
  RatPoly chi;
  for (std::size_t i = 0; i <= n; ++i) {
    RatPoly basis = RatPoly::constant(values[i]);
    for (std::size_t j = 0; j <= n; ++j)
      if (j != i) basis = basis * RatPoly{-samples[j] / (samples[i] - samples[j]), 1 / (samples[i] - samples[j])};
    chi = chi + basis;
  }
  RatMatrix change(n, n);
  RatMatrix diag(n, n);
  std::size_t filled = 0;
  for (const auto& c : rational_roots(chi)) {
    RatMatrix shifted = x - c * RatMatrix::identity(n);
    RatMatrix power = RatMatrix::identity(n);
    for (std::size_t k = 0; k < n; ++k) power = power * shifted;
    for (const auto& v : kernel(power)) {
      change.set_column(filled, v);
      diag(filled, filled) = c;
      ++filled;
    }
  }
  if (filled != n) return std::nullopt;
  return change * diag * inverse(change);
}

}  // namespace jkv::oracle
