#pragma once

// Conjugacy of rational matrices over Q. X and Y are conjugate iff the
// intertwiner spaces {G : GX = XG}, {G : GX = YG}, {G : GY = YG} have equal
// dimension (Byrnes-Gauger); a witness is an invertible intertwiner, found by
// trying basis elements, then their sum, then seeded combinations.

#include "jkv/matrix.hpp"

#include <cstddef>
#include <optional>
#include <random>
#include <vector>

namespace jkv {

/// Basis of {G : G X = Y G}.
inline std::vector<RatMatrix> intertwiners(const RatMatrix& x, const RatMatrix& y) {
  if (!x.square() || !y.square() || x.rows() != y.rows()) throw Error("conjugacy needs square matrices of equal size");
  const std::size_t n = x.rows();
  // unknown G(a,b) at index a*n+b; equation (GX - YG)(i,j) = 0
  RatMatrix system(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = i * n + j;
      for (std::size_t k = 0; k < n; ++k) {
        system(row, i * n + k) += x(k, j);
        system(row, k * n + j) -= y(i, k);
      }
    }
  std::vector<RatMatrix> basis;
  for (const auto& v : kernel(system)) {
    RatMatrix g(n, n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) g(a, b) = v[a * n + b];
    basis.push_back(std::move(g));
  }
  return basis;
}

inline bool conjugates(const RatMatrix& g, const RatMatrix& x, const RatMatrix& y) {
  return g.square() && g.rows() == x.rows() && determinant(g) != 0 && g * x == y * g;
}

/// g with g X g^-1 = Y, or absent when X and Y are not conjugate over Q.
inline std::optional<RatMatrix> rational_conjugacy(const RatMatrix& x, const RatMatrix& y) {
  const auto between = intertwiners(x, y);
  if (x == y) return RatMatrix::identity(x.rows());
  const std::size_t d = between.size();
  if (d == 0 || d != intertwiners(x, x).size() || d != intertwiners(y, y).size()) return std::nullopt;

  auto accept = [&](const RatMatrix& g) -> std::optional<RatMatrix> {
    if (conjugates(g, x, y)) return g;
    return std::nullopt;
  };
  for (const auto& g : between)
    if (auto ok = accept(g)) return ok;
  RatMatrix sum(x.rows(), x.rows());
  for (const auto& g : between) sum = sum + g;
  if (auto ok = accept(sum)) return ok;
  // det of a generic combination is a nonzero polynomial of degree n
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long> coeff(-1000, 1000);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    RatMatrix g(x.rows(), x.rows());
    for (const auto& b : between) g = g + Rational(coeff(rng)) * b;
    if (auto ok = accept(g)) return ok;
  }
  throw Error("rational_conjugacy: no invertible intertwiner found for a conjugate pair");
}

}  // namespace jkv
