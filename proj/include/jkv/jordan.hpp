#pragma once

// Characteristic and minimal polynomials of rational matrices, and the exact
// Jordan-Chevalley decomposition X = S + N with S a polynomial in X.

#include "jkv/matrix.hpp"
#include "jkv/poly.hpp"

#include <cstddef>
#include <vector>

namespace jkv {

inline Rational trace(const RatMatrix& m) {
  Rational t = 0;
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

/// det(xI - X), by Faddeev-LeVerrier.
inline RatPoly characteristic_polynomial(const RatMatrix& x) {
  if (!x.square()) throw Error("characteristic polynomial of a non-square matrix");
  const std::size_t n = x.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  RatMatrix m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    m = x * m;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    c[n - k] = -trace(x * m) / static_cast<long>(k);
  }
  return RatPoly(std::move(c));
}

/// Monic generator of {p : p(X) = 0}: the first power of X that is a linear
/// combination of the lower ones.
inline RatPoly minimal_polynomial(const RatMatrix& x) {
  if (!x.square()) throw Error("minimal polynomial of a non-square matrix");
  const std::size_t n = x.rows();
  if (n == 0) return RatPoly::constant(1);
  std::vector<RatMatrix> powers{RatMatrix::identity(n)};
  while (true) {
    const RatMatrix next = powers.back() * x;
    const std::size_t d = powers.size();
    RatMatrix system(n * n, d);
    std::vector<Rational> target(n * n);
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) system(i * n + j, k) = powers[k](i, j);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) target[i * n + j] = next(i, j);
    if (const auto coeffs = solve(system, target)) {
      std::vector<Rational> c(d + 1);
      for (std::size_t k = 0; k < d; ++k) c[k] = -(*coeffs)[k];
      c[d] = 1;
      return RatPoly(std::move(c));
    }
    powers.push_back(next);
  }
}

/// Squarefree minimal polynomial; no rational eigenvalues needed.
inline bool is_semisimple_matrix(const RatMatrix& x) {
  const RatPoly m = minimal_polynomial(x);
  return poly_gcd(m, m.derivative()).degree() == 0;
}

inline bool is_nilpotent_matrix(const RatMatrix& x) {
  return matrix_power(x, x.rows()) == RatMatrix(x.rows(), x.cols());
}

struct JordanChevalley {
  RatMatrix s;
  RatMatrix n;
  RatPoly p;  // s = p(X)
};

/// Newton iteration p <- p - f(p) / f'(p) in Q[x]/(charpoly), f the
/// squarefree part of the characteristic polynomial, started at p = x.
inline JordanChevalley jordan_chevalley(const RatMatrix& x) {
  const RatPoly chi = characteristic_polynomial(x);
  const RatPoly f = squarefree_part(chi);
  const RatPoly df = f.derivative();
  RatPoly p = RatPoly::x() % chi;
  while (true) {
    const RatPoly fp = compose_mod(f, p, chi);
    if (fp.is_zero()) break;
    const auto inv = inverse_mod(compose_mod(df, p, chi), chi);
    if (!inv) throw Error("jordan_chevalley: f'(p) not invertible modulo the characteristic polynomial");
    p = (p - fp * *inv) % chi;
  }
  const RatMatrix s = p(x);
  return {s, x - s, p};
}

}  // namespace jkv
