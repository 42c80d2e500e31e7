#pragma once

// Random GL_n instances with known structure: unimodular changes of basis,
// Jordan forms with integer eigenvalues, cocharacters whose limit on a given
// matrix exists, and elements of P(lambda).

#include "jkv/gln.hpp"
#include "jkv/oracle/random.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <vector>

namespace jkv::oracle {

/// Product of 2n random elementary matrices I + c E_ij, c in [-2,2]: det 1.
inline RatMatrix random_unimodular(Rng& rng, std::size_t n) {
  RatMatrix g = RatMatrix::identity(n);
  if (n < 2) return g;
  for (std::size_t step = 0; step < 2 * n; ++step) {
    const std::size_t i = rng.index(n);
    std::size_t j = rng.index(n - 1);
    if (j >= i) ++j;
    g.add_row(i, j, Rational(rng.nonzero(2)));
  }
  return g;
}

inline RatMatrix random_matrix(Rng& rng, std::size_t n, long bound) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.uniform(-bound, bound);
  return m;
}

inline RatMatrix random_invertible(Rng& rng, std::size_t n, long bound) {
  while (true) {
    RatMatrix m = random_matrix(rng, n, bound);
    if (determinant(m) != 0) return m;
  }
}

/// Upper triangular with nonzero diagonal in [-2,2] and entries in [-2,2].
inline RatMatrix random_upper_invertible(Rng& rng, std::size_t n) {
  RatMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    b(i, i) = rng.nonzero(2);
    for (std::size_t j = i + 1; j < n; ++j) b(i, j) = rng.uniform(-2, 2);
  }
  return b;
}

inline RatMatrix random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.index(i)]);
  RatMatrix w(n, n);
  for (std::size_t i = 0; i < n; ++i) w(perm[i], i) = 1;
  return w;
}

/// Direct sum of Jordan blocks with integer eigenvalues in [-3,3].
inline RatMatrix random_jordan_form(Rng& rng, std::size_t n) {
  RatMatrix j(n, n);
  std::size_t start = 0;
  while (start < n) {
    const std::size_t size = 1 + rng.index(n - start);
    const long eigenvalue = rng.uniform(-3, 3);
    for (std::size_t k = start; k < start + size; ++k) {
      j(k, k) = eigenvalue;
      if (k + 1 < start + size) j(k, k + 1) = 1;
    }
    start += size;
  }
  return j;
}

/// h J h^-1 with J a random Jordan form and h unimodular.
inline RatMatrix random_rational_spectrum(Rng& rng, std::size_t n) {
  const RatMatrix h = random_unimodular(rng, n);
  return h * random_jordan_form(rng, n) * inverse(h);
}

struct SemisimpleSample {
  RatMatrix x;
  RatMatrix h;  // x = h diag h^-1
  std::vector<long> diagonal;
};

inline SemisimpleSample random_semisimple(Rng& rng, std::size_t n) {
  SemisimpleSample s{RatMatrix(n, n), random_unimodular(rng, n), std::vector<long>(n)};
  RatMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = s.diagonal[i] = rng.uniform(-3, 3);
  s.x = s.h * d * inverse(s.h);
  return s;
}

inline std::vector<long> random_exponents(Rng& rng, std::size_t n) {
  std::vector<long> a(n);
  for (auto& e : a) e = rng.uniform(-3, 3);
  std::sort(a.begin(), a.end(), std::greater<>());
  return a;
}

inline GLnCocharacter random_cocharacter(Rng& rng, std::size_t n) {
  return make_cocharacter(random_unimodular(rng, n), random_exponents(rng, n));
}

/// lambda whose limit on h D h^-1 (D diagonal) exists: g = h w b with w a
/// permutation and b upper triangular, so g^-1 X g is upper triangular.
inline GLnCocharacter cocharacter_with_limit(Rng& rng, const RatMatrix& h) {
  const std::size_t n = h.rows();
  return make_cocharacter(h * random_permutation(rng, n) * random_upper_invertible(rng, n), random_exponents(rng, n));
}

/// g B g^-1 with B invertible and zero wherever a_i < a_j.
inline RatMatrix random_in_P(Rng& rng, const GLnCocharacter& lambda) {
  const std::size_t n = lambda.n();
  while (true) {
    RatMatrix b(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (lambda.exponents[i] >= lambda.exponents[j]) b(i, j) = rng.uniform(-2, 2);
    if (determinant(b) != 0) return lambda.g * b * inverse(lambda.g);
  }
}

/// A matrix whose limit along lambda exists: g B g^-1 with B zero wherever
/// a_i < a_j (not necessarily invertible).
inline RatMatrix random_with_limit(Rng& rng, const GLnCocharacter& lambda, long bound) {
  const std::size_t n = lambda.n();
  RatMatrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (lambda.exponents[i] >= lambda.exponents[j]) b(i, j) = rng.uniform(-bound, bound);
  return lambda.g * b * inverse(lambda.g);
}

}  // namespace jkv::oracle
