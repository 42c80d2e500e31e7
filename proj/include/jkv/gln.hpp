#pragma once

// GL_n acting on n x n rational matrices by conjugation: cocharacters
// t -> g diag(t^a) g^-1, their limits, the parabolic P(lambda), the limit
// homomorphism h_lambda, and the Bruhat factorization g = p w u.

#include "jkv/matrix.hpp"

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <vector>

namespace jkv {

struct GLnCocharacter {
  RatMatrix g;
  std::vector<long> exponents;  // non-increasing

  std::size_t n() const { return exponents.size(); }
};

/// Validates g and sorts the exponents non-increasing, permuting the columns
/// of g to match so the cocharacter is unchanged.
inline GLnCocharacter make_cocharacter(const RatMatrix& g, const std::vector<long>& exponents) {
  const std::size_t n = exponents.size();
  if (n == 0) throw Error("cocharacter needs at least one exponent");
  if (!g.square() || g.rows() != n) throw Error("cocharacter matrix must be n x n with n exponents");
  if (determinant(g) == 0) throw Error("cocharacter matrix is singular");
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return exponents[a] > exponents[b]; });
  GLnCocharacter lambda{RatMatrix(n, n), std::vector<long>(n)};
  for (std::size_t k = 0; k < n; ++k) {
    lambda.exponents[k] = exponents[order[k]];
    lambda.g.set_column(k, g.column(order[k]));
  }
  return lambda;
}

inline GLnCocharacter diagonal_cocharacter(const std::vector<long>& exponents) {
  return make_cocharacter(RatMatrix::identity(exponents.size()), exponents);
}

namespace detail {

inline void check_shape(const GLnCocharacter& lambda, const RatMatrix& x) {
  if (!x.square() || x.rows() != lambda.n()) throw Error("matrix size does not match the cocharacter");
}

/// Block-diagonal part (equal exponents) of y, conjugated back by g.
inline RatMatrix graded_part(const GLnCocharacter& lambda, const RatMatrix& y) {
  const std::size_t n = lambda.n();
  RatMatrix d(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (lambda.exponents[i] == lambda.exponents[j]) d(i, j) = y(i, j);
  return lambda.g * d * inverse(lambda.g);
}

/// y has no entry of negative weight a_i - a_j.
inline bool nonnegative_weights(const GLnCocharacter& lambda, const RatMatrix& y) {
  const std::size_t n = lambda.n();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (lambda.exponents[i] < lambda.exponents[j] && y(i, j) != 0) return false;
  return true;
}

}  // namespace detail

/// lambda(t) diag(...) entry (i,j) of g^-1 X g scales by t^(a_i - a_j).
inline RatMatrix in_lambda_basis(const GLnCocharacter& lambda, const RatMatrix& x) {
  detail::check_shape(lambda, x);
  return inverse(lambda.g) * x * lambda.g;
}

/// lim_{t->0} lambda(t) X lambda(t)^-1, absent if some entry of g^-1 X g
/// has negative weight.
inline std::optional<RatMatrix> limit_conj(const GLnCocharacter& lambda, const RatMatrix& x) {
  const RatMatrix y = in_lambda_basis(lambda, x);
  if (!detail::nonnegative_weights(lambda, y)) return std::nullopt;
  return detail::graded_part(lambda, y);
}

inline bool in_P_lambda(const GLnCocharacter& lambda, const RatMatrix& h) {
  detail::check_shape(lambda, h);
  if (determinant(h) == 0) throw Error("in_P_lambda: matrix is singular");
  return detail::nonnegative_weights(lambda, in_lambda_basis(lambda, h));
}

inline RatMatrix h_lambda(const GLnCocharacter& lambda, const RatMatrix& p) {
  if (!in_P_lambda(lambda, p)) throw Error("h_lambda: matrix is not in P(lambda)");
  return detail::graded_part(lambda, in_lambda_basis(lambda, p));
}

/// p lies in the kernel of h_lambda, the unipotent radical of P(lambda).
inline bool in_unipotent_radical(const GLnCocharacter& lambda, const RatMatrix& p) {
  return in_P_lambda(lambda, p) && h_lambda(lambda, p) == RatMatrix::identity(lambda.n());
}

/// X commutes with every lambda(t): g^-1 X g is block diagonal.
inline bool centralizes(const GLnCocharacter& lambda, const RatMatrix& x) {
  const RatMatrix y = in_lambda_basis(lambda, x);
  for (std::size_t i = 0; i < lambda.n(); ++i)
    for (std::size_t j = 0; j < lambda.n(); ++j)
      if (lambda.exponents[i] != lambda.exponents[j] && y(i, j) != 0) return false;
  return true;
}

struct BruhatFactorization {
  RatMatrix p;  // upper triangular
  RatMatrix w;  // permutation
  RatMatrix u;  // upper unitriangular, u_jk != 0 only where w inverts j < k
};

/// g = p w u by upper-triangular row operations only: scan columns left to
/// right, pivot on the lowest unused row with a nonzero entry, normalize it
/// and clear the column above. What remains is w u.
inline BruhatFactorization bruhat(const RatMatrix& g) {
  if (!g.square()) throw Error("bruhat: matrix must be square");
  const std::size_t n = g.rows();
  RatMatrix m = g;
  RatMatrix ops = RatMatrix::identity(n);  // ops * g = m
  std::vector<bool> used(n, false);
  std::vector<std::size_t> pivot_row(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::optional<std::size_t> r;
    for (std::size_t i = n; i-- > 0;)
      if (!used[i] && m(i, j) != 0) {
        r = i;
        break;
      }
    if (!r) throw Error("bruhat: matrix is singular");
    const std::size_t i = *r;
    used[i] = true;
    pivot_row[j] = i;
    const Rational inv = 1 / m(i, j);
    for (std::size_t k = 0; k < n; ++k) {
      m(i, k) *= inv;
      ops(i, k) *= inv;
    }
    for (std::size_t above = 0; above < i; ++above) {
      if (m(above, j) == 0) continue;
      const Rational f = -m(above, j);
      m.add_row(above, i, f);
      ops.add_row(above, i, f);
    }
  }
  BruhatFactorization b{inverse(ops), RatMatrix(n, n), RatMatrix(n, n)};
  for (std::size_t j = 0; j < n; ++j) {
    b.w(pivot_row[j], j) = 1;
    for (std::size_t k = 0; k < n; ++k) b.u(j, k) = m(pivot_row[j], k);
  }
  return b;
}

inline bool is_upper_triangular(const RatMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < i && j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

inline bool is_upper_unitriangular(const RatMatrix& m) {
  if (!is_upper_triangular(m)) return false;
  for (std::size_t i = 0; i < m.rows(); ++i)
    if (m(i, i) != 1) return false;
  return true;
}

inline bool is_permutation_matrix(const RatMatrix& m) {
  if (!m.square()) return false;
  std::vector<int> col_hits(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int row_hits = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m(i, j) == 0) continue;
      if (m(i, j) != 1) return false;
      ++row_hits;
      ++col_hits[j];
    }
    if (row_hits != 1) return false;
  }
  return std::all_of(col_hits.begin(), col_hits.end(), [](int c) { return c == 1; });
}

}  // namespace jkv
