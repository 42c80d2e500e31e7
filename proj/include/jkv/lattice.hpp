#pragma once

// Character and cocharacter lattices of a split torus, and Smith normal form.

#include "jkv/matrix.hpp"
#include "jkv/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace jkv {

/// Integer vector; used both for weights (characters) and cocharacters.
using IntVector = std::vector<Integer>;

inline IntVector int_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

/// <lambda, chi>, the exponent in chi(lambda(t)) = t^<lambda,chi>.
inline Integer pairing(const IntVector& lambda, const IntVector& chi) {
  if (lambda.size() != chi.size())
    throw Error("pairing: rank mismatch (" + std::to_string(lambda.size()) + " vs " + std::to_string(chi.size()) + ")");
  Integer sum = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i) sum += lambda[i] * chi[i];
  return sum;
}

inline IntVector operator+(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw Error("vector rank mismatch");
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
  return c;
}

inline IntVector operator*(const Integer& s, const IntVector& a) {
  IntVector c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
  return c;
}

inline bool is_zero(const IntVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// Divides out the gcd of the entries; the zero vector is returned unchanged.
inline IntVector primitive(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0 || g == 1) return v;
  IntVector p(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) p[i] = v[i] / g;
  return p;
}

/// Clears denominators of a rational vector and makes the result primitive.
/// Positive scaling only, so signs of pairings are preserved.
inline IntVector primitive_integer(const std::vector<Rational>& v) {
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, x.get_den());
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (den / v[i].get_den());
  return primitive(out);
}

inline std::string to_string(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].get_str();
  }
  return s + ")";
}

struct SmithForm {
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix d;  // diagonal, d_1 | d_2 | ..., nonnegative
  IntMatrix v;  // cols x cols, unimodular
};

/// U * M * V = D by elementary row/column operations, always pivoting on the
/// smallest nonzero entry in absolute value.
inline SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  SmithForm f{IntMatrix::identity(rows), m, IntMatrix::identity(cols)};
  IntMatrix& d = f.d;

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // smallest nonzero entry of the trailing block
      bool found = false;
      std::size_t pi = t, pj = t;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (d(i, j) != 0 && (!found || abs(d(i, j)) < abs(d(pi, pj)))) {
            found = true;
            pi = i;
            pj = j;
          }
      if (!found) return f;
      d.swap_rows(t, pi);
      f.u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      f.v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        const Integer q = d(i, t) / d(t, t);  // truncating
        d.add_row(i, t, Integer(-q));
        f.u.add_row(i, t, Integer(-q));
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        const Integer q = d(t, j) / d(t, t);
        d.add_col(j, t, Integer(-q));
        f.v.add_col(j, t, Integer(-q));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into the pivot row and retry
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row(t, i, Integer(1));
            f.u.add_row(t, i, Integer(1));
            divides = false;
            break;
          }
      if (!divides) continue;

      if (d(t, t) < 0) {
        for (std::size_t j = 0; j < cols; ++j) d(t, j) = -d(t, j);
        for (std::size_t j = 0; j < rows; ++j) f.u(t, j) = -f.u(t, j);
      }
      break;
    }
  }
  return f;
}

}  // namespace jkv
