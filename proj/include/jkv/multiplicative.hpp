#pragma once

// Solving chi(a) = c_chi for a in (Q^*)^r: factor every ratio over a shared
// prime set, solve one integer system per prime through Smith normal form,
// and one system over GF(2) for the signs.

#include "jkv/lattice.hpp"
#include "jkv/polytope.hpp"
#include "jkv/torus.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace jkv {

inline constexpr unsigned long kDefaultTrialDivisionBound = 1'000'000;

/// Prime factorization by trial division up to `bound`. A leftover cofactor
/// below bound^2 is prime; anything larger is rejected as unfactored.
inline std::map<Integer, long> factor_integer(Integer n, unsigned long bound = kDefaultTrialDivisionBound) {
  if (n <= 0) throw Error("factor_integer expects a positive integer");
  std::map<Integer, long> factors;
  auto strip = [&](unsigned long p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++factors[Integer(p)];
      n /= p;
    }
  };
  strip(2);
  for (unsigned long p = 3; p <= bound && Integer(p) * p <= n; p += 2) strip(p);
  if (n > 1) {
    if (n >= Integer(bound) * bound) throw Unsupported("unfactored: cofactor " + n.get_str() + " exceeds the trial-division bound");
    ++factors[n];
  }
  return factors;
}

namespace detail {

/// Solves X s = b over GF(2); X is given as rows of parities.
inline std::optional<std::vector<int>> solve_gf2(std::vector<std::vector<int>> rows, std::vector<int> rhs, std::size_t vars) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < vars && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    std::swap(rhs[p], rhs[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      for (std::size_t j = 0; j < vars; ++j) rows[i][j] ^= rows[r][j];
      rhs[i] ^= rhs[r];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i)
    if (rhs[i] != 0) return std::nullopt;
  std::vector<int> s(vars, 0);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) s[pivot_cols[i]] = rhs[i];
  return s;
}

/// Some integer e with X e = f, using a precomputed Smith form of X.
inline std::optional<IntVector> solve_integer_system(const SmithForm& snf, const IntVector& f) {
  const std::size_t rows = snf.d.rows();
  const std::size_t cols = snf.d.cols();
  const IntVector g = snf.u * f;
  IntVector y(cols, Integer(0));
  for (std::size_t k = 0; k < rows; ++k) {
    const Integer dk = k < cols ? snf.d(k, k) : Integer(0);
    if (dk == 0) {
      if (g[k] != 0) return std::nullopt;
      continue;
    }
    if (g[k] % dk != 0) return std::nullopt;
    y[k] = g[k] / dk;
  }
  return snf.v * y;
}

}  // namespace detail

/// a with prod_i a_i^{chi_i} = ratios[chi] for every chi in S, or absent.
inline std::optional<std::vector<Rational>> solve_multiplicative(const WeightSet& s, const std::map<IntVector, Rational>& ratios,
                                                                 unsigned long bound = kDefaultTrialDivisionBound) {
  const std::size_t r = s.rank;
  for (const auto& chi : s.points) {
    auto it = ratios.find(chi);
    if (it == ratios.end()) throw Error("solve_multiplicative: no ratio for weight " + to_string(chi));
    if (it->second == 0) throw Error("solve_multiplicative: ratio zero at weight " + to_string(chi));
  }
  if (s.empty()) return std::vector<Rational>(r, Rational(1));

  const std::size_t m = s.size();
  IntMatrix x(m, r);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < r; ++j) x(i, j) = s.points[i][j];

  std::vector<std::map<Integer, long>> num_factors(m), den_factors(m);
  std::set<Integer> primes;
  for (std::size_t i = 0; i < m; ++i) {
    const Rational& c = ratios.at(s.points[i]);
    num_factors[i] = factor_integer(abs(c.get_num()), bound);
    den_factors[i] = factor_integer(c.get_den(), bound);
    for (const auto& [p, e] : num_factors[i]) primes.insert(p);
    for (const auto& [p, e] : den_factors[i]) primes.insert(p);
  }

  std::vector<Rational> a(r, Rational(1));
  const SmithForm snf = smith_normal_form(x);
  for (const auto& p : primes) {
    IntVector f(m, Integer(0));
    for (std::size_t i = 0; i < m; ++i) {
      auto n_it = num_factors[i].find(p);
      auto d_it = den_factors[i].find(p);
      f[i] = (n_it == num_factors[i].end() ? 0 : n_it->second) - (d_it == den_factors[i].end() ? 0 : d_it->second);
    }
    const auto e = detail::solve_integer_system(snf, f);
    if (!e) return std::nullopt;
    for (std::size_t j = 0; j < r; ++j)
      if ((*e)[j] != 0) a[j] *= pow(Rational(p), (*e)[j]);
  }

  std::vector<std::vector<int>> parity(m, std::vector<int>(r, 0));
  std::vector<int> sign_rhs(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < r; ++j) parity[i][j] = mpz_odd_p(x(i, j).get_mpz_t()) ? 1 : 0;
    sign_rhs[i] = ratios.at(s.points[i]) < 0 ? 1 : 0;
  }
  const auto signs = detail::solve_gf2(parity, sign_rhs, r);
  if (!signs) return std::nullopt;
  for (std::size_t j = 0; j < r; ++j)
    if ((*signs)[j]) a[j] = -a[j];

  for (const auto& chi : s.points)
    if (evaluate_character(chi, a) != ratios.at(chi)) throw Error("solve_multiplicative: witness failed re-verification");
  return a;
}

}  // namespace jkv
