#pragma once

// Brute-force ground truth for "is the origin in the relative interior of
// conv(S)". Enumerates every subset T of S and solves sum c_i chi_i = 0,
// sum c_i = 1 on T by its own elimination; the supports of the strictly
// positive unique solutions are the vertices of the polytope of convex
// combinations equal to 0, and their union is the minimal face through 0.
// Shares no code with the LP-based routines.

#include "jkv/lattice.hpp"
#include "jkv/rational.hpp"

#include <cstddef>
#include <optional>
#include <set>
#include <vector>

namespace jkv::oracle {

inline constexpr std::size_t kRelintMaxPoints = 6;
inline constexpr std::size_t kRelintMaxRank = 3;

namespace detail {

/// Unique solution of the (rank+1) x |T| system, if it has full column rank and is consistent.
inline std::optional<std::vector<Rational>> unique_solution(std::vector<std::vector<Rational>> rows, std::size_t unknowns) {
  const std::size_t m = rows.size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < unknowns; ++c) {
    std::size_t p = r;
    while (p < m && rows[p][c] == 0) ++p;
    if (p == m) return std::nullopt;  // free column: not unique
    std::swap(rows[p], rows[r]);
    const Rational inv = 1 / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Rational f = rows[i][c];
      for (std::size_t j = 0; j <= unknowns; ++j) rows[i][j] -= f * rows[r][j];
    }
    ++r;
  }
  for (std::size_t i = r; i < m; ++i)
    if (rows[i][unknowns] != 0) return std::nullopt;
  std::vector<Rational> x(unknowns);
  for (std::size_t i = 0; i < unknowns; ++i) x[i] = rows[i][unknowns];
  return x;
}

}  // namespace detail

/// Points of S that carry positive weight in some convex combination equal to 0;
/// empty exactly when 0 is outside conv(S).
inline std::set<IntVector> oracle_minimal_face(std::size_t rank, const std::vector<IntVector>& points) {
  if (points.size() > kRelintMaxPoints || rank > kRelintMaxRank) throw Error("oracle_relint: instance exceeds the brute-force size bound");
  std::set<IntVector> face;
  const std::size_t m = points.size();
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    std::vector<std::vector<Rational>> rows(rank + 1, std::vector<Rational>(subset.size() + 1, Rational(0)));
    for (std::size_t j = 0; j < subset.size(); ++j) {
      for (std::size_t k = 0; k < rank; ++k) rows[k][j] = Rational(points[subset[j]][k]);
      rows[rank][j] = 1;
    }
    rows[rank][subset.size()] = 1;
    const auto c = detail::unique_solution(std::move(rows), subset.size());
    if (!c) continue;
    bool positive = true;
    for (const auto& x : *c) positive = positive && x > 0;
    if (!positive) continue;
    for (auto i : subset) face.insert(points[i]);
  }
  return face;
}

inline bool oracle_relint(std::size_t rank, const std::vector<IntVector>& points) {
  if (points.empty()) return true;
  return oracle_minimal_face(rank, points).size() == points.size();
}

}  // namespace jkv::oracle
