#pragma once

// Exact LP questions about the convex hull of a finite weight set: is the
// origin in its relative interior, which face holds the origin in its
// relative interior, and which cocharacters push every weight positive.

#include "jkv/lattice.hpp"
#include "jkv/lp.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <vector>

namespace jkv {

struct WeightSet {
  std::size_t rank = 0;
  std::vector<IntVector> points;

  WeightSet() = default;
  WeightSet(std::size_t r, std::vector<IntVector> pts) : rank(r), points(std::move(pts)) { validate(); }

  bool empty() const { return points.empty(); }
  std::size_t size() const { return points.size(); }
  bool contains(const IntVector& chi) const { return std::find(points.begin(), points.end(), chi) != points.end(); }

  void validate() const {
    std::set<IntVector> seen;
    for (const auto& p : points) {
      if (p.size() != rank) throw Error("weight " + to_string(p) + " has wrong rank");
      if (!seen.insert(p).second) throw Error("duplicate weight " + to_string(p));
    }
  }
};

/// A face F of conv(S) with 0 in relint F: the supporter pairs to zero on F
/// and positively on S \ F; barycentric[i] > 0 weights face[i], summing to 1
/// with sum barycentric[i] * face[i] = 0.
struct FaceCertificate {
  std::vector<IntVector> face;
  IntVector supporter;
  std::vector<Rational> barycentric;
};

/// Checks every identity a FaceCertificate claims, by direct arithmetic.
inline bool verify_face_certificate(const WeightSet& s, const FaceCertificate& cert) {
  if (cert.face.size() != cert.barycentric.size() || cert.supporter.size() != s.rank) return false;
  for (const auto& chi : s.points) {
    const bool in_face = std::find(cert.face.begin(), cert.face.end(), chi) != cert.face.end();
    const Integer p = pairing(cert.supporter, chi);
    if (in_face ? p != 0 : p <= 0) return false;
  }
  for (const auto& chi : cert.face)
    if (!s.contains(chi)) return false;
  if (cert.face.empty()) return false;
  Rational total = 0;
  std::vector<Rational> centre(s.rank, Rational(0));
  for (std::size_t i = 0; i < cert.face.size(); ++i) {
    if (cert.barycentric[i] <= 0) return false;
    total += cert.barycentric[i];
    for (std::size_t k = 0; k < s.rank; ++k) centre[k] += cert.barycentric[i] * Rational(cert.face[i][k]);
  }
  if (total != 1) return false;
  return std::all_of(centre.begin(), centre.end(), [](const Rational& x) { return x == 0; });
}

namespace detail {

inline std::vector<Rational> as_row(const IntVector& chi, std::size_t width) {
  std::vector<Rational> row(width, Rational(0));
  for (std::size_t i = 0; i < chi.size(); ++i) row[i] = Rational(chi[i]);
  return row;
}

/// Primitive integer lambda of minimum L1 norm with <lambda,chi> = 0 on
/// `zero_on` and >= 1 on `positive_on`.
inline std::optional<IntVector> min_norm_cocharacter(std::size_t rank, const std::vector<IntVector>& zero_on,
                                                     const std::vector<IntVector>& positive_on) {
  if (positive_on.empty()) return IntVector(rank, Integer(0));
  // variables: lambda_0..lambda_{r-1} (free), u_0..u_{r-1} >= |lambda_i|
  LinearProgram lp(2 * rank);
  for (std::size_t i = 0; i < rank; ++i) {
    lp.nonnegative[rank + i] = true;
    lp.objective[rank + i] = 1;
    std::vector<Rational> upper(2 * rank, Rational(0)), lower(2 * rank, Rational(0));
    upper[rank + i] = 1;
    upper[i] = -1;
    lower[rank + i] = 1;
    lower[i] = 1;
    lp.add(std::move(upper), Relation::GreaterEqual, 0);
    lp.add(std::move(lower), Relation::GreaterEqual, 0);
  }
  lp.sense = Sense::Minimize;
  for (const auto& chi : zero_on) lp.add(as_row(chi, 2 * rank), Relation::Equal, 0);
  for (const auto& chi : positive_on) lp.add(as_row(chi, 2 * rank), Relation::GreaterEqual, 1);
  const auto r = lp_solve(lp);
  if (r.status != LpStatus::Optimal) return std::nullopt;
  return primitive_integer(std::vector<Rational>(r.point.begin(), r.point.begin() + static_cast<std::ptrdiff_t>(rank)));
}

struct BarycentricFit {
  Rational min_coefficient;
  std::vector<Rational> coefficients;
};

/// Maximizes the smallest coefficient of a convex combination of `points`
/// equal to the origin; absent when 0 is not in the hull.
inline std::optional<BarycentricFit> max_min_barycentric(std::size_t rank, const std::vector<IntVector>& points) {
  const std::size_t m = points.size();
  // variables: c_0..c_{m-1}, eps
  LinearProgram lp(m + 1);
  for (std::size_t i = 0; i < m; ++i) lp.nonnegative[i] = true;
  lp.objective[m] = 1;
  std::vector<Rational> sum(m + 1, Rational(0));
  for (std::size_t i = 0; i < m; ++i) sum[i] = 1;
  lp.add(std::move(sum), Relation::Equal, 1);
  for (std::size_t k = 0; k < rank; ++k) {
    std::vector<Rational> row(m + 1, Rational(0));
    for (std::size_t i = 0; i < m; ++i) row[i] = Rational(points[i][k]);
    lp.add(std::move(row), Relation::Equal, 0);
  }
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<Rational> row(m + 1, Rational(0));
    row[i] = 1;
    row[m] = -1;
    lp.add(std::move(row), Relation::GreaterEqual, 0);
  }
  const auto r = lp_solve(lp);
  if (r.status != LpStatus::Optimal) return std::nullopt;
  return BarycentricFit{r.point[m], std::vector<Rational>(r.point.begin(), r.point.begin() + static_cast<std::ptrdiff_t>(m))};
}

/// Some lambda >= 0 on every point with total pairing 1, if one exists.
inline std::optional<std::vector<Rational>> nonnegative_functional(std::size_t rank, const std::vector<IntVector>& points) {
  LinearProgram lp(rank);
  std::vector<Rational> total(rank, Rational(0));
  for (const auto& chi : points) {
    lp.add(as_row(chi, rank), Relation::GreaterEqual, 0);
    for (std::size_t k = 0; k < rank; ++k) total[k] += Rational(chi[k]);
  }
  lp.add(std::move(total), Relation::Equal, 1);
  return lp_feasible_point(std::move(lp));
}

}  // namespace detail

/// lambda with <lambda,chi> >= 1 for all chi in S (min L1 norm, primitive),
/// i.e. 0 lies strictly outside conv(S). Empty S gives lambda = 0.
inline std::optional<IntVector> destabilizer(const WeightSet& s) {
  return detail::min_norm_cocharacter(s.rank, {}, s.points);
}

/// The face of conv(S) containing 0 in its relative interior, with an integer
/// supporter; absent when 0 is not in conv(S).
inline std::optional<FaceCertificate> minimal_face_origin(const WeightSet& s) {
  if (s.empty()) return std::nullopt;
  std::vector<IntVector> current = s.points;
  while (!current.empty()) {
    const auto functional = detail::nonnegative_functional(s.rank, current);
    if (!functional) break;
    std::vector<IntVector> kept;
    for (const auto& chi : current) {
      Rational p = 0;
      for (std::size_t k = 0; k < s.rank; ++k) p += (*functional)[k] * Rational(chi[k]);
      if (p == 0) kept.push_back(chi);
    }
    current = std::move(kept);
  }
  if (current.empty()) return std::nullopt;

  std::vector<IntVector> outside;
  for (const auto& chi : s.points)
    if (std::find(current.begin(), current.end(), chi) == current.end()) outside.push_back(chi);
  auto supporter = detail::min_norm_cocharacter(s.rank, current, outside);
  auto fit = detail::max_min_barycentric(s.rank, current);
  if (!supporter || !fit || fit->min_coefficient <= 0) throw Error("minimal_face_origin: inconsistent face computation");
  FaceCertificate cert{std::move(current), std::move(*supporter), std::move(fit->coefficients)};
  if (!verify_face_certificate(s, cert)) throw Error("minimal_face_origin: certificate failed verification");
  return cert;
}

struct RelintResult {
  bool in_relint = false;
  bool origin_in_hull = false;
  /// Positive coefficients aligned with S.points when in_relint.
  std::vector<Rational> barycentric;
  /// When not in_relint: >= 0 on S and > 0 somewhere; strictly positive on S
  /// when the origin is outside the hull.
  std::optional<IntVector> cocharacter;
};

inline RelintResult origin_in_relint(const WeightSet& s) {
  RelintResult r;
  if (s.empty()) {
    r.in_relint = r.origin_in_hull = true;
    return r;
  }
  const auto fit = detail::max_min_barycentric(s.rank, s.points);
  if (!fit) {
    r.cocharacter = destabilizer(s);
    if (!r.cocharacter) throw Error("origin_in_relint: origin outside hull but no destabilizer");
    return r;
  }
  r.origin_in_hull = true;
  if (fit->min_coefficient > 0) {
    r.in_relint = true;
    r.barycentric = fit->coefficients;
    return r;
  }
  const auto face = minimal_face_origin(s);
  if (!face) throw Error("origin_in_relint: origin in hull but no face");
  r.cocharacter = face->supporter;
  return r;
}

}  // namespace jkv
