#pragma once

// Univariate polynomials over Q, lowest degree first.

#include "jkv/matrix.hpp"
#include "jkv/rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jkv {

class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) { trim(); }
  RatPoly(std::initializer_list<Rational> coefficients) : c_(coefficients) { trim(); }

  static RatPoly constant(const Rational& a) { return RatPoly({a}); }
  static RatPoly x() { return RatPoly({Rational(0), Rational(1)}); }
  /// x - a
  static RatPoly linear_root(const Rational& a) { return RatPoly({Rational(-a), Rational(1)}); }

  bool is_zero() const { return c_.empty(); }
  /// Degree of the zero polynomial is -1.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coefficient(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

  RatPoly monic() const {
    if (is_zero()) return *this;
    RatPoly m = *this;
    const Rational lc = leading();
    for (auto& a : m.c_) a /= lc;
    return m;
  }

  RatPoly derivative() const {
    std::vector<Rational> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * static_cast<long>(i));
    return RatPoly(std::move(d));
  }

  Rational operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Horner evaluation at a square matrix.
  RatMatrix operator()(const RatMatrix& x) const {
    const std::size_t n = x.rows();
    RatMatrix acc(n, n);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc = acc * x;
      for (std::size_t i = 0; i < n; ++i) acc(i, i) += *it;
    }
    return acc;
  }

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return RatPoly(std::move(c));
  }
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
    return RatPoly(std::move(c));
  }
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return RatPoly(std::move(c));
  }
  friend RatPoly operator*(const Rational& s, const RatPoly& a) { return RatPoly::constant(s) * a; }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (long i = degree(); i >= 0; --i) {
      const Rational& a = c_[static_cast<std::size_t>(i)];
      if (a == 0) continue;
      if (!s.empty()) s += a < 0 ? " - " : " + ";
      else if (a < 0) s += "-";
      const Rational mag = abs(a);
      if (mag != 1 || i == 0) s += jkv::to_string(mag);
      if (i >= 1) s += (mag != 1 ? "*x" : "x");
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<Rational> c_;
};

struct PolyDivision {
  RatPoly quotient;
  RatPoly remainder;
};

inline PolyDivision divmod(const RatPoly& f, const RatPoly& g) {
  if (g.is_zero()) throw Error("polynomial division by zero");
  std::vector<Rational> rem = f.coefficients();
  const long dg = g.degree();
  if (f.degree() < dg) return {RatPoly(), f};
  std::vector<Rational> quot(static_cast<std::size_t>(f.degree() - dg + 1), Rational(0));
  const Rational lead = g.leading();
  for (long k = f.degree(); k >= dg; --k) {
    const Rational q = rem[static_cast<std::size_t>(k)] / lead;
    quot[static_cast<std::size_t>(k - dg)] = q;
    if (q == 0) continue;
    for (long i = 0; i <= dg; ++i) rem[static_cast<std::size_t>(k - dg + i)] -= q * g.coefficient(static_cast<std::size_t>(i));
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

inline RatPoly operator%(const RatPoly& f, const RatPoly& g) { return divmod(f, g).remainder; }

/// Monic gcd; gcd(f, 0) = monic(f), gcd(0, 0) = 0.
inline RatPoly poly_gcd(RatPoly f, RatPoly g) {
  while (!g.is_zero()) {
    RatPoly r = f % g;
    f = std::move(g);
    g = std::move(r);
  }
  return f.monic();
}

struct ExtendedGcd {
  RatPoly gcd;  // monic
  RatPoly s;    // s*f + t*g = gcd
  RatPoly t;
};

inline ExtendedGcd extended_gcd(const RatPoly& f, const RatPoly& g) {
  RatPoly r0 = f, r1 = g;
  RatPoly s0 = RatPoly::constant(1), s1;
  RatPoly t0, t1 = RatPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    RatPoly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    RatPoly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Rational inv = 1 / r0.leading();
  return {r0.monic(), inv * s0, inv * t0};
}

/// Inverse of a modulo m, when gcd(a, m) = 1.
inline std::optional<RatPoly> inverse_mod(const RatPoly& a, const RatPoly& m) {
  auto e = extended_gcd(a % m, m);
  if (e.gcd.degree() != 0) return std::nullopt;
  return e.s % m;
}

/// f(g) reduced modulo m.
inline RatPoly compose_mod(const RatPoly& f, const RatPoly& g, const RatPoly& m) {
  RatPoly acc;
  const auto& c = f.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * g + RatPoly::constant(*it)) % m;
  return acc;
}

/// f / gcd(f, f'), made monic.
inline RatPoly squarefree_part(const RatPoly& f) {
  if (f.degree() <= 0) return f.monic();
  return divmod(f, poly_gcd(f, f.derivative())).quotient.monic();
}

namespace detail {

inline std::vector<Integer> positive_divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace detail

/// Distinct rational roots of f, ascending, via the rational root theorem.
inline std::vector<Rational> rational_roots(const RatPoly& f) {
  if (f.is_zero()) throw Error("rational_roots of the zero polynomial");
  // integer polynomial with the same roots, zero roots stripped
  std::vector<Rational> roots;
  RatPoly g = f;
  while (g.degree() > 0 && g.coefficient(0) == 0) {
    if (roots.empty()) roots.push_back(0);
    g = divmod(g, RatPoly::x()).quotient;
  }
  if (g.degree() <= 0) return roots;
  Integer den = 1;
  for (const auto& a : g.coefficients()) den = lcm(den, a.get_den());
  const Integer a0 = Rational(g.coefficient(0) * den).get_num();
  const Integer an = Rational(g.leading() * den).get_num();
  const auto ps = detail::positive_divisors(a0);
  const auto qs = detail::positive_divisors(an);
  for (const auto& p : ps)
    for (const auto& q : qs)
      for (int sign : {1, -1}) {
        const Rational cand = make_rational(Integer(sign * p), q);
        if (g(cand) == 0 && std::find(roots.begin(), roots.end(), cand) == roots.end()) roots.push_back(cand);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace jkv
