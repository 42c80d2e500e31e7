#pragma once

// Exact scalars. Integer and Rational are GMP values; mpq_class keeps every
// arithmetic result in lowest terms with a positive denominator.

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jkv {

using Integer = mpz_class;
using Rational = mpq_class;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that parses but falls outside what an algorithm supports.
class Unsupported : public Error {
 public:
  using Error::Error;
};

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline long to_long(const Integer& z) {
  if (!z.fits_slong_p()) throw Error("integer does not fit in a machine word: " + z.get_str());
  return z.get_si();
}

/// "p/q", or "p" when q = 1; leading '-' for negatives.
inline std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace detail

/// Parses "p", "p/q", "-p/q". A leading U+2212 minus sign is accepted too.
/// No whitespace, no '+'.
inline Rational parse_rational(std::string_view text) {
  bool negative = false;
  std::string_view body = text;
  if (body.starts_with('-')) {
    negative = true;
    body.remove_prefix(1);
  } else if (body.starts_with("−")) {
    negative = true;
    body.remove_prefix(3);
  }
  const auto slash = body.find('/');
  std::string_view num_text = body.substr(0, slash);
  std::string_view den_text = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!detail::all_digits(num_text) || !detail::all_digits(den_text))
    throw Error("malformed rational: '" + std::string(text) + "'");
  Integer num(std::string(num_text), 10);
  Integer den(std::string(den_text), 10);
  if (negative) num = -num;
  return make_rational(num, den);
}

inline Integer parse_integer(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (body.starts_with('-')) {
    negative = true;
    body.remove_prefix(1);
  }
  if (!detail::all_digits(body)) throw Error("malformed integer: '" + std::string(text) + "'");
  Integer z(std::string(body), 10);
  return negative ? Integer(-z) : z;
}

/// q^e for any integer e; q must be nonzero when e < 0.
inline Rational pow(const Rational& q, long e) {
  if (e < 0) {
    if (q == 0) throw Error("zero raised to a negative power");
    Rational inv = 1 / q;
    return pow(inv, -e);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  return make_rational(num, den);
}

inline Rational pow(const Rational& q, const Integer& e) { return pow(q, to_long(e)); }

/// Exact integer d-th root of a nonnegative integer, if it exists.
inline std::optional<Integer> exact_integer_root(const Integer& n, unsigned long d) {
  if (n < 0) throw Error("exact_integer_root of a negative integer");
  Integer root;
  if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), d) == 0) return std::nullopt;
  return root;
}

/// x with x^d = c when one exists in Q. For even d and c > 0 the positive root
/// is returned; for even d and c < 0 there is none.
inline std::optional<Rational> rational_nth_root(const Rational& c, unsigned long d) {
  if (c == 0) throw Error("rational_nth_root: zero is not in the multiplicative group");
  if (d == 0) throw Error("rational_nth_root: degree must be positive");
  const bool negative = c < 0;
  if (negative && d % 2 == 0) return std::nullopt;
  Integer num = abs(c.get_num());
  auto num_root = exact_integer_root(num, d);
  if (!num_root) return std::nullopt;
  auto den_root = exact_integer_root(c.get_den(), d);
  if (!den_root) return std::nullopt;
  Rational root = make_rational(*num_root, *den_root);
  return negative ? Rational(-root) : root;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

}  // namespace jkv
