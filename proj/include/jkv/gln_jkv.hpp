#pragma once

// Jordan-Kac-Vinberg decompositions for GL_n acting on matrices: the
// classical S + N with a cocharacter lambda in the centralizer of S that
// contracts N to 0, plus the orbit check over sampled cocharacters.

#include "jkv/clause.hpp"
#include "jkv/conjugacy.hpp"
#include "jkv/gln.hpp"
#include "jkv/jordan.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace jkv {

struct GlnJkvCertificate {
  RatMatrix s;
  RatMatrix n;
  GLnCocharacter lambda;
  std::optional<RatPoly> p;  // s = p(X) when known
  std::vector<Clause> clauses;

  bool passed() const { return all_passed(clauses); }
  const Clause* first_failure() const { return jkv::first_failure(clauses); }
};

/// Checks every clause of a claimed decomposition X = s + n along lambda.
inline GlnJkvCertificate jkv_certify_gln(const RatMatrix& x, const RatMatrix& s, const RatMatrix& n, const GLnCocharacter& lambda,
                                         const std::optional<RatPoly>& p = std::nullopt) {
  detail::check_shape(lambda, x);
  detail::check_shape(lambda, s);
  detail::check_shape(lambda, n);
  GlnJkvCertificate cert{s, n, lambda, p, {}};
  auto add = [&](std::string name, bool ok, std::string detail = {}) { cert.clauses.push_back({std::move(name), ok, std::move(detail)}); };
  const std::size_t dim = x.rows();
  const RatMatrix zero(dim, dim);
  add("sum", s + n == x, "X = s + n");
  add("commute", s * n == n * s, "s n = n s");
  add("semisimple", is_semisimple_matrix(s), "minimal polynomial of s is squarefree");
  add("nilpotent", is_nilpotent_matrix(n), "n^dim = 0");
  add("lambda-fixes-s", centralizes(lambda, s), "lambda(t) commutes with s");
  const auto lx = limit_conj(lambda, x);
  add("limit", lx && *lx == s, lx ? "lim lambda(t).X = s" : "limit of X along lambda does not exist");
  const auto ln = limit_conj(lambda, n);
  add("limit-of-n", ln && *ln == zero, "lim lambda(t).n = 0");
  bool centralizer_ok = true;
  for (const auto& m : intertwiners(x, x)) centralizer_ok = centralizer_ok && m * s == s * m;
  add("centralizer", centralizer_ok, "every matrix commuting with X commutes with s");
  if (p) add("polynomial", (*p)(x) == s, "s = " + p->to_string() + " at X");
  return cert;
}

/// Eigenvalues of s (rational, ascending); Unsupported unless they account
/// for the whole space.
inline std::vector<Rational> split_spectrum(const RatMatrix& s) {
  const auto roots = rational_roots(characteristic_polynomial(s));
  std::size_t total = 0;
  for (const auto& c : roots) total += kernel(s - c * RatMatrix::identity(s.rows())).size();
  if (total != s.rows()) throw Unsupported("unsupported: non-split semisimple part");
  return roots;
}

/// Classical decomposition with lambda built on the eigenspaces of S: inside
/// each eigenspace, a basis adapted to the flag ker N subset ker N^2 ...,
/// with vectors entering at level k given exponent (levels - k).
inline GlnJkvCertificate jkv_gln(const RatMatrix& x) {
  if (!x.square() || x.rows() == 0) throw Error("jkv_gln needs a non-empty square matrix");
  const std::size_t dim = x.rows();
  const JordanChevalley jc = jordan_chevalley(x);
  RatMatrix g(dim, dim);
  std::vector<long> exponents;
  std::size_t filled = 0;
  for (const auto& c : split_spectrum(jc.s)) {
    const auto eigen = kernel(jc.s - c * RatMatrix::identity(dim));
    RatMatrix basis(dim, eigen.size());
    for (std::size_t k = 0; k < eigen.size(); ++k) basis.set_column(k, eigen[k]);
    std::vector<std::vector<Rational>> chosen;
    std::vector<long> level_of;
    RatMatrix n_power = jc.n;
    for (long level = 1; chosen.size() < eigen.size(); ++level) {
      for (const auto& coords : kernel(n_power * basis)) {
        auto candidate = chosen;
        candidate.push_back(basis * coords);
        RatMatrix span(dim, candidate.size());
        for (std::size_t k = 0; k < candidate.size(); ++k) span.set_column(k, candidate[k]);
        if (rank(span) == candidate.size()) {
          chosen = std::move(candidate);
          level_of.push_back(level);
        }
      }
      n_power = n_power * jc.n;
    }
    const long levels = level_of.empty() ? 0 : level_of.back();
    for (std::size_t k = 0; k < chosen.size(); ++k) {
      g.set_column(filled++, chosen[k]);
      exponents.push_back(levels - level_of[k]);
    }
  }
  return jkv_certify_gln(x, jc.s, jc.n, make_cocharacter(g, exponents), jc.p);
}

struct GlnSampleOutcome {
  GLnCocharacter lambda;
  std::optional<RatMatrix> limit;
  bool semisimple = false;
  std::optional<RatMatrix> witness;  // conjugates the reference onto the limit
};

struct GlnTheoremReport {
  std::optional<RatMatrix> reference;
  std::vector<GlnSampleOutcome> samples;
  bool passed = true;
};

/// Every semisimple limit along the samples must be rational_conjugacy
/// equivalent to the reference: the semisimple part of X when its spectrum
/// is rational, otherwise the first semisimple limit found.
inline GlnTheoremReport theorem_check_gln(const RatMatrix& x, const std::vector<GLnCocharacter>& samples) {
  GlnTheoremReport report;
  try {
    report.reference = jkv_gln(x).s;
  } catch (const Unsupported&) {
  }
  for (const auto& lambda : samples) {
    GlnSampleOutcome out{lambda, limit_conj(lambda, x), false, std::nullopt};
    if (out.limit) {
      out.semisimple = is_semisimple_matrix(*out.limit);
      if (out.semisimple) {
        if (!report.reference) report.reference = *out.limit;
        out.witness = rational_conjugacy(*report.reference, *out.limit);
        if (!out.witness || !conjugates(*out.witness, *report.reference, *out.limit)) report.passed = false;
      }
    }
    report.samples.push_back(std::move(out));
  }
  return report;
}

}  // namespace jkv
