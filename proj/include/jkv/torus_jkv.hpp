#pragma once

// Orbit equivalence, Jordan-Kac-Vinberg decompositions, minimal cocharacters
// and limit surveys in the torus model.

#include "jkv/clause.hpp"
#include "jkv/lattice.hpp"
#include "jkv/multiplicative.hpp"
#include "jkv/polytope.hpp"
#include "jkv/torus.hpp"

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace jkv {

/// Torus element a with (a, w).v = v2 for the fixed finite index w, if any.
/// Each component of w.v must be parallel to the matching one of v2.
inline std::optional<GroupElement> torus_part_for(const TorusRep& rep, std::size_t w, const RepVector& v, const RepVector& v2) {
  GroupElement moved{std::vector<Rational>(rep.rank(), Rational(1)), w};
  const RepVector u = act(rep, moved, v);
  if (u.components().size() != v2.components().size()) return std::nullopt;
  std::map<IntVector, Rational> ratios;
  for (const auto& [chi, x] : u.components()) {
    const auto* y = v2.get(chi);
    if (!y) return std::nullopt;
    std::size_t k = 0;
    while (x[k] == 0) ++k;
    const Rational ratio = (*y)[k] / x[k];
    if (ratio == 0) return std::nullopt;
    for (std::size_t i = 0; i < x.size(); ++i)
      if ((*y)[i] != ratio * x[i]) return std::nullopt;
    ratios.emplace(chi, ratio);
  }
  const auto a = solve_multiplicative(support(u), ratios);
  if (!a) return std::nullopt;
  GroupElement g{*a, w};
  if (!(act(rep, g, v) == v2)) throw Error("torus_part_for: witness failed re-verification");
  return g;
}

/// g in G(Q) with g.v = v2, trying finite indices in order (identity first).
inline std::optional<GroupElement> same_orbit(const TorusRep& rep, const RepVector& v, const RepVector& v2) {
  validate(rep, v);
  validate(rep, v2);
  std::vector<std::size_t> order{rep.identity_index()};
  for (std::size_t w = 0; w < rep.group_order(); ++w)
    if (w != rep.identity_index()) order.push_back(w);
  for (auto w : order)
    if (auto g = torus_part_for(rep, w, v, v2)) return g;
  return std::nullopt;
}

struct TorusJkvCertificate {
  RepVector s;
  RepVector n;
  IntVector lambda;
  std::vector<Clause> clauses;

  bool passed() const { return all_passed(clauses); }
  const Clause* first_failure() const { return jkv::first_failure(clauses); }
};

namespace detail {

/// chi lies in the integer span of `generators`.
inline bool in_lattice_span(const std::vector<IntVector>& generators, const IntVector& chi) {
  if (generators.empty()) return is_zero(chi);
  const std::size_t r = chi.size();
  IntMatrix m(r, generators.size());
  for (std::size_t j = 0; j < generators.size(); ++j)
    for (std::size_t i = 0; i < r; ++i) m(i, j) = generators[j][i];
  return solve_integer_system(smith_normal_form(m), chi).has_value();
}

}  // namespace detail

/// Checks every clause of a claimed decomposition gamma = s + n along lambda.
inline TorusJkvCertificate jkv_certify(const TorusRep& rep, const RepVector& gamma, const RepVector& s, const RepVector& n,
                                       const IntVector& lambda) {
  validate(rep, gamma);
  validate(rep, s);
  validate(rep, n);
  if (lambda.size() != rep.rank()) throw Error("jkv_certify: cocharacter rank mismatch");
  TorusJkvCertificate cert{s, n, lambda, {}};
  auto add = [&](std::string name, bool ok, std::string detail = {}) { cert.clauses.push_back({std::move(name), ok, std::move(detail)}); };

  add("sum", s + n == gamma, "s + n = gamma");
  const auto ss = is_semisimple(s);
  add("semisimple", ss.in_relint, "0 in relint conv(supp s)");

  const WeightSet supp_s = support(s);
  bool fixes = true;
  for (const auto& chi : supp_s.points) fixes = fixes && pairing(lambda, chi) == 0;
  add("lambda-fixes-s", fixes, "<lambda,chi> = 0 on supp s");

  const auto lim = limit(lambda, gamma);
  add("limit", lim && *lim == s, lim ? "lim lambda(t).gamma = s" : "limit does not exist");

  const auto nil = is_nilpotent(n, supp_s);
  add("nilpotent", nil.has_value(), nil ? "witness " + to_string(*nil) : "no cocharacter of the stabilizer of s contracts n");

  const WeightSet supp_g = support(gamma);
  bool torus_ok = true;
  for (const auto& chi : supp_s.points) torus_ok = torus_ok && detail::in_lattice_span(supp_g.points, chi);
  add("torus-stabilizer", torus_ok, "supp s in the lattice spanned by supp gamma");

  bool finite_ok = true;
  std::string finite_detail = "no finite part";
  if (rep.finite_group()) {
    finite_detail = "";
    for (std::size_t w = 0; w < rep.group_order(); ++w) {
      if (w == rep.identity_index()) continue;
      const auto g = torus_part_for(rep, w, gamma, gamma);
      if (!g) continue;
      if (!(act(rep, *g, s) == s)) {
        finite_ok = false;
        finite_detail = "element " + std::to_string(w) + " fixes gamma but moves s";
        break;
      }
    }
  }
  add("finite-stabilizer", finite_ok, finite_detail);
  return cert;
}

/// gamma = s + n with s the projection of gamma onto the minimal face of
/// conv(supp gamma) through the origin (s = 0 when the origin is outside).
inline TorusJkvCertificate jkv_decompose(const TorusRep& rep, const RepVector& gamma) {
  validate(rep, gamma);
  const WeightSet supp = support(gamma);
  RepVector s(rep.rank());
  IntVector lambda(rep.rank(), Integer(0));
  if (!supp.empty()) {
    if (const auto face = minimal_face_origin(supp)) {
      s = project(gamma, face->face);
      lambda = face->supporter;
    } else {
      const auto d = destabilizer(supp);
      if (!d) throw Error("jkv_decompose: origin outside hull without destabilizer");
      lambda = *d;
    }
  }
  return jkv_certify(rep, gamma, s, gamma - s, lambda);
}

/// Visits every lambda in [-bound, bound]^rank in lexicographic order.
inline void for_each_in_box(std::size_t rank, long bound, const std::function<void(const IntVector&)>& visit) {
  IntVector lambda(rank, Integer(-bound));
  while (true) {
    visit(lambda);
    std::size_t k = rank;
    while (k > 0 && lambda[k - 1] == bound) {
      lambda[k - 1] = -bound;
      --k;
    }
    if (k == 0) return;
    ++lambda[k - 1];
  }
}

/// Memoised semisimplicity keyed by support.
class SemisimpleCache {
 public:
  bool operator()(const RepVector& v) {
    std::vector<IntVector> key;
    for (const auto& [chi, x] : v.components()) key.push_back(chi);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
    const bool ss = is_semisimple(v).in_relint;
    cache_.emplace(std::move(key), ss);
    return ss;
  }

 private:
  std::map<std::vector<IntVector>, bool> cache_;
};

struct LambdaMin {
  bool box_too_small = false;
  std::size_t dim = 0;
  std::vector<IntVector> witnesses;  // primitive, lexicographically sorted
};

/// Minimum of dim V_{lambda,0} over lambda in the box whose limit exists and is semisimple.
inline LambdaMin lambda_min(const TorusRep& rep, const RepVector& gamma, long bound) {
  if (bound < 1) throw Error("lambda_min: box bound must be >= 1");
  validate(rep, gamma);
  SemisimpleCache semisimple;
  LambdaMin best;
  bool any = false;
  std::set<IntVector> minimizers;
  for_each_in_box(rep.rank(), bound, [&](const IntVector& lambda) {
    const auto lim = limit(lambda, gamma);
    if (!lim || !semisimple(*lim)) return;
    const std::size_t d = dim_V_lambda_zero(rep, lambda);
    if (!any || d < best.dim) {
      any = true;
      best.dim = d;
      minimizers.clear();
    }
    if (d == best.dim) minimizers.insert(primitive(lambda));
  });
  best.box_too_small = !any;
  best.witnesses.assign(minimizers.begin(), minimizers.end());
  return best;
}

struct MuRelations {
  bool zero_part = false;      // V_{mu,0} = V_{lambda0,0} cap V_{lambda,0}
  bool positive_part = false;  // V_{mu,+} contains V_{lambda0,+}
  bool nonneg_part = false;    // V_{mu,0+} inside V_{lambda0,0+}
  bool all() const { return zero_part && positive_part && nonneg_part; }
};

/// Checks the three subspace relations weight by weight.
inline MuRelations mu_relations(const TorusRep& rep, const IntVector& lambda0, const IntVector& lambda, const IntVector& mu) {
  MuRelations r{true, true, true};
  for (const auto& w : rep.weights()) {
    const Integer p0 = pairing(lambda0, w.chi);
    const Integer p = pairing(lambda, w.chi);
    const Integer pm = pairing(mu, w.chi);
    if ((pm == 0) != (p0 == 0 && p == 0)) r.zero_part = false;
    if (p0 > 0 && pm <= 0) r.positive_part = false;
    if (pm >= 0 && p0 < 0) r.nonneg_part = false;
  }
  return r;
}

struct ComposedCocharacter {
  Integer n;
  IntVector mu;
};

inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

/// Smallest n >= 1 such that mu = n*lambda0 + lambda keeps the sign of every
/// nonzero pairing with lambda0 on the weights of `rep`.
inline ComposedCocharacter compose_mu(const IntVector& lambda0, const IntVector& lambda, const TorusRep& rep) {
  if (lambda0.size() != rep.rank() || lambda.size() != rep.rank()) throw Error("compose_mu: rank mismatch");
  Integer n = 1;
  for (const auto& w : rep.weights()) {
    const Integer p0 = pairing(lambda0, w.chi);
    const Integer p = pairing(lambda, w.chi);
    if (p0 > 0) n = std::max(n, Integer(floor_div(-p, p0) + 1));
    if (p0 < 0) n = std::max(n, Integer(floor_div(p, -p0) + 1));
  }
  ComposedCocharacter out{n, n * lambda0 + lambda};
  if (!mu_relations(rep, lambda0, lambda, out.mu).all()) throw Error("compose_mu: relations failed re-verification");
  return out;
}

struct SurveyEntry {
  IntVector lambda;
  std::optional<RepVector> limit;
  bool semisimple = false;
};

struct LimitSurvey {
  long bound = 0;
  std::vector<SurveyEntry> entries;
};

inline LimitSurvey limit_survey(const TorusRep& rep, const RepVector& gamma, long bound) {
  if (bound < 1) throw Error("limit_survey: box bound must be >= 1");
  validate(rep, gamma);
  SemisimpleCache semisimple;
  LimitSurvey survey{bound, {}};
  for_each_in_box(rep.rank(), bound, [&](const IntVector& lambda) {
    SurveyEntry e{lambda, limit(lambda, gamma), false};
    if (e.limit) e.semisimple = semisimple(*e.limit);
    survey.entries.push_back(std::move(e));
  });
  return survey;
}

struct OrbitCheck {
  bool passed = true;
  std::size_t distinct_limits = 0;
  /// One witness per distinct semisimple limit, mapping the first one onto it.
  std::vector<std::pair<RepVector, GroupElement>> witnesses;
  std::string failure;
};

/// All semisimple limits in the survey lie in one G(Q)-orbit.
inline OrbitCheck check_semisimple_limits_one_orbit(const TorusRep& rep, const LimitSurvey& survey) {
  OrbitCheck check;
  std::vector<RepVector> distinct;
  for (const auto& e : survey.entries)
    if (e.semisimple && std::find(distinct.begin(), distinct.end(), *e.limit) == distinct.end()) distinct.push_back(*e.limit);
  check.distinct_limits = distinct.size();
  for (const auto& v : distinct) {
    const auto g = same_orbit(rep, distinct.front(), v);
    if (!g) {
      check.passed = false;
      check.failure = "semisimple limits not in one orbit";
      return check;
    }
    check.witnesses.emplace_back(v, *g);
  }
  return check;
}

}  // namespace jkv
