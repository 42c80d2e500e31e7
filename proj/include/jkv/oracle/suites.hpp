#pragma once

// Seeded verification suites. Instance i of a run draws from
// Rng(instance_seed(seed, i)), so a failure replays with --start i --count 1.
// Each check is an exact assertion; an instance stops at its first failed
// clause, which is recorded together with the serialized input.

#include "jkv/conjugacy.hpp"
#include "jkv/gln.hpp"
#include "jkv/gln_jkv.hpp"
#include "jkv/io.hpp"
#include "jkv/jordan.hpp"
#include "jkv/oracle/gln_sampling.hpp"
#include "jkv/oracle/jordan.hpp"
#include "jkv/oracle/limit.hpp"
#include "jkv/oracle/random.hpp"
#include "jkv/oracle/relint.hpp"
#include "jkv/oracle/torus_sampling.hpp"
#include "jkv/torus.hpp"
#include "jkv/torus_jkv.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace jkv::oracle {

struct FuzzConfig {
  std::uint64_t seed = 0;
  std::size_t count = 100;
  std::size_t start = 0;
  long box = 3;                 // cocharacter box [-box, box]^rank
  std::size_t max_rank = 4;     // torus rank bound
  std::size_t max_size = 4;     // GL_n size bound
  long coefficient_bound = 9;   // |numerator|, denominator of sampled coordinates

  void validate() const {
    if (box < 1) throw Error("box bound must be >= 1");
    if (max_rank < 1 || max_rank > 6) throw Error("max rank must be in [1, 6]");
    if (max_size < 2 || max_size > 6) throw Error("max size must be in [2, 6]");
    if (coefficient_bound < 1) throw Error("coefficient bound must be >= 1");
  }
};

struct SuiteFailure {
  std::size_t index = 0;
  std::uint64_t instance_seed = 0;
  std::string clause;
  std::string detail;
  io::Json input;
};

struct VerificationReport {
  std::string suite;
  FuzzConfig config;
  std::size_t instances = 0;
  std::size_t checks = 0;
  std::vector<SuiteFailure> failures;
  double wall_seconds = 0;

  bool passed() const { return failures.empty(); }
};

/// One instance under test: the serialized input plus its first failed clause.
class Instance {
 public:
  io::Json input;

  bool check(const char* clause, bool ok) {
    ++checks_;
    if (!ok && !failure_) failure_ = Clause{clause, false, {}};
    return ok;
  }
  bool check(const char* clause, bool ok, const std::function<std::string()>& detail) {
    ++checks_;
    if (!ok && !failure_) failure_ = Clause{clause, false, detail()};
    return ok;
  }
  void fail(const std::string& clause, const std::string& detail) {
    ++checks_;
    if (!failure_) failure_ = Clause{clause, false, detail};
  }

  bool failed() const { return failure_.has_value(); }
  const std::optional<Clause>& failure() const { return failure_; }
  std::size_t checks() const { return checks_; }

 private:
  std::optional<Clause> failure_;
  std::size_t checks_ = 0;
};

namespace suites {

inline TorusSamplingBounds torus_bounds(const FuzzConfig& cfg) {
  TorusSamplingBounds b;
  b.max_rank = cfg.max_rank;
  b.coefficient_bound = cfg.coefficient_bound;
  return b;
}

struct TorusInstance {
  TorusRep rep;
  RepVector gamma;
};

inline TorusInstance torus_instance(Rng& rng, const FuzzConfig& cfg, Instance& inst) {
  TorusRep rep = random_torus_rep(rng, torus_bounds(cfg));
  RepVector gamma = random_rep_vector(rng, rep, cfg.coefficient_bound);
  inst.input = io::torus_problem_json(rep, gamma);
  return {std::move(rep), std::move(gamma)};
}

/// act(g, v) == v2, recomputed.
inline bool maps_onto(const TorusRep& rep, const std::optional<GroupElement>& g, const RepVector& v, const RepVector& v2) {
  return g && act(rep, *g, v) == v2;
}

inline std::string lambda_detail(const IntVector& lambda) { return "lambda = " + to_string(lambda); }

// ---- torus model ----

inline void lemma_limits(Rng& rng, const FuzzConfig& cfg, Instance& inst) {
  const auto [rep, v] = torus_instance(rng, cfg, inst);
  const Components& comps = v.components();
  inst.check("limit-at-zero", limit(IntVector(rep.rank(), Integer(0)), v) == v);
  for_each_in_box(rep.rank(), cfg.box, [&](const IntVector& lambda) {
    const auto a = limit(lambda, v);
    const auto b = oracle_limit(lambda, comps);
    inst.check("limit-agreement", a.has_value() == b.has_value() && (!a || a->components() == *b), [&] { return lambda_detail(lambda); });
  });
}

inline void limit_equivariance(Rng& rng, const FuzzConfig& cfg, Instance& inst) {
  const auto [rep, v] = torus_instance(rng, cfg, inst);
  const GroupElement a{random_torus_element(rng, rep.rank(), cfg.coefficient_bound), rep.identity_index()};
  inst.input["torus_element"] = io::to_json(a.torus);
  const RepVector av = act(rep, a, v);
  for (int k = 0; k < 20; ++k) {
    const IntVector lambda = random_cocharacter_in_box(rng, rep.rank(), cfg.box);
    const auto lhs = limit(lambda, av);
    const auto lim = limit(lambda, v);
    const bool ok = lhs.has_value() == lim.has_value() && (!lhs || *lhs == act(rep, a, *lim));
    inst.check("limit-equivariance", ok, [&] { return lambda_detail(lambda); });
  }
}

inline void relint(Rng& rng, const FuzzConfig&, Instance& inst) {
  const WeightSet s = random_small_weight_set(rng);
  io::Json pts = io::Json::array();
  for (const auto& chi : s.points) pts.push_back(io::to_json(chi));
  inst.input = {{"rank", s.rank}, {"points", pts}};

  const RelintResult r = origin_in_relint(s);
  inst.check("relint-agreement", r.in_relint == oracle_relint(s.rank, s.points));
  inst.check("hull-agreement", r.origin_in_hull == !oracle_minimal_face(s.rank, s.points).empty());
  if (r.in_relint) {
    bool ok = r.barycentric.size() == s.size();
    Rational total = 0;
    std::vector<Rational> centre(s.rank, Rational(0));
    for (std::size_t i = 0; ok && i < s.size(); ++i) {
      ok = r.barycentric[i] > 0;
      total += r.barycentric[i];
      for (std::size_t k = 0; k < s.rank; ++k) centre[k] += r.barycentric[i] * s.points[i][k];
    }
    ok = ok && (s.empty() || total == 1);
    for (const auto& c : centre) ok = ok && c == 0;
    inst.check("barycentric-certificate", ok);
    return;
  }
  if (!inst.check("cocharacter-present", r.cocharacter.has_value())) return;
  bool nonnegative = true, somewhere = false, everywhere = true;
  for (const auto& chi : s.points) {
    const Integer p = pairing(*r.cocharacter, chi);
    nonnegative = nonnegative && p >= 0;
    somewhere = somewhere || p > 0;
    everywhere = everywhere && p > 0;
  }
  inst.check("destabilizing-cocharacter", nonnegative && somewhere, [&] { return lambda_detail(*r.cocharacter); });
  if (!r.origin_in_hull) inst.check("separating-cocharacter", everywhere, [&] { return lambda_detail(*r.cocharacter); });
}

/// The three subspace relations between V_{mu,*} and V_{lambda0,*}, V_{lambda,*}, weight by weight.
inline std::optional<std::string> mu_relation_failure(const TorusRep& rep, const IntVector& lambda0, const IntVector& lambda, const IntVector& mu) {
  for (const auto& w : rep.weights()) {
    Integer p0 = 0, p = 0, pm = 0;
    for (std::size_t i = 0; i < w.chi.size(); ++i) {
      p0 += lambda0[i] * w.chi[i];
      p += lambda[i] * w.chi[i];
      pm += mu[i] * w.chi[i];
    }
    if ((pm == 0) != (p0 == 0 && p == 0)) return "mu-zero-part";
    if (p0 > 0 && pm <= 0) return "mu-positive-part";
    if (pm >= 0 && p0 < 0) return "mu-nonneg-part";
  }
  return std::nullopt;
}

inline void compose_mu_suite(Rng& rng, const FuzzConfig& cfg, Instance& inst) {
  const TorusRep rep = random_torus_rep(rng, torus_bounds(cfg));
  const IntVector lambda0 = random_cocharacter_in_box(rng, rep.rank(), cfg.box);
  const IntVector lambda = random_cocharacter_in_box(rng, rep.rank(), cfg.box);
  inst.input = {{"rep", io::to_json(rep)}, {"lambda0", io::to_json(lambda0)}, {"lambda", io::to_json(lambda)}};
  const ComposedCocharacter c = compose_mu(lambda0, lambda, rep);
  IntVector expected(rep.rank());
  for (std::size_t i = 0; i < expected.size(); ++i) expected[i] = c.n * lambda0[i] + lambda[i];
  inst.check("mu-form", c.n >= 1 && c.mu == expected, [&] { return "n = " + to_string(c.n) + ", mu = " + to_string(c.mu); });
  if (const auto bad = mu_relation_failure(rep, lambda0, lambda, c.mu)) inst.fail(*bad, "n = " + to_string(c.n));
  if (c.n > 1) {
    IntVector smaller(rep.rank());
    for (std::size_t i = 0; i < smaller.size(); ++i) smaller[i] = (c.n - 1) * lambda0[i] + lambda[i];
    inst.check("mu-minimal", mu_relation_failure(rep, lambda0, lambda, smaller).has_value(), [&] { return "n - 1 = " + to_string(Integer(c.n - 1)) + " also works"; });
  }
}

/// Limits of a semisimple vector lie in its orbit.
inline void semisimple_limit(Rng& rng, const FuzzConfig& cfg, Instance& inst) {
  const auto [rep, v] = torus_instance(rng, cfg, inst);
  const RepVector gamma = is_semisimple(v).in_relint ? v : jkv_decompose(rep, v).s;
  inst.input["vector"] = io::to_json(gamma);
  for_each_in_box(rep.rank(), cfg.box, [&](const IntVector& lambda) {
    const auto lim = limit(lambda, gamma);
    if (!lim) return;
    inst.check("limit-in-orbit", maps_onto(rep, same_orbit(rep, gamma, *lim), gamma, *lim), [&] { return lambda_detail(lambda); });
  });
}

/// Lambda_min is unchanged by a torus translate, and the limits stay in one orbit.
inline void parabolic_translate(Rng& rng, const FuzzConfig& cfg, Instance& inst) {
  const auto [rep, gamma] = torus_instance(rng, cfg, inst);
  const GroupElement p{random_torus_element(rng, rep.rank(), cfg.coefficient_bound), rep.identity_index()};
  inst.input["torus_element"] = io::to_json(p.torus);
  const RepVector moved = act(rep, p, gamma);
  const LambdaMin a = lambda_min(rep, gamma, cfg.box);
  const LambdaMin b = lambda_min(rep, moved, cfg.box);
  if (!inst.check("lambda-min-invariant", a.box_too_small == b.box_too_small && a.dim == b.dim && a.witnesses == b.witnesses)) return;
  for (std::size_t k = 0; k < a.witnesses.size() && k < 3; ++k) {
    const IntVector& lambda = a.witnesses[k];
    const auto l1 = limit(lambda, gamma);
    const auto l2 = limit(lambda, moved);
    const bool ok = l1 && l2 && maps_onto(rep, same_orbit(rep, *l1, *l2), *l1, *l2);
    inst.check("translated-limits-one-orbit", ok, [&] { return lambda_detail(lambda); });
  }
}

/// Every semisimple limit in the box is in the orbit of the limit along a Lambda_min witness.
inline void commuting(Rng& rng, const FuzzConfig& cfg, Instance& inst) {
  const auto [rep, gamma] = torus_instance(rng, cfg, inst);
  const LambdaMin lm = lambda_min(rep, gamma, cfg.box);
  if (lm.box_too_small) return;
  const RepVector v0 = *limit(lm.witnesses.front(), gamma);
  SemisimpleCache semisimple;
  for_each_in_box(rep.rank(), cfg.box, [&](const IntVector& lambda) {
    const auto lim = limit(lambda, gamma);
    if (!lim || !semisimple(*lim)) return;
    inst.check("limit-in-orbit-of-min", maps_onto(rep, same_orbit(rep, *lim, v0), *lim, v0), [&] { return lambda_detail(lambda); });
  });
}

inline void theorem(Rng& rng, const FuzzConfig& cfg, Instance& inst) {
  const auto [rep, gamma] = torus_instance(rng, cfg, inst);
  const LimitSurvey survey = limit_survey(rep, gamma, cfg.box);
  const OrbitCheck oc = check_semisimple_limits_one_orbit(rep, survey);
  if (!inst.check("one-orbit", oc.passed, [&] { return oc.failure; })) return;
  for (const auto& [v, g] : oc.witnesses)
    inst.check("witness-verified", act(rep, g, oc.witnesses.front().first) == v);
  if (!rep.finite_group()) inst.check("pure-torus-rigidity", oc.distinct_limits <= 1, [&] { return std::to_string(oc.distinct_limits) + " distinct limits"; });
}

inline void jkv(Rng& rng, const FuzzConfig& cfg, Instance& inst) {
  const auto [rep, gamma] = torus_instance(rng, cfg, inst);
  const TorusJkvCertificate d = jkv_decompose(rep, gamma);
  if (!inst.check("decompose-certified", d.passed(), [&] { return d.first_failure()->name; })) return;
  std::set<RepVector::Components> orbit_checked;
  const LimitSurvey survey = limit_survey(rep, gamma, cfg.box);
  for (const auto& e : survey.entries) {
    if (!e.semisimple) continue;
    const TorusJkvCertificate c = jkv_certify(rep, gamma, *e.limit, gamma - *e.limit, e.lambda);
    inst.check("survey-decomposition-certified", c.passed(), [&] { return lambda_detail(e.lambda) + ", clause " + c.first_failure()->name; });
    if (!orbit_checked.insert(e.limit->components()).second) continue;
    inst.check("same-semisimple-orbit", maps_onto(rep, same_orbit(rep, *e.limit, d.s), *e.limit, d.s), [&] { return lambda_detail(e.lambda); });
  }
  const GroupElement g = random_group_element(rng, rep, cfg.coefficient_bound);
  const TorusJkvCertificate moved = jkv_decompose(rep, act(rep, g, gamma));
  inst.check("translate-same-orbit", moved.passed() && maps_onto(rep, same_orbit(rep, d.s, moved.s), d.s, moved.s));
}

// ---- GL_n model ----

inline std::size_t random_size(Rng& rng, const FuzzConfig& cfg) { return 2 + rng.index(cfg.max_size - 1); }

/// Limits of a semisimple matrix are conjugate to it.
inline void semisimple_limit_gln(Rng& rng, const FuzzConfig& cfg, Instance& inst) {
  const SemisimpleSample ss = random_semisimple(rng, random_size(rng, cfg));
  inst.input = io::gln_problem_json(ss.x);
  inst.input["cocharacters"] = io::Json::array();
  for (int k = 0; k < 5; ++k) {
    const GLnCocharacter lambda = cocharacter_with_limit(rng, ss.h);
    inst.input["cocharacters"].push_back(io::to_json(lambda));
    const auto lim = limit_conj(lambda, ss.x);
    if (!inst.check("limit-exists", lim.has_value(), [&] { return "cocharacter " + std::to_string(k); })) return;
    const auto g = rational_conjugacy(ss.x, *lim);
    inst.check("limit-conjugate", g && determinant(*g) != 0 && *g * ss.x * inverse(*g) == *lim, [&] { return "cocharacter " + std::to_string(k); });
  }
}

struct RationalSpectrum {
  RatMatrix x;
  RatMatrix h;  // x = h J h^-1, J in Jordan form
};

inline RationalSpectrum rational_spectrum(Rng& rng, std::size_t n) {
  const RatMatrix h = random_unimodular(rng, n);
  return {h * random_jordan_form(rng, n) * inverse(h), h};
}

inline void theorem_gln(Rng& rng, const FuzzConfig& cfg, Instance& inst) {
  const std::size_t n = random_size(rng, cfg);
  const RationalSpectrum rs = rational_spectrum(rng, n);
  std::vector<GLnCocharacter> samples;
  for (int k = 0; k < 3; ++k) samples.push_back(make_cocharacter(rs.h * random_upper_invertible(rng, n), random_exponents(rng, n)));
  for (int k = 0; k < 2; ++k) samples.push_back(random_cocharacter(rng, n));
  inst.input = io::gln_problem_json(rs.x);
  inst.input["cocharacters"] = io::Json::array();
  for (const auto& s : samples) inst.input["cocharacters"].push_back(io::to_json(s));
  const GlnTheoremReport report = theorem_check_gln(rs.x, samples);
  if (!inst.check("semisimple-limits-conjugate", report.passed)) return;
  for (std::size_t k = 0; k < report.samples.size(); ++k) {
    const auto& s = report.samples[k];
    if (!s.witness) continue;
    inst.check("witness-verified", determinant(*s.witness) != 0 && *s.witness * *report.reference * inverse(*s.witness) == *s.limit,
               [&] { return "sample " + std::to_string(k); });
  }
}

inline void jkv_gln_suite(Rng& rng, const FuzzConfig& cfg, Instance& inst) {
  const RatMatrix x = rational_spectrum(rng, random_size(rng, cfg)).x;
  inst.input = io::gln_problem_json(x);
  const GlnJkvCertificate c = jkv_gln(x);
  const JordanChevalley jc = jordan_chevalley(x);
  inst.check("certificate", c.passed(), [&] { return c.first_failure()->name; });
  inst.check("matches-jordan-chevalley", c.s == jc.s);
  inst.check("nilpotent-part", c.n == x - c.s);
  const auto truth = oracle_semisimple_part(x);
  inst.check("oracle-semisimple-part", truth && *truth == c.s);
}

inline void jordan_chevalley_suite(Rng& rng, const FuzzConfig& cfg, Instance& inst) {
  const std::size_t n = random_size(rng, cfg);
  const bool rational = rng.coin();
  const RatMatrix x = rational ? rational_spectrum(rng, n).x : random_matrix(rng, n, 5);
  inst.input = io::gln_problem_json(x);
  const JordanChevalley jc = jordan_chevalley(x);
  inst.check("sum", jc.s + jc.n == x);
  inst.check("commute", jc.s * jc.n == jc.n * jc.s);
  inst.check("nilpotent", matrix_power(jc.n, n).is_zero());
  const RatPoly m = minimal_polynomial(jc.s);
  inst.check("semisimple", poly_gcd(m, m.derivative()).degree() == 0);
  inst.check("polynomial", jc.p(x) == jc.s);
  const RatMatrix h = random_unimodular(rng, n);
  const RatMatrix h_inv = inverse(h);
  inst.input["conjugator"] = io::to_json(h);
  const JordanChevalley moved = jordan_chevalley(h * x * h_inv);
  inst.check("conjugation-equivariance", moved.s == h * jc.s * h_inv && moved.n == h * jc.n * h_inv);
  if (const auto truth = oracle_semisimple_part(x)) inst.check("oracle-semisimple-part", *truth == jc.s);
}

inline void h_lambda_suite(Rng& rng, const FuzzConfig& cfg, Instance& inst) {
  const std::size_t n = random_size(rng, cfg);
  const GLnCocharacter lambda = random_cocharacter(rng, n);
  const RatMatrix p = random_in_P(rng, lambda);
  const RatMatrix p2 = random_in_P(rng, lambda);
  const RatMatrix x = random_with_limit(rng, lambda, 5);
  inst.input = {{"lambda", io::to_json(lambda)}, {"p", io::to_json(p)}, {"p2", io::to_json(p2)}, {"matrix", io::to_json(x)}};
  const RatMatrix hp = h_lambda(lambda, p);
  inst.check("homomorphism", h_lambda(lambda, p * p2) == hp * h_lambda(lambda, p2));
  inst.check("levi", centralizes(lambda, hp));
  const auto lim = limit_conj(lambda, x);
  if (!inst.check("limit-exists", lim.has_value())) return;
  const auto lhs = limit_conj(lambda, p * x * inverse(p));
  inst.check("p-conj-equivariance", lhs && *lhs == hp * *lim * inverse(hp));
}

inline void bruhat_suite(Rng& rng, const FuzzConfig&, Instance& inst) {
  const RatMatrix g = random_invertible(rng, 1 + rng.index(5), 5);
  inst.input = {{"matrix", io::to_json(g)}};
  const BruhatFactorization f = bruhat(g);
  inst.check("product", f.p * f.w * f.u == g);
  inst.check("p-upper-invertible", is_upper_triangular(f.p) && determinant(f.p) != 0);
  inst.check("u-unitriangular", is_upper_unitriangular(f.u));
  inst.check("w-permutation", is_permutation_matrix(f.w));
}

}  // namespace suites

using SuiteFn = void (*)(Rng&, const FuzzConfig&, Instance&);

inline const std::map<std::string, SuiteFn>& suite_table() {
  static const std::map<std::string, SuiteFn> table = {
      {"lemma-limits", suites::lemma_limits},
      {"limit-equivariance", suites::limit_equivariance},
      {"relint", suites::relint},
      {"compose-mu", suites::compose_mu_suite},
      {"semisimple-limit", suites::semisimple_limit},
      {"parabolic-translate", suites::parabolic_translate},
      {"commuting", suites::commuting},
      {"theorem", suites::theorem},
      {"jkv", suites::jkv},
      {"semisimple-limit-gln", suites::semisimple_limit_gln},
      {"theorem-gln", suites::theorem_gln},
      {"jkv-gln", suites::jkv_gln_suite},
      {"jordan-chevalley", suites::jordan_chevalley_suite},
      {"h-lambda", suites::h_lambda_suite},
      {"bruhat", suites::bruhat_suite},
  };
  return table;
}

inline std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : suite_table()) names.push_back(name);
  return names;
}

inline VerificationReport run_suite(const std::string& name, const FuzzConfig& cfg) {
  const auto it = suite_table().find(name);
  if (it == suite_table().end()) throw Error("unknown suite '" + name + "'");
  cfg.validate();
  const auto started = std::chrono::steady_clock::now();
  VerificationReport report{name, cfg, 0, 0, {}, 0};
  for (std::size_t i = cfg.start; i < cfg.start + cfg.count; ++i) {
    const std::uint64_t s = instance_seed(cfg.seed, i);
    Rng rng(s);
    Instance inst;
    try {
      it->second(rng, cfg, inst);
    } catch (const std::exception& e) {
      inst.fail("exception", e.what());
    }
    ++report.instances;
    report.checks += inst.checks();
    if (inst.failed()) report.failures.push_back({i, s, inst.failure()->name, inst.failure()->detail, std::move(inst.input)});
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

/// Deterministic: wall time is left out.
inline io::Json to_json(const VerificationReport& r) {
  io::Json failures = io::Json::array();
  for (const auto& f : r.failures)
    failures.push_back({{"index", f.index}, {"instance_seed", f.instance_seed}, {"clause", f.clause}, {"detail", f.detail}, {"input", f.input}});
  return {{"suite", r.suite},
          {"seed", r.config.seed},
          {"start", r.config.start},
          {"count", r.config.count},
          {"box", r.config.box},
          {"instances", r.instances},
          {"checks", r.checks},
          {"passed", r.passed()},
          {"failures", std::move(failures)}};
}

}  // namespace jkv::oracle
