#pragma once

// Subcommand bodies. Each returns the output document and an exit code;
// every witness is re-checked here, by direct arithmetic, before it is returned.

#include "jkv/conjugacy.hpp"
#include "jkv/gln.hpp"
#include "jkv/gln_jkv.hpp"
#include "jkv/io.hpp"
#include "jkv/jordan.hpp"
#include "jkv/oracle/limit.hpp"
#include "jkv/oracle/suites.hpp"
#include "jkv/torus.hpp"
#include "jkv/torus_jkv.hpp"

#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace jkv::cli {

using io::Json;

enum ExitCode { kOk = 0, kFalse = 1, kUsage = 2, kUnsupported = 3 };

struct Outcome {
  Json doc;
  int code = kOk;
};

/// Raised when a freshly computed witness does not satisfy its own identity.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw VerificationFailure("re-verification failed: " + what);
}

/// "1,-2"
inline IntVector parse_weight(const std::string& text) {
  if (text.empty()) throw Error("empty integer vector");
  IntVector v;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) v.push_back(parse_integer(part));
  if (text.back() == ',') throw Error("trailing comma in '" + text + "'");
  return v;
}

/// "1,0;0,1"; empty text is the empty set.
inline std::vector<IntVector> parse_weight_list(const std::string& text) {
  std::vector<IntVector> out;
  if (text.empty()) return out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, ';')) out.push_back(parse_weight(part));
  return out;
}

inline void check_rank(const IntVector& v, std::size_t rank, const std::string& flag) {
  if (v.size() != rank) throw Error(flag + " must have " + std::to_string(rank) + " entries");
}

inline io::TorusProblem load_torus(const std::string& path) {
  return io::parse_with(io::load_json(path), [](const Json& j) { return io::torus_problem_from_json(j); });
}

inline io::GlnProblem load_gln(const std::string& path) {
  return io::parse_with(io::load_json(path), [](const Json& j) { return io::gln_problem_from_json(j); });
}

inline GLnCocharacter load_cocharacter(const std::string& path, std::size_t n) {
  GLnCocharacter l = io::parse_with(io::load_json(path), [](const Json& j) { return io::cocharacter_from_json(j); });
  if (l.n() != n) throw Error("cocharacter size does not match the matrix");
  return l;
}

inline Json header(const std::string& command, const std::string& model) { return {{"command", command}, {"model", model}}; }

inline bool pairs_zero_on(const IntVector& lambda, const std::vector<IntVector>& weights) {
  for (const auto& chi : weights)
    if (pairing(lambda, chi) != 0) return false;
  return true;
}

// ---- limit ----

inline Outcome limit_torus(const std::string& file, const std::string& lambda_text) {
  const auto p = load_torus(file);
  const IntVector lambda = parse_weight(lambda_text);
  check_rank(lambda, p.rep.rank(), "--lambda");
  const auto lim = limit(lambda, p.vector);
  const auto check = oracle::oracle_limit(lambda, p.vector.components());
  require(lim.has_value() == check.has_value() && (!lim || lim->components() == *check), "limit disagrees with the t-expansion");
  Json doc = header("limit", "torus");
  doc["lambda"] = io::to_json(lambda);
  doc["exists"] = lim.has_value();
  if (lim) doc["limit"] = io::to_json(*lim);
  return {doc, lim ? kOk : kFalse};
}

inline Outcome limit_gln(const std::string& file, const std::string& cocharacter_file) {
  const auto p = load_gln(file);
  const GLnCocharacter lambda = load_cocharacter(cocharacter_file, p.matrix.rows());
  const auto lim = limit_conj(lambda, p.matrix);
  Json doc = header("limit", "gln");
  doc["lambda"] = io::to_json(lambda);
  doc["exists"] = lim.has_value();
  if (lim) {
    require(characteristic_polynomial(*lim).coefficients() == characteristic_polynomial(p.matrix).coefficients(), "limit keeps the characteristic polynomial");
    doc["limit"] = io::to_json(*lim);
  }
  return {doc, lim ? kOk : kFalse};
}

// ---- semisimple ----

inline Outcome semisimple_torus(const std::string& file) {
  const auto p = load_torus(file);
  const WeightSet s = support(p.vector);
  const RelintResult r = origin_in_relint(s);
  Json doc = header("semisimple", "torus");
  doc["semisimple"] = r.in_relint;
  if (r.in_relint) {
    Rational total = 0;
    std::vector<Rational> centre(s.rank, Rational(0));
    Json bary = Json::array();
    for (std::size_t i = 0; i < s.size(); ++i) {
      require(r.barycentric[i] > 0, "barycentric coefficients positive");
      total += r.barycentric[i];
      for (std::size_t k = 0; k < s.rank; ++k) centre[k] += r.barycentric[i] * s.points[i][k];
      bary.push_back({{"chi", io::to_json(s.points[i])}, {"coefficient", io::to_json(r.barycentric[i])}});
    }
    require(s.empty() || total == 1, "barycentric coefficients sum to 1");
    for (const auto& c : centre) require(c == 0, "barycentric combination is the origin");
    doc["barycentric"] = bary;
    return {doc, kOk};
  }
  const IntVector& lambda = *r.cocharacter;
  bool somewhere = false;
  for (const auto& chi : s.points) {
    require(pairing(lambda, chi) >= 0, "destabilizing cocharacter pairs >= 0");
    somewhere = somewhere || pairing(lambda, chi) > 0;
  }
  require(somewhere, "destabilizing cocharacter pairs > 0 somewhere");
  const auto lim = limit(lambda, p.vector);
  require(lim && !(*lim == p.vector), "limit along the cocharacter leaves the orbit's support");
  doc["cocharacter"] = io::to_json(lambda);
  doc["origin_in_hull"] = r.origin_in_hull;
  doc["limit"] = io::to_json(*lim);
  return {doc, kFalse};
}

inline Outcome semisimple_gln(const std::string& file) {
  const auto p = load_gln(file);
  const RatPoly m = minimal_polynomial(p.matrix);
  require(m(p.matrix).is_zero(), "minimal polynomial annihilates X");
  const bool squarefree = poly_gcd(m, m.derivative()).degree() == 0;
  Json doc = header("semisimple", "gln");
  doc["semisimple"] = squarefree;
  doc["minimal_polynomial"] = io::to_json(m);
  return {doc, squarefree ? kOk : kFalse};
}

// ---- nilpotent ----

inline Outcome nilpotent_torus(const std::string& file, const std::string& fixed_text) {
  const auto p = load_torus(file);
  const std::vector<IntVector> fixed = parse_weight_list(fixed_text);
  for (const auto& chi : fixed) check_rank(chi, p.rep.rank(), "--fixed weight");
  const auto lambda = is_nilpotent(p.vector, WeightSet(p.rep.rank(), fixed));
  Json doc = header("nilpotent", "torus");
  Json fixed_json = Json::array();
  for (const auto& chi : fixed) fixed_json.push_back(io::to_json(chi));
  doc["fixed"] = fixed_json;
  doc["nilpotent"] = lambda.has_value();
  if (lambda) {
    require(pairs_zero_on(*lambda, fixed), "cocharacter fixes the given weights");
    for (const auto& [chi, x] : p.vector.components()) require(pairing(*lambda, chi) >= 1, "cocharacter contracts every component");
    doc["cocharacter"] = io::to_json(*lambda);
  }
  return {doc, lambda ? kOk : kFalse};
}

inline Outcome nilpotent_gln(const std::string& file) {
  const auto p = load_gln(file);
  const bool nilpotent = is_nilpotent_matrix(p.matrix);
  Json doc = header("nilpotent", "gln");
  doc["nilpotent"] = nilpotent;
  if (nilpotent) {
    const GlnJkvCertificate c = jkv_gln(p.matrix);
    const auto lim = limit_conj(c.lambda, p.matrix);
    require(lim && lim->is_zero(), "cocharacter contracts X to 0");
    doc["cocharacter"] = io::to_json(c.lambda);
  }
  return {doc, nilpotent ? kOk : kFalse};
}

// ---- jkv / certify-jkv ----

inline Outcome jkv_torus(const std::string& file) {
  const auto p = load_torus(file);
  const TorusJkvCertificate c = jkv_decompose(p.rep, p.vector);
  const TorusJkvCertificate again = jkv_certify(p.rep, p.vector, c.s, c.n, c.lambda);
  require(again.passed() == c.passed(), "certificate clauses");
  Json doc = header("jkv", "torus");
  doc["decomposition"] = io::to_json(c);
  return {doc, c.passed() ? kOk : kFalse};
}

inline Outcome jkv_gln_command(const std::string& file) {
  const auto p = load_gln(file);
  const GlnJkvCertificate c = jkv_gln(p.matrix);
  const GlnJkvCertificate again = jkv_certify_gln(p.matrix, c.s, c.n, c.lambda, c.p);
  require(again.passed() == c.passed(), "certificate clauses");
  Json doc = header("jkv", "gln");
  doc["decomposition"] = io::to_json(c);
  return {doc, c.passed() ? kOk : kFalse};
}

inline Outcome certify_torus(const std::string& file, const std::string& certificate_file) {
  const auto p = load_torus(file);
  const auto claim = io::parse_with(io::load_json(certificate_file), [&](const Json& j) { return io::torus_claim_from_json(j, p.rep); });
  const TorusJkvCertificate c = jkv_certify(p.rep, p.vector, claim.s, claim.n, claim.lambda);
  Json doc = header("certify-jkv", "torus");
  doc["certificate"] = io::to_json(c);
  return {doc, c.passed() ? kOk : kFalse};
}

inline Outcome certify_gln(const std::string& file, const std::string& certificate_file) {
  const auto p = load_gln(file);
  const auto claim = io::parse_with(io::load_json(certificate_file), [&](const Json& j) { return io::gln_claim_from_json(j, p.matrix.rows()); });
  const GlnJkvCertificate c = jkv_certify_gln(p.matrix, claim.s, claim.n, claim.lambda, std::nullopt);
  Json doc = header("certify-jkv", "gln");
  doc["certificate"] = io::to_json(c);
  return {doc, c.passed() ? kOk : kFalse};
}

// ---- torus-only commands ----

inline Outcome lambda_min_command(const std::string& file, long box) {
  const auto p = load_torus(file);
  const LambdaMin lm = lambda_min(p.rep, p.vector, box);
  for (const auto& lambda : lm.witnesses) {
    const auto lim = limit(lambda, p.vector);
    require(lim && is_semisimple(*lim).in_relint, "witness has a semisimple limit");
    require(dim_V_lambda_zero(p.rep, lambda) == lm.dim, "witness attains the minimum");
  }
  Json doc = header("lambda-min", "torus");
  doc["box"] = box;
  doc["box_too_small"] = lm.box_too_small;
  if (!lm.box_too_small) {
    doc["dim"] = lm.dim;
    Json w = Json::array();
    for (const auto& lambda : lm.witnesses) w.push_back(io::to_json(lambda));
    doc["witnesses"] = w;
  }
  return {doc, lm.box_too_small ? kUnsupported : kOk};
}

inline Outcome orbit_eq_command(const std::string& file, const std::string& file2) {
  const auto p = load_torus(file);
  RepVector target;
  if (!file2.empty()) {
    const auto q = load_torus(file2);
    if (io::to_json(q.rep) != io::to_json(p.rep)) throw Error("the two files describe different representations");
    if (p.target || q.target) throw Error("give either a target field or a second file, not both");
    target = q.vector;
  } else {
    if (!p.target) throw Error("orbit-eq needs a 'target' field or --file2");
    target = *p.target;
  }
  const auto g = same_orbit(p.rep, p.vector, target);
  if (g) require(act(p.rep, *g, p.vector) == target, "witness maps the vector onto the target");
  Json doc = header("orbit-eq", "torus");
  doc["same_orbit"] = g.has_value();
  if (g) doc["witness"] = io::to_json(*g);
  return {doc, g ? kOk : kFalse};
}

inline Outcome compose_mu_command(const std::string& file, const std::string& lambda0_text, const std::string& lambda_text) {
  const auto p = load_torus(file);
  const IntVector lambda0 = parse_weight(lambda0_text);
  const IntVector lambda = parse_weight(lambda_text);
  check_rank(lambda0, p.rep.rank(), "--lambda0");
  check_rank(lambda, p.rep.rank(), "--lambda");
  const ComposedCocharacter c = compose_mu(lambda0, lambda, p.rep);
  const MuRelations rel = mu_relations(p.rep, lambda0, lambda, c.mu);
  require(rel.all(), "mu relations");
  Json doc = header("compose-mu", "torus");
  doc["lambda0"] = io::to_json(lambda0);
  doc["lambda"] = io::to_json(lambda);
  doc["n"] = io::to_json(c.n);
  doc["mu"] = io::to_json(c.mu);
  doc["relations"] = {{"zero_part", rel.zero_part}, {"positive_part", rel.positive_part}, {"nonneg_part", rel.nonneg_part}};
  return {doc, kOk};
}

inline Outcome survey_command(const std::string& file, long box) {
  const auto p = load_torus(file);
  const LimitSurvey survey = limit_survey(p.rep, p.vector, box);
  const OrbitCheck oc = check_semisimple_limits_one_orbit(p.rep, survey);
  Json witnesses = Json::array();
  for (const auto& [v, g] : oc.witnesses) {
    require(act(p.rep, g, oc.witnesses.front().first) == v, "orbit witness");
    witnesses.push_back({{"limit", io::to_json(v)}, {"element", io::to_json(g)}});
  }
  Json doc = header("survey", "torus");
  doc["survey"] = io::to_json(survey);
  doc["one_orbit"] = oc.passed;
  doc["distinct_semisimple_limits"] = oc.distinct_limits;
  doc["orbit_witnesses"] = witnesses;
  if (!oc.passed) doc["failure"] = oc.failure;
  return {doc, oc.passed ? kOk : kFalse};
}

// ---- GL_n-only commands ----

inline Outcome bruhat_command(const std::string& file) {
  const auto p = load_gln(file);
  const BruhatFactorization f = bruhat(p.matrix);
  require(f.p * f.w * f.u == p.matrix, "p w u = g");
  require(is_upper_triangular(f.p) && determinant(f.p) != 0, "p invertible upper triangular");
  require(is_permutation_matrix(f.w), "w permutation");
  require(is_upper_unitriangular(f.u), "u upper unitriangular");
  Json doc = header("bruhat", "gln");
  doc["p"] = io::to_json(f.p);
  doc["w"] = io::to_json(f.w);
  doc["u"] = io::to_json(f.u);
  return {doc, kOk};
}

inline Outcome jordan_chevalley_command(const std::string& file) {
  const auto p = load_gln(file);
  const JordanChevalley jc = jordan_chevalley(p.matrix);
  require(jc.s + jc.n == p.matrix, "X = S + N");
  require(jc.s * jc.n == jc.n * jc.s, "SN = NS");
  require(matrix_power(jc.n, p.matrix.rows()).is_zero(), "N nilpotent");
  require(is_semisimple_matrix(jc.s), "S semisimple");
  require(jc.p(p.matrix) == jc.s, "S = p(X)");
  Json doc = header("jordan-chevalley", "gln");
  doc["s"] = io::to_json(jc.s);
  doc["n"] = io::to_json(jc.n);
  doc["polynomial"] = io::to_json(jc.p);
  return {doc, kOk};
}

inline Outcome conjugacy_command(const std::string& file, const std::string& file2) {
  const auto p = load_gln(file);
  RatMatrix y;
  if (!file2.empty()) {
    if (p.target) throw Error("give either a target field or --file2, not both");
    y = load_gln(file2).matrix;
    if (y.rows() != p.matrix.rows()) throw Error("the two matrices have different sizes");
  } else {
    if (!p.target) throw Error("conjugacy needs a 'target' field or --file2");
    y = *p.target;
  }
  const auto g = rational_conjugacy(p.matrix, y);
  if (g) require(determinant(*g) != 0 && *g * p.matrix * inverse(*g) == y, "g X g^-1 = Y");
  Json doc = header("conjugacy", "gln");
  doc["conjugate"] = g.has_value();
  doc["verdict"] = g ? "conjugate" : "not conjugate";
  if (g) doc["witness"] = io::to_json(*g);
  return {doc, g ? kOk : kFalse};
}

// ---- verify ----

inline Outcome verify_command(const std::string& suite, const oracle::FuzzConfig& cfg, double* wall_seconds) {
  const oracle::VerificationReport r = oracle::run_suite(suite, cfg);
  if (wall_seconds) *wall_seconds = r.wall_seconds;
  Json doc = oracle::to_json(r);
  doc["command"] = "verify";
  return {doc, r.passed() ? kOk : kFalse};
}

}  // namespace jkv::cli
