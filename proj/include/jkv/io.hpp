#pragma once

// JSON problem files and result serialization. Rationals are strings "p/q";
// weights and exponents are JSON integers. Objects reject unknown fields.

#include "jkv/clause.hpp"
#include "jkv/gln.hpp"
#include "jkv/gln_jkv.hpp"
#include "jkv/jordan.hpp"
#include "jkv/torus.hpp"
#include "jkv/torus_jkv.hpp"

#include "json.hpp"

#include <climits>
#include <fstream>
#include <initializer_list>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace jkv::io {

using Json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

// ---- parsing ----

inline void expect_fields(const Json& j, std::initializer_list<const char*> required, std::initializer_list<const char*> optional,
                          const std::string& what) {
  if (!j.is_object()) throw Error(what + ": expected an object");
  for (const char* key : required)
    if (!j.contains(key)) throw Error(what + ": missing field '" + key + "'");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : required) known = known || key == k;
    for (const char* k : optional) known = known || key == k;
    if (!known) throw Error(what + ": unknown field '" + key + "'");
  }
}

inline Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw Error("expected a rational string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

inline long long_from_json(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw Error(what + ": expected an integer, got " + j.dump());
  return j.get<long>();
}

inline std::size_t size_from_json(const Json& j, const std::string& what) {
  const long v = long_from_json(j, what);
  if (v < 0) throw Error(what + ": must be nonnegative");
  return static_cast<std::size_t>(v);
}

inline const Json& array_at(const Json& j, const std::string& what) {
  if (!j.is_array()) throw Error(what + ": expected an array");
  return j;
}

inline IntVector int_vector_from_json(const Json& j, const std::string& what) {
  IntVector v;
  for (const auto& x : array_at(j, what)) v.push_back(Integer(long_from_json(x, what)));
  return v;
}

inline std::vector<long> longs_from_json(const Json& j, const std::string& what) {
  std::vector<long> v;
  for (const auto& x : array_at(j, what)) v.push_back(long_from_json(x, what));
  return v;
}

inline std::vector<Rational> rationals_from_json(const Json& j, const std::string& what) {
  std::vector<Rational> v;
  for (const auto& x : array_at(j, what)) v.push_back(rational_from_json(x));
  return v;
}

template <class T, class Entry>
Matrix<T> matrix_from_json(const Json& j, const std::string& what, Entry entry) {
  const auto& rows = array_at(j, what);
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : array_at(rows[0], what).size();
  Matrix<T> m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (array_at(rows[i], what).size() != c) throw Error(what + ": ragged matrix");
    for (std::size_t k = 0; k < c; ++k) m(i, k) = entry(rows[i][k]);
  }
  return m;
}

inline RatMatrix rat_matrix_from_json(const Json& j, const std::string& what) {
  return matrix_from_json<Rational>(j, what, [](const Json& x) { return rational_from_json(x); });
}

inline IntMatrix int_matrix_from_json(const Json& j, const std::string& what) {
  return matrix_from_json<Integer>(j, what, [&](const Json& x) { return Integer(long_from_json(x, what)); });
}

inline RatMatrix square_matrix_from_json(const Json& j, std::size_t n, const std::string& what) {
  RatMatrix m = rat_matrix_from_json(j, what);
  if (m.rows() != n || m.cols() != n) throw Error(what + ": expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  return m;
}

/// Weight keys in `blocks` are written "1,-2".
inline IntVector weight_from_key(const std::string& key) {
  IntVector chi;
  std::stringstream in(key);
  std::string part;
  while (std::getline(in, part, ',')) chi.push_back(parse_integer(part));
  if (chi.empty()) throw Error("empty weight key");
  return chi;
}

inline std::string weight_key(const IntVector& chi) {
  std::string s;
  for (std::size_t i = 0; i < chi.size(); ++i) s += (i ? "," : "") + chi[i].get_str();
  return s;
}

inline RepVector rep_vector_from_json(const Json& j, const TorusRep& rep, const std::string& what) {
  RepVector v(rep.rank());
  for (const auto& entry : array_at(j, what)) {
    expect_fields(entry, {"chi", "coords"}, {}, what + " component");
    const IntVector chi = int_vector_from_json(entry["chi"], what + ".chi");
    if (v.get(chi)) throw Error(what + ": weight " + to_string(chi) + " listed twice");
    v.set(chi, rationals_from_json(entry["coords"], what + ".coords"));
  }
  validate(rep, v);
  return v;
}

inline FiniteGroup finite_group_from_json(const Json& j) {
  expect_fields(j, {"elements", "table"}, {}, "finite_group");
  FiniteGroup g;
  for (const auto& e : array_at(j["elements"], "finite_group.elements")) {
    expect_fields(e, {"lattice", "blocks"}, {}, "finite_group element");
    FiniteElement element{int_matrix_from_json(e["lattice"], "lattice"), {}};
    if (!e["blocks"].is_object()) throw Error("blocks: expected an object keyed by weight");
    for (const auto& [key, block] : e["blocks"].items())
      element.blocks.emplace(weight_from_key(key), rat_matrix_from_json(block, "block " + key));
    g.elements.push_back(std::move(element));
  }
  for (const auto& row : array_at(j["table"], "finite_group.table")) {
    std::vector<std::size_t> r;
    for (const auto& x : array_at(row, "table row")) r.push_back(size_from_json(x, "table entry"));
    g.table.push_back(std::move(r));
  }
  const std::size_t order = g.elements.size();
  if (g.table.size() != order) throw Error("group table has wrong number of rows");
  for (const auto& row : g.table) {
    if (row.size() != order) throw Error("group table has a row of wrong length");
    for (auto k : row)
      if (k >= order) throw Error("group table entry out of range");
  }
  complete_group(g);
  return g;
}

inline TorusRep torus_rep_from_json(const Json& j) {
  const std::size_t rank = size_from_json(j.at("rank"), "rank");
  std::vector<WeightSpace> weights;
  for (const auto& w : array_at(j.at("weights"), "weights")) {
    expect_fields(w, {"chi", "dim"}, {}, "weight");
    weights.push_back({int_vector_from_json(w["chi"], "weight chi"), size_from_json(w["dim"], "weight dim")});
  }
  std::optional<FiniteGroup> finite;
  if (j.contains("finite_group")) finite = finite_group_from_json(j["finite_group"]);
  return TorusRep(rank, std::move(weights), std::move(finite));
}

struct TorusProblem {
  TorusRep rep;
  RepVector vector;
  std::optional<RepVector> target;
};

inline TorusProblem torus_problem_from_json(const Json& j) {
  expect_fields(j, {"rank", "weights", "vector"}, {"finite_group", "target"}, "torus problem");
  TorusProblem p;
  p.rep = torus_rep_from_json(j);
  p.vector = rep_vector_from_json(j["vector"], p.rep, "vector");
  if (j.contains("target")) p.target = rep_vector_from_json(j["target"], p.rep, "target");
  return p;
}

struct GlnProblem {
  RatMatrix matrix;
  std::optional<RatMatrix> target;
};

inline GlnProblem gln_problem_from_json(const Json& j) {
  expect_fields(j, {"n", "matrix"}, {"target"}, "GL_n problem");
  const std::size_t n = size_from_json(j["n"], "n");
  if (n == 0) throw Error("n must be positive");
  GlnProblem p{square_matrix_from_json(j["matrix"], n, "matrix"), std::nullopt};
  if (j.contains("target")) p.target = square_matrix_from_json(j["target"], n, "target");
  return p;
}

inline GLnCocharacter cocharacter_from_json(const Json& j) {
  expect_fields(j, {"g", "exponents"}, {}, "cocharacter");
  const RatMatrix g = rat_matrix_from_json(j["g"], "g");
  return make_cocharacter(g, longs_from_json(j["exponents"], "exponents"));
}

struct TorusClaim {
  RepVector s;
  RepVector n;
  IntVector lambda;
};

inline TorusClaim torus_claim_from_json(const Json& j, const TorusRep& rep) {
  expect_fields(j, {"s", "n", "lambda"}, {}, "torus certificate");
  TorusClaim c{rep_vector_from_json(j["s"], rep, "s"), rep_vector_from_json(j["n"], rep, "n"), int_vector_from_json(j["lambda"], "lambda")};
  if (c.lambda.size() != rep.rank()) throw Error("lambda has wrong rank");
  return c;
}

struct GlnClaim {
  RatMatrix s;
  RatMatrix n;
  GLnCocharacter lambda;
};

inline GlnClaim gln_claim_from_json(const Json& j, std::size_t size) {
  expect_fields(j, {"s", "n", "lambda"}, {}, "GL_n certificate");
  GlnClaim c{square_matrix_from_json(j["s"], size, "s"), square_matrix_from_json(j["n"], size, "n"), cocharacter_from_json(j["lambda"])};
  if (c.lambda.n() != size) throw Error("lambda has wrong size");
  return c;
}

inline Json parse_json_text(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(source + ": " + e.what());
  }
}

inline Json load_json(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_json_text(buffer.str(), path);
}

/// Wraps nlohmann type errors (wrong JSON kinds) as input errors.
template <class F>
auto parse_with(const Json& j, F parse) {
  try {
    return parse(j);
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed input: ") + e.what());
  }
}

// ---- serialization ----

inline Json to_json(const Rational& q) { return to_string(q); }

inline Json to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

inline Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline Json to_json(const std::vector<Rational>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

inline Json to_json(const std::vector<long>& v) { return Json(v); }

template <class T>
Json to_json(const Matrix<T>& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json to_json(const RepVector& v) {
  Json a = Json::array();
  for (const auto& [chi, coords] : v.components()) a.push_back({{"chi", to_json(chi)}, {"coords", to_json(coords)}});
  return a;
}

inline Json to_json(const RatPoly& p) {
  return {{"coefficients", to_json(p.coefficients())}, {"text", p.to_string()}};
}

inline Json to_json(const GLnCocharacter& lambda) { return {{"g", to_json(lambda.g)}, {"exponents", to_json(lambda.exponents)}}; }

inline Json to_json(const GroupElement& g) { return {{"torus", to_json(g.torus)}, {"finite_index", g.finite_index}}; }

inline Json to_json(const std::vector<Clause>& clauses) {
  Json a = Json::array();
  for (const auto& c : clauses) {
    Json entry = {{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) entry["detail"] = c.detail;
    a.push_back(std::move(entry));
  }
  return a;
}

inline Json to_json(const TorusRep& rep) {
  Json j;
  j["rank"] = rep.rank();
  j["weights"] = Json::array();
  for (const auto& w : rep.weights()) j["weights"].push_back({{"chi", to_json(w.chi)}, {"dim", w.dim}});
  if (const auto& g = rep.finite_group()) {
    Json elements = Json::array();
    for (const auto& e : g->elements) {
      Json blocks = Json::object();
      for (const auto& [chi, block] : e.blocks) blocks[weight_key(chi)] = to_json(block);
      elements.push_back({{"lattice", to_json(e.lattice)}, {"blocks", std::move(blocks)}});
    }
    j["finite_group"] = {{"elements", std::move(elements)}, {"table", g->table}};
  }
  return j;
}

inline Json torus_problem_json(const TorusRep& rep, const RepVector& v) {
  Json j = to_json(rep);
  j["vector"] = to_json(v);
  return j;
}

inline Json gln_problem_json(const RatMatrix& x) { return {{"n", x.rows()}, {"matrix", to_json(x)}}; }

inline Json to_json(const FaceCertificate& f) {
  Json face = Json::array();
  for (const auto& chi : f.face) face.push_back(to_json(chi));
  return {{"face", std::move(face)}, {"supporter", to_json(f.supporter)}, {"barycentric", to_json(f.barycentric)}};
}

inline Json to_json(const TorusJkvCertificate& c) {
  return {{"s", to_json(c.s)}, {"n", to_json(c.n)}, {"lambda", to_json(c.lambda)}, {"clauses", to_json(c.clauses)}, {"passed", c.passed()}};
}

inline Json to_json(const GlnJkvCertificate& c) {
  Json j = {{"s", to_json(c.s)}, {"n", to_json(c.n)}, {"lambda", to_json(c.lambda)}, {"clauses", to_json(c.clauses)}, {"passed", c.passed()}};
  if (c.p) j["polynomial"] = to_json(*c.p);
  return j;
}

inline Json to_json(const LimitSurvey& survey) {
  Json entries = Json::array();
  for (const auto& e : survey.entries) {
    Json entry = {{"lambda", to_json(e.lambda)}, {"limit_exists", e.limit.has_value()}};
    if (e.limit) {
      entry["limit"] = to_json(*e.limit);
      entry["semisimple"] = e.semisimple;
    }
    entries.push_back(std::move(entry));
  }
  return {{"bound", survey.bound}, {"entries", std::move(entries)}};
}

/// Output document with the format version stamped in; keys come out sorted.
inline std::string render(Json j) {
  j["format_version"] = kFormatVersion;
  return j.dump(2) + "\n";
}

}  // namespace jkv::io
