#pragma once

// The group A x| W: a split torus A of rank r extended by a finite group W
// that acts on the character lattice and moves weight spaces around. The
// module is given as an explicit direct sum of weight spaces V^chi.

#include "jkv/lattice.hpp"
#include "jkv/matrix.hpp"
#include "jkv/polytope.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace jkv {

struct WeightSpace {
  IntVector chi;
  std::size_t dim = 1;
};

/// One element w of the finite group: a unimodular map on characters and,
/// for each weight chi, an invertible block V^chi -> V^{w chi}.
struct FiniteElement {
  IntMatrix lattice;
  std::map<IntVector, RatMatrix> blocks;
};

struct FiniteGroup {
  std::vector<FiniteElement> elements;
  std::vector<std::vector<std::size_t>> table;  // table[i][j] = index of e_i * e_j
  std::size_t identity = 0;
  std::vector<std::size_t> inverse;

  std::size_t order() const { return elements.size(); }
};

class TorusRep {
 public:
  TorusRep() = default;
  TorusRep(std::size_t rank, std::vector<WeightSpace> weights, std::optional<FiniteGroup> finite = std::nullopt)
      : rank_(rank), weights_(std::move(weights)), finite_(std::move(finite)) {
    if (rank_ == 0) throw Error("torus rank must be positive");
    for (std::size_t i = 0; i < weights_.size(); ++i) {
      const auto& w = weights_[i];
      if (w.chi.size() != rank_) throw Error("weight " + to_string(w.chi) + " has wrong rank");
      if (w.dim == 0) throw Error("weight space " + to_string(w.chi) + " has dimension 0");
      if (!index_.emplace(w.chi, i).second) throw Error("duplicate weight " + to_string(w.chi));
    }
    if (finite_) validate_finite_group();
  }

  std::size_t rank() const { return rank_; }
  const std::vector<WeightSpace>& weights() const { return weights_; }
  const std::optional<FiniteGroup>& finite_group() const { return finite_; }
  std::size_t group_order() const { return finite_ ? finite_->order() : 1; }
  std::size_t identity_index() const { return finite_ ? finite_->identity : 0; }

  bool has_weight(const IntVector& chi) const { return index_.contains(chi); }
  std::size_t dim(const IntVector& chi) const {
    auto it = index_.find(chi);
    return it == index_.end() ? 0 : weights_[it->second].dim;
  }
  std::size_t total_dim() const {
    std::size_t d = 0;
    for (const auto& w : weights_) d += w.dim;
    return d;
  }
  WeightSet weight_set() const {
    std::vector<IntVector> pts;
    for (const auto& w : weights_) pts.push_back(w.chi);
    return WeightSet(rank_, std::move(pts));
  }

 private:
  void validate_finite_group() const {
    const auto& g = *finite_;
    const std::size_t order = g.elements.size();
    if (order == 0) throw Error("finite group has no elements");
    if (g.table.size() != order) throw Error("group table has wrong number of rows");
    for (const auto& row : g.table) {
      if (row.size() != order) throw Error("group table has a row of wrong length");
      for (auto k : row)
        if (k >= order) throw Error("group table entry out of range");
    }
    for (std::size_t i = 0; i < order; ++i) {
      const auto& e = g.elements[i];
      if (e.lattice.rows() != rank_ || e.lattice.cols() != rank_) throw Error("lattice action has wrong shape");
      const Integer det = determinant(e.lattice);
      if (det != 1 && det != -1) throw Error("lattice action of element " + std::to_string(i) + " is not unimodular");
      for (const auto& w : weights_) {
        const IntVector image = e.lattice * w.chi;
        if (dim(image) != w.dim)
          throw Error("element " + std::to_string(i) + " does not map weight " + to_string(w.chi) + " onto a weight of the same dimension");
        auto it = e.blocks.find(w.chi);
        if (it == e.blocks.end()) throw Error("element " + std::to_string(i) + " lacks a block for weight " + to_string(w.chi));
        if (it->second.rows() != w.dim || it->second.cols() != w.dim) throw Error("block for weight " + to_string(w.chi) + " has wrong shape");
        if (determinant(it->second) == 0) throw Error("block for weight " + to_string(w.chi) + " is singular");
      }
      for (const auto& [chi, block] : e.blocks)
        if (!has_weight(chi)) throw Error("block given for unknown weight " + to_string(chi));
    }
    // the table must describe the composition of the given maps
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j) {
        const auto& a = g.elements[i];
        const auto& b = g.elements[j];
        const auto& ab = g.elements[g.table[i][j]];
        if (!(a.lattice * b.lattice == ab.lattice)) throw Error("group table disagrees with lattice actions");
        for (const auto& w : weights_) {
          const IntVector mid = b.lattice * w.chi;
          if (!(a.blocks.at(mid) * b.blocks.at(w.chi) == ab.blocks.at(w.chi))) throw Error("group table disagrees with block maps");
        }
      }
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = 0; j < order; ++j)
        for (std::size_t k = 0; k < order; ++k)
          if (g.table[g.table[i][j]][k] != g.table[i][g.table[j][k]]) throw Error("group table is not associative");
    if (g.identity >= order) throw Error("identity index out of range");
    for (std::size_t i = 0; i < order; ++i)
      if (g.table[g.identity][i] != i || g.table[i][g.identity] != i) throw Error("identity index is not a two-sided identity");
    if (g.inverse.size() != order) throw Error("inverse list has wrong length");
    for (std::size_t i = 0; i < order; ++i)
      if (g.table[i][g.inverse[i]] != g.identity) throw Error("element " + std::to_string(i) + " has no inverse");
  }

  std::size_t rank_ = 0;
  std::vector<WeightSpace> weights_;
  std::optional<FiniteGroup> finite_;
  std::map<IntVector, std::size_t> index_;
};

/// Fills in identity and inverse from the table, for callers building groups by hand.
inline void complete_group(FiniteGroup& g) {
  const std::size_t order = g.elements.size();
  bool found = false;
  for (std::size_t e = 0; e < order && !found; ++e) {
    bool ok = true;
    for (std::size_t i = 0; i < order && ok; ++i) ok = g.table[e][i] == i && g.table[i][e] == i;
    if (ok) {
      g.identity = e;
      found = true;
    }
  }
  if (!found) throw Error("group table has no identity");
  g.inverse.assign(order, order);
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t j = 0; j < order; ++j)
      if (g.table[i][j] == g.identity) g.inverse[i] = j;
  for (auto inv : g.inverse)
    if (inv == order) throw Error("group table has an element without inverse");
}

/// v = sum of components v_chi; absent weights are zero, stored ones nonzero.
class RepVector {
 public:
  using Components = std::map<IntVector, std::vector<Rational>>;

  RepVector() = default;
  explicit RepVector(std::size_t rank) : rank_(rank) {}

  std::size_t rank() const { return rank_; }
  const Components& components() const { return components_; }
  bool is_zero() const { return components_.empty(); }

  void set(const IntVector& chi, std::vector<Rational> coords) {
    if (chi.size() != rank_) throw Error("component weight " + to_string(chi) + " has wrong rank");
    bool nonzero = false;
    for (const auto& x : coords) nonzero = nonzero || x != 0;
    if (nonzero)
      components_[chi] = std::move(coords);
    else
      components_.erase(chi);
  }

  const std::vector<Rational>* get(const IntVector& chi) const {
    auto it = components_.find(chi);
    return it == components_.end() ? nullptr : &it->second;
  }

  friend bool operator==(const RepVector& a, const RepVector& b) { return a.rank_ == b.rank_ && a.components_ == b.components_; }

  friend RepVector operator+(const RepVector& a, const RepVector& b) { return combine(a, b, 1); }
  friend RepVector operator-(const RepVector& a, const RepVector& b) { return combine(a, b, -1); }

 private:
  static RepVector combine(const RepVector& a, const RepVector& b, int sign) {
    if (a.rank_ != b.rank_) throw Error("vector rank mismatch");
    RepVector c = a;
    for (const auto& [chi, y] : b.components_) {
      std::vector<Rational> x = a.get(chi) ? *a.get(chi) : std::vector<Rational>(y.size(), Rational(0));
      if (x.size() != y.size()) throw Error("component dimension mismatch at " + to_string(chi));
      for (std::size_t i = 0; i < x.size(); ++i) x[i] += sign * y[i];
      c.set(chi, std::move(x));
    }
    return c;
  }

  std::size_t rank_ = 0;
  Components components_;
};

/// Checks component dimensions against the weight spaces of `rep`.
inline void validate(const TorusRep& rep, const RepVector& v) {
  if (v.rank() != rep.rank()) throw Error("vector rank does not match the representation");
  for (const auto& [chi, x] : v.components()) {
    const std::size_t d = rep.dim(chi);
    if (d == 0) throw Error("vector has a component at " + to_string(chi) + ", which is not a weight");
    if (x.size() != d) throw Error("component at " + to_string(chi) + " has dimension " + std::to_string(x.size()) + ", expected " + std::to_string(d));
  }
}

/// g = (a, w): acts by w first, then by the torus element a.
struct GroupElement {
  std::vector<Rational> torus;
  std::size_t finite_index = 0;
};

inline GroupElement identity_element(const TorusRep& rep) {
  return {std::vector<Rational>(rep.rank(), Rational(1)), rep.identity_index()};
}

/// chi(a) = prod a_i^{chi_i}
inline Rational evaluate_character(const IntVector& chi, const std::vector<Rational>& a) {
  Rational value = 1;
  for (std::size_t i = 0; i < chi.size(); ++i)
    if (chi[i] != 0) value *= pow(a[i], chi[i]);
  return value;
}

inline WeightSet support(const RepVector& v) {
  std::vector<IntVector> pts;
  for (const auto& [chi, x] : v.components()) pts.push_back(chi);
  return WeightSet(v.rank(), std::move(pts));
}

inline RepVector act(const TorusRep& rep, const GroupElement& g, const RepVector& v) {
  validate(rep, v);
  if (g.torus.size() != rep.rank()) throw Error("torus part has wrong length");
  for (const auto& a : g.torus)
    if (a == 0) throw Error("torus part has a zero entry");
  if (g.finite_index >= rep.group_order()) throw Error("finite index out of range");
  const FiniteElement* w = nullptr;
  if (rep.finite_group() && g.finite_index != rep.identity_index()) w = &rep.finite_group()->elements[g.finite_index];

  RepVector out(rep.rank());
  for (const auto& [chi, x] : v.components()) {
    IntVector target = chi;
    std::vector<Rational> y = x;
    if (w) {
      target = w->lattice * chi;
      y = w->blocks.at(chi) * x;
    }
    const Rational scale = evaluate_character(target, g.torus);
    for (auto& c : y) c *= scale;
    out.set(target, std::move(y));
  }
  return out;
}

namespace detail {

/// The torus element w a w^{-1}, given the lattice matrix of w^{-1}.
inline std::vector<Rational> conjugate_torus(const IntMatrix& inverse_lattice, const std::vector<Rational>& a) {
  const std::size_t r = a.size();
  std::vector<Rational> b(r, Rational(1));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (inverse_lattice(j, i) != 0) b[i] *= pow(a[j], inverse_lattice(j, i));
  return b;
}

}  // namespace detail

/// g1 * g2
inline GroupElement compose(const TorusRep& rep, const GroupElement& g1, const GroupElement& g2) {
  if (!rep.finite_group()) {
    GroupElement g{g1.torus, 0};
    for (std::size_t i = 0; i < g.torus.size(); ++i) g.torus[i] *= g2.torus[i];
    return g;
  }
  const auto& grp = *rep.finite_group();
  const auto& w1_inverse = grp.elements[grp.inverse[g1.finite_index]].lattice;
  GroupElement g{detail::conjugate_torus(w1_inverse, g2.torus), grp.table[g1.finite_index][g2.finite_index]};
  for (std::size_t i = 0; i < g.torus.size(); ++i) g.torus[i] *= g1.torus[i];
  return g;
}

inline GroupElement inverse(const TorusRep& rep, const GroupElement& g) {
  std::vector<Rational> a_inv;
  for (const auto& a : g.torus) a_inv.push_back(1 / a);
  if (!rep.finite_group()) return {a_inv, 0};
  const auto& grp = *rep.finite_group();
  // (a w)^{-1} = (w^{-1} a^{-1} w) w^{-1}
  const auto& w_lattice = grp.elements[g.finite_index].lattice;
  return {detail::conjugate_torus(w_lattice, a_inv), grp.inverse[g.finite_index]};
}

/// lim_{t->0} lambda(t).v: exists iff every support weight pairs >= 0 with
/// lambda; it is then the sum of the components pairing to exactly 0.
inline std::optional<RepVector> limit(const IntVector& lambda, const RepVector& v) {
  if (lambda.size() != v.rank()) throw Error("limit: cocharacter rank mismatch");
  RepVector out(v.rank());
  for (const auto& [chi, x] : v.components()) {
    const Integer p = pairing(lambda, chi);
    if (p < 0) return std::nullopt;
    if (p == 0) out.set(chi, x);
  }
  return out;
}

/// dim V_{lambda,n}
inline std::size_t dim_V_lambda_n(const TorusRep& rep, const IntVector& lambda, const Integer& n) {
  std::size_t d = 0;
  for (const auto& w : rep.weights())
    if (pairing(lambda, w.chi) == n) d += w.dim;
  return d;
}

inline std::size_t dim_V_lambda_zero(const TorusRep& rep, const IntVector& lambda) { return dim_V_lambda_n(rep, lambda, 0); }

/// dim V_{lambda,0+}
inline std::size_t dim_V_lambda_nonneg(const TorusRep& rep, const IntVector& lambda) {
  std::size_t d = 0;
  for (const auto& w : rep.weights())
    if (pairing(lambda, w.chi) >= 0) d += w.dim;
  return d;
}

/// Closed torus orbit <=> 0 in relint conv(supp v). On failure the
/// certificate's cocharacter has an existing limit different from v.
inline RelintResult is_semisimple(const RepVector& v) { return origin_in_relint(support(v)); }

/// Some lambda pairing to 0 on `fixed` and >= 1 on supp n, if one exists.
inline std::optional<IntVector> is_nilpotent(const RepVector& n, const WeightSet& fixed) {
  const WeightSet s = support(n);
  if (s.empty()) return IntVector(n.rank(), Integer(0));
  if (!fixed.empty() && fixed.rank != n.rank()) throw Error("is_nilpotent: rank mismatch");
  return detail::min_norm_cocharacter(n.rank(), fixed.points, s.points);
}

/// The part of v supported on the given weights.
inline RepVector project(const RepVector& v, const std::vector<IntVector>& weights) {
  RepVector out(v.rank());
  for (const auto& chi : weights)
    if (const auto* x = v.get(chi)) out.set(chi, *x);
  return out;
}

}  // namespace jkv
