#pragma once

// Random torus-model instances: rank 1-4, 3-10 weights in [-5,5] closed
// under a finite group W acting on characters (trivial, -I, a coordinate
// swap, or all coordinate permutations for rank <= 3), blocks
// eps(w) T_{w chi} T_chi^-1 so the block maps compose correctly.

#include "jkv/oracle/random.hpp"
#include "jkv/torus.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <vector>

namespace jkv::oracle {

struct TorusSamplingBounds {
  std::size_t max_rank = 4;
  std::size_t min_weights = 3;
  std::size_t max_weights = 10;
  long weight_bound = 5;
  long coefficient_bound = 9;
};

namespace detail {

inline std::vector<IntMatrix> permutation_matrices(std::size_t r, bool all) {
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<IntMatrix> out;
  auto emit = [&] {
    IntMatrix m(r, r);
    for (std::size_t i = 0; i < r; ++i) m(perm[i], i) = 1;
    out.push_back(m);
  };
  if (!all) {
    emit();
    std::swap(perm[0], perm[1]);
    emit();
    return out;
  }
  do emit();
  while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// Lattice matrices of W, identity first.
inline std::vector<IntMatrix> random_lattice_group(Rng& rng, std::size_t r) {
  std::vector<std::size_t> kinds = {0, 1};
  if (r >= 2) kinds.push_back(2);
  if (r >= 2 && r <= 3) kinds.push_back(3);
  switch (kinds[rng.index(kinds.size())]) {
    case 0:
      return {IntMatrix::identity(r)};
    case 1: {
      IntMatrix neg(r, r);
      for (std::size_t i = 0; i < r; ++i) neg(i, i) = -1;
      return {IntMatrix::identity(r), neg};
    }
    case 2:
      return permutation_matrices(r, false);
    default:
      return permutation_matrices(r, true);
  }
}

}  // namespace detail

inline TorusRep random_torus_rep(Rng& rng, const TorusSamplingBounds& bounds = {}) {
  const std::size_t r = 1 + rng.index(bounds.max_rank);
  const std::vector<IntMatrix> lattice = detail::random_lattice_group(rng, r);
  const std::size_t target = bounds.min_weights + rng.index(bounds.max_weights - bounds.min_weights + 1);

  std::vector<WeightSpace> weights;
  std::set<IntVector> seen;
  for (int attempt = 0; attempt < 200 && weights.size() < target; ++attempt) {
    IntVector chi(r);
    for (auto& c : chi) c = rng.uniform(-bounds.weight_bound, bounds.weight_bound);
    std::set<IntVector> orbit;
    for (const auto& m : lattice) orbit.insert(m * chi);
    if (seen.count(chi) || weights.size() + orbit.size() > bounds.max_weights) continue;
    const std::size_t dim = 1 + rng.index(2);
    for (const auto& w : orbit) {
      seen.insert(w);
      weights.push_back({w, dim});
    }
  }

  if (lattice.size() == 1) return TorusRep(r, std::move(weights));

  std::map<IntVector, RatMatrix> frame;
  for (const auto& w : weights) {
    RatMatrix t(w.dim, w.dim);
    do
      for (std::size_t i = 0; i < w.dim; ++i)
        for (std::size_t j = 0; j < w.dim; ++j) t(i, j) = rng.uniform(-2, 2);
    while (determinant(t) == 0);
    frame.emplace(w.chi, t);
  }
  const bool signed_blocks = rng.coin();

  FiniteGroup g;
  for (const auto& m : lattice) {
    FiniteElement e{m, {}};
    const Rational eps = signed_blocks ? Rational(determinant(m)) : Rational(1);
    for (const auto& w : weights) e.blocks.emplace(w.chi, eps * frame.at(m * w.chi) * inverse(frame.at(w.chi)));
    g.elements.push_back(std::move(e));
  }
  for (const auto& a : lattice) {
    std::vector<std::size_t> row;
    for (const auto& b : lattice) {
      const IntMatrix ab = a * b;
      row.push_back(static_cast<std::size_t>(std::find(lattice.begin(), lattice.end(), ab) - lattice.begin()));
    }
    g.table.push_back(std::move(row));
  }
  complete_group(g);
  return TorusRep(r, std::move(weights), std::move(g));
}

/// Each weight present with probability 1/2, coordinates p/q with |p|, q <= bound.
inline RepVector random_rep_vector(Rng& rng, const TorusRep& rep, long bound = 9) {
  RepVector v(rep.rank());
  for (const auto& w : rep.weights()) {
    if (!rng.coin()) continue;
    std::vector<Rational> x(w.dim);
    for (auto& c : x) c = rng.rational(bound);
    v.set(w.chi, std::move(x));
  }
  return v;
}

inline std::vector<Rational> random_torus_element(Rng& rng, std::size_t rank, long bound = 9) {
  std::vector<Rational> a(rank);
  for (auto& x : a) x = rng.nonzero_rational(bound);
  return a;
}

inline GroupElement random_group_element(Rng& rng, const TorusRep& rep, long bound = 9) {
  return {random_torus_element(rng, rep.rank(), bound), rng.index(rep.group_order())};
}

inline IntVector random_cocharacter_in_box(Rng& rng, std::size_t rank, long bound) {
  IntVector lambda(rank);
  for (auto& x : lambda) x = rng.uniform(-bound, bound);
  return lambda;
}

/// Weight sets for the relint suite: rank 1-3, 1-6 distinct points in
/// [-3,3]; half of them closed under negation so the origin is often inside.
inline WeightSet random_small_weight_set(Rng& rng) {
  const std::size_t r = 1 + rng.index(3);
  const std::size_t target = 1 + rng.index(6);
  const bool symmetric = target >= 2 && rng.coin();
  std::set<IntVector> pts;
  for (int attempt = 0; pts.empty() || (attempt < 100 && pts.size() < target); ++attempt) {
    IntVector chi(r);
    for (auto& c : chi) c = rng.uniform(-3, 3);
    IntVector neg(r);
    for (std::size_t i = 0; i < r; ++i) neg[i] = -chi[i];
    const std::size_t extra = symmetric && neg != chi && !pts.count(neg) ? 1 : 0;
    if (pts.count(chi) || pts.size() + 1 + extra > target) continue;
    pts.insert(chi);
    if (extra) pts.insert(neg);
  }
  return WeightSet(r, std::vector<IntVector>(pts.begin(), pts.end()));
}

}  // namespace jkv::oracle
