#include "jkv/torus.hpp"
#include "jkv/torus_jkv.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace jkv;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

TorusRep line_rep(std::initializer_list<long> weights) {
  std::vector<WeightSpace> ws;
  for (long w : weights) ws.push_back({int_vector({w}), 1});
  return TorusRep(1, ws);
}

RepVector vec1(std::initializer_list<std::pair<long, Rational>> comps) {
  RepVector v(1);
  for (const auto& [w, x] : comps) v.set(int_vector({w}), {x});
  return v;
}

/// Rank 2 with W = {1, -1} acting by negation, V^chi and V^{-chi} swapped
/// through the given block and its inverse.
TorusRep negation_rep() {
  std::vector<WeightSpace> ws{{int_vector({1, 0}), 1}, {int_vector({-1, 0}), 1}, {int_vector({1, 2}), 2}, {int_vector({-1, -2}), 2}};
  FiniteGroup g;
  FiniteElement e{IntMatrix::identity(2), {}};
  FiniteElement s{IntMatrix{{-1, 0}, {0, -1}}, {}};
  const RatMatrix t{{q(2), q(1)}, {q(1), q(1)}};
  for (const auto& w : ws) e.blocks[w.chi] = RatMatrix::identity(w.dim);
  s.blocks[int_vector({1, 0})] = RatMatrix{{q(3)}};
  s.blocks[int_vector({-1, 0})] = RatMatrix{{q(1, 3)}};
  s.blocks[int_vector({1, 2})] = t;
  s.blocks[int_vector({-1, -2})] = inverse(t);
  g.elements = {e, s};
  g.table = {{0, 1}, {1, 0}};
  complete_group(g);
  return TorusRep(2, ws, g);
}

}  // namespace

TEST(Support, Examples) {
  EXPECT_TRUE(support(RepVector(2)).empty());
  RepVector v(2);
  v.set(int_vector({1, 0}), {q(1)});
  v.set(int_vector({0, 2}), {q(-3)});
  EXPECT_EQ(support(v).points, (std::vector<IntVector>{int_vector({0, 2}), int_vector({1, 0})}));
  const TorusRep rep(2, {{int_vector({1, 0}), 1}, {int_vector({0, 2}), 1}});
  EXPECT_EQ(support(act(rep, GroupElement{{q(5), q(-1, 2)}, 0}, v)).points, support(v).points);
}

TEST(Act, Examples) {
  const TorusRep rep = line_rep({2});
  const RepVector v = vec1({{2, q(3)}});
  EXPECT_EQ(act(rep, identity_element(rep), v), v);
  EXPECT_EQ(act(rep, GroupElement{{q(1, 2)}, 0}, v), vec1({{2, q(3, 4)}}));
  const GroupElement g{{q(-7, 3)}, 0};
  EXPECT_EQ(act(rep, g, act(rep, inverse(rep, g), v)), v);
}

TEST(Act, RejectsBadInput) {
  const TorusRep rep = line_rep({2});
  RepVector wrong_dim(1);
  wrong_dim.set(int_vector({2}), {q(1), q(2)});
  EXPECT_THROW(act(rep, identity_element(rep), wrong_dim), Error);
  EXPECT_THROW(act(rep, GroupElement{{q(0)}, 0}, vec1({{2, q(1)}})), Error);
  EXPECT_THROW(act(rep, identity_element(rep), vec1({{3, q(1)}})), Error);
}

TEST(Act, FiniteGroupActionIsAnAction) {
  const TorusRep rep = negation_rep();
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<long> small(1, 6);
  for (int trial = 0; trial < 100; ++trial) {
    RepVector v(2);
    v.set(int_vector({1, 0}), {q(small(rng))});
    v.set(int_vector({-1, -2}), {q(small(rng)), q(-small(rng))});
    const GroupElement g1{{q(small(rng), small(rng)), q(-small(rng))}, rng() % 2};
    const GroupElement g2{{q(-small(rng)), q(small(rng), small(rng))}, rng() % 2};
    ASSERT_EQ(act(rep, compose(rep, g1, g2), v), act(rep, g1, act(rep, g2, v)));
    ASSERT_EQ(act(rep, inverse(rep, g1), act(rep, g1, v)), v);
  }
}

TEST(FiniteGroup, InconsistentTableIsLoadError) {
  std::vector<WeightSpace> ws{{int_vector({1}), 1}, {int_vector({-1}), 1}};
  FiniteGroup g;
  FiniteElement e{IntMatrix::identity(1), {{int_vector({1}), RatMatrix{{q(1)}}}, {int_vector({-1}), RatMatrix{{q(1)}}}}};
  FiniteElement s{IntMatrix{{-1}}, {{int_vector({1}), RatMatrix{{q(2)}}}, {int_vector({-1}), RatMatrix{{q(2)}}}}};
  g.elements = {e, s};
  g.table = {{0, 1}, {1, 0}};
  complete_group(g);
  // s^2 has blocks 4, not the identity
  EXPECT_THROW(TorusRep(1, ws, g), Error);
  g.elements[1].blocks[int_vector({-1})] = RatMatrix{{q(1, 2)}};
  EXPECT_NO_THROW(TorusRep(1, ws, g));
  g.elements[1].lattice = IntMatrix{{2}};
  EXPECT_THROW(TorusRep(1, ws, g), Error);
}

TEST(Limit, Examples) {
  const RepVector v = vec1({{-1, q(1)}, {0, q(2)}, {2, q(3)}});
  EXPECT_EQ(limit(int_vector({0}), v), v);
  EXPECT_FALSE(limit(int_vector({1}), v).has_value());
  const RepVector w = vec1({{0, q(2)}, {2, q(3)}});
  EXPECT_EQ(limit(int_vector({1}), w), vec1({{0, q(2)}}));
  EXPECT_THROW(limit(int_vector({1, 0}), w), Error);
}

TEST(Limit, TorusEquivariance) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> c(-3, 3), nz(1, 5);
  const TorusRep rep(2, {{int_vector({1, 0}), 1}, {int_vector({0, 1}), 1}, {int_vector({-1, 1}), 1}, {int_vector({0, 0}), 1}, {int_vector({2, -1}), 1}});
  for (int trial = 0; trial < 200; ++trial) {
    RepVector v(2);
    for (const auto& w : rep.weights())
      if (rng() % 2) v.set(w.chi, {q(c(rng))});
    const GroupElement a{{q(nz(rng), nz(rng)), q(-nz(rng))}, 0};
    const IntVector lambda = int_vector({c(rng), c(rng)});
    const auto lhs = limit(lambda, act(rep, a, v));
    const auto base = limit(lambda, v);
    ASSERT_EQ(lhs.has_value(), base.has_value());
    if (lhs) {
      ASSERT_EQ(*lhs, act(rep, a, *base));
    }
  }
}

TEST(DimVLambda, Examples) {
  const TorusRep rep = line_rep({-1, 0, 1});
  EXPECT_EQ(dim_V_lambda_n(rep, int_vector({0}), 0), 3u);
  EXPECT_EQ(dim_V_lambda_n(rep, int_vector({0}), 1), 0u);
  EXPECT_EQ(dim_V_lambda_n(rep, int_vector({1}), 0), 1u);
  EXPECT_EQ(dim_V_lambda_nonneg(rep, int_vector({1})), 2u);
}

TEST(IsSemisimple, Examples) {
  EXPECT_TRUE(is_semisimple(RepVector(2)).in_relint);
  RepVector pair(2);
  pair.set(int_vector({1, 0}), {q(1)});
  pair.set(int_vector({-1, 0}), {q(5)});
  EXPECT_TRUE(is_semisimple(pair).in_relint);
  RepVector corner(2);
  corner.set(int_vector({1, 0}), {q(1)});
  corner.set(int_vector({1, 1}), {q(1)});
  const auto r = is_semisimple(corner);
  EXPECT_FALSE(r.in_relint);
  EXPECT_EQ(r.cocharacter, int_vector({1, 0}));
  const auto degenerate = limit(*r.cocharacter, corner);
  ASSERT_TRUE(degenerate);
  EXPECT_NE(*degenerate, corner);
}

TEST(IsNilpotent, Examples) {
  EXPECT_EQ(is_nilpotent(RepVector(1), WeightSet(1, {int_vector({3})})), int_vector({0}));
  EXPECT_EQ(is_nilpotent(vec1({{1, q(1)}}), WeightSet(1, {})), int_vector({1}));
  EXPECT_FALSE(is_nilpotent(vec1({{1, q(1)}}), WeightSet(1, {int_vector({1})})).has_value());
}

TEST(SolveMultiplicative, Examples) {
  const WeightSet s(2, {int_vector({1, 0}), int_vector({1, 1})});
  const auto a = solve_multiplicative(s, {{int_vector({1, 0}), q(2)}, {int_vector({1, 1}), q(6)}});
  ASSERT_TRUE(a);
  EXPECT_EQ(*a, (std::vector<Rational>{q(2), q(3)}));
  EXPECT_FALSE(solve_multiplicative(WeightSet(1, {int_vector({2})}), {{int_vector({2}), q(2)}}).has_value());
  EXPECT_FALSE(solve_multiplicative(WeightSet(1, {int_vector({1}), int_vector({2})}), {{int_vector({1}), q(2)}, {int_vector({2}), q(5)}}).has_value());
  EXPECT_THROW(solve_multiplicative(WeightSet(1, {int_vector({1})}), {{int_vector({1}), q(0)}}), Error);
}

TEST(SolveMultiplicative, SignsAndUnfactored) {
  // a^2 = -1 impossible; a1 * a2^2 = -12 fine
  EXPECT_FALSE(solve_multiplicative(WeightSet(1, {int_vector({2})}), {{int_vector({2}), q(-1)}}).has_value());
  const WeightSet s(2, {int_vector({1, 2})});
  const auto a = solve_multiplicative(s, {{int_vector({1, 2}), q(-12)}});
  ASSERT_TRUE(a);
  EXPECT_EQ(evaluate_character(int_vector({1, 2}), *a), q(-12));
  // 1000003 is prime, beyond a trial-division bound of 100
  EXPECT_THROW(solve_multiplicative(WeightSet(1, {int_vector({1})}), {{int_vector({1}), q(1000003)}}, 100), Unsupported);
}

TEST(SolveMultiplicative, RecoversRandomTorusElements) {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<long> c(-3, 3), nz(1, 12);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t r = 1 + rng() % 3;
    std::set<IntVector> pts;
    const std::size_t m = 1 + rng() % 4;
    while (pts.size() < m) {
      IntVector chi(r);
      for (auto& x : chi) x = c(rng);
      pts.insert(chi);
    }
    std::vector<Rational> a(r);
    for (auto& x : a) x = make_rational((rng() % 2 ? 1 : -1) * nz(rng), nz(rng));
    const WeightSet s(r, std::vector<IntVector>(pts.begin(), pts.end()));
    std::map<IntVector, Rational> ratios;
    for (const auto& chi : s.points) ratios[chi] = evaluate_character(chi, a);
    const auto found = solve_multiplicative(s, ratios);
    ASSERT_TRUE(found);
    for (const auto& chi : s.points) ASSERT_EQ(evaluate_character(chi, *found), ratios[chi]);
  }
}

TEST(SameOrbit, Examples) {
  const TorusRep rep = line_rep({2});
  const RepVector v = vec1({{2, q(1)}});
  const auto id = same_orbit(rep, v, v);
  ASSERT_TRUE(id);
  EXPECT_EQ(act(rep, *id, v), v);
  const auto g = same_orbit(rep, v, vec1({{2, q(4)}}));
  ASSERT_TRUE(g);
  EXPECT_EQ(abs(g->torus[0]), 2);
  EXPECT_FALSE(same_orbit(rep, v, vec1({{2, q(2)}})).has_value());
}

TEST(SameOrbit, UsesFiniteGroupAndRejectsNonParallelBlocks) {
  const TorusRep rep = negation_rep();
  RepVector v(2);
  v.set(int_vector({1, 0}), {q(1)});
  v.set(int_vector({1, 2}), {q(1), q(-1)});
  const GroupElement g{{q(2, 3), q(-5)}, 1};
  const RepVector moved = act(rep, g, v);
  const auto found = same_orbit(rep, v, moved);
  ASSERT_TRUE(found);
  EXPECT_EQ(found->finite_index, 1u);
  EXPECT_EQ(act(rep, *found, v), moved);

  RepVector skew = v;
  skew.set(int_vector({1, 2}), {q(1), q(1)});
  EXPECT_FALSE(same_orbit(rep, v, skew).has_value());
}

TEST(JkvDecompose, Examples) {
  const TorusRep rep = line_rep({-1, 0, 1, 2});
  const RepVector ss = vec1({{-1, q(2)}, {1, q(3)}});
  const auto c1 = jkv_decompose(rep, ss);
  EXPECT_EQ(c1.s, ss);
  EXPECT_TRUE(c1.n.is_zero());
  EXPECT_EQ(c1.lambda, int_vector({0}));
  EXPECT_TRUE(c1.passed());

  const RepVector g2 = vec1({{0, q(5)}, {1, q(-2)}});
  const auto c2 = jkv_decompose(rep, g2);
  EXPECT_EQ(c2.s, vec1({{0, q(5)}}));
  EXPECT_EQ(c2.n, vec1({{1, q(-2)}}));
  EXPECT_EQ(c2.lambda, int_vector({1}));
  EXPECT_TRUE(c2.passed());

  const RepVector g3 = vec1({{1, q(1)}, {2, q(1)}});
  const auto c3 = jkv_decompose(rep, g3);
  EXPECT_TRUE(c3.s.is_zero());
  EXPECT_EQ(c3.n, g3);
  EXPECT_EQ(c3.lambda, int_vector({1}));
  EXPECT_TRUE(c3.passed());

  const auto zero = jkv_decompose(rep, RepVector(1));
  EXPECT_TRUE(zero.s.is_zero());
  EXPECT_TRUE(zero.n.is_zero());
  EXPECT_EQ(zero.lambda, int_vector({0}));
}

TEST(JkvCertify, RejectsWrongDecomposition) {
  const TorusRep rep = line_rep({-1, 0, 1});
  const RepVector g = vec1({{-1, q(1)}, {1, q(1)}});
  EXPECT_TRUE(jkv_certify(rep, g, g, RepVector(1), int_vector({0})).passed());
  const auto bad = jkv_certify(rep, g, RepVector(1), g, int_vector({0}));
  EXPECT_FALSE(bad.passed());
  bool limit_failed = false;
  for (const auto& c : bad.clauses)
    if (c.name == "limit") limit_failed = !c.passed;
  EXPECT_TRUE(limit_failed);
}

TEST(JkvCertify, FiniteStabilizerClause) {
  const TorusRep rep = negation_rep();
  RepVector g(2);
  g.set(int_vector({1, 0}), {q(1)});
  g.set(int_vector({-1, 0}), {q(3)});
  g.set(int_vector({1, 2}), {q(1), q(1)});
  const auto cert = jkv_decompose(rep, g);
  EXPECT_TRUE(cert.passed()) << (cert.first_failure() ? cert.first_failure()->name : "");
}

TEST(LambdaMin, Examples) {
  const TorusRep rep = line_rep({-1, 0, 1});
  const auto a = lambda_min(rep, vec1({{0, q(1)}, {1, q(1)}}), 3);
  EXPECT_FALSE(a.box_too_small);
  EXPECT_EQ(a.dim, 1u);
  EXPECT_EQ(a.witnesses, std::vector<IntVector>{int_vector({1})});

  const auto b = lambda_min(rep, vec1({{-1, q(1)}, {1, q(1)}}), 3);
  EXPECT_EQ(b.dim, 3u);
  EXPECT_EQ(b.witnesses, std::vector<IntVector>{int_vector({0})});

  const auto c = lambda_min(rep, RepVector(1), 2);
  EXPECT_EQ(c.dim, 1u);
  EXPECT_EQ(c.witnesses, (std::vector<IntVector>{int_vector({-1}), int_vector({1})}));
  EXPECT_THROW(lambda_min(rep, RepVector(1), 0), Error);
}

TEST(LambdaMin, BoxTooSmall) {
  // face {(0,0)}: 5a - b >= 1 and -4a + b >= 1 force a >= 2, b >= 9
  const TorusRep rep(2, {{int_vector({0, 0}), 1}, {int_vector({5, -1}), 1}, {int_vector({-4, 1}), 1}});
  RepVector g(2);
  g.set(int_vector({0, 0}), {q(1)});
  g.set(int_vector({5, -1}), {q(1)});
  g.set(int_vector({-4, 1}), {q(1)});
  ASSERT_FALSE(is_semisimple(g).in_relint);
  EXPECT_TRUE(lambda_min(rep, g, 8).box_too_small);
  const auto found = lambda_min(rep, g, 9);
  EXPECT_FALSE(found.box_too_small);
  EXPECT_EQ(found.witnesses, std::vector<IntVector>{int_vector({2, 9})});
}

TEST(ComposeMu, Examples) {
  const TorusRep rep(2, {{int_vector({1, -5}), 1}, {int_vector({0, 1}), 1}, {int_vector({-1, 3}), 1}});
  const auto c = compose_mu(int_vector({1, 0}), int_vector({0, 1}), rep);
  EXPECT_EQ(c.n, 6);
  EXPECT_EQ(c.mu, int_vector({6, 1}));
  const auto zero_lambda = compose_mu(int_vector({1, 0}), int_vector({0, 0}), rep);
  EXPECT_EQ(zero_lambda.n, 1);
  EXPECT_EQ(zero_lambda.mu, int_vector({1, 0}));
  const auto zero_lambda0 = compose_mu(int_vector({0, 0}), int_vector({2, 1}), rep);
  EXPECT_EQ(zero_lambda0.n, 1);
  EXPECT_EQ(zero_lambda0.mu, int_vector({2, 1}));
}

TEST(LimitSurvey, Examples) {
  const TorusRep rep = line_rep({-1, 0, 1});
  const auto zero = limit_survey(rep, RepVector(1), 2);
  ASSERT_EQ(zero.entries.size(), 5u);
  for (const auto& e : zero.entries) {
    ASSERT_TRUE(e.limit);
    EXPECT_TRUE(e.limit->is_zero());
    EXPECT_TRUE(e.semisimple);
  }

  const auto s = limit_survey(rep, vec1({{0, q(4)}, {1, q(1)}}), 2);
  std::vector<IntVector> ss;
  for (const auto& e : s.entries)
    if (e.semisimple) {
      ss.push_back(e.lambda);
      EXPECT_EQ(*e.limit, vec1({{0, q(4)}}));
    }
  EXPECT_EQ(ss, (std::vector<IntVector>{int_vector({1}), int_vector({2})}));

  const RepVector g = vec1({{-1, q(1)}, {1, q(2)}});
  const auto t = limit_survey(rep, g, 1);
  std::vector<IntVector> only;
  for (const auto& e : t.entries)
    if (e.semisimple) {
      only.push_back(e.lambda);
      EXPECT_EQ(*e.limit, g);
    }
  EXPECT_EQ(only, std::vector<IntVector>{int_vector({0})});
  EXPECT_TRUE(check_semisimple_limits_one_orbit(rep, t).passed);
}
