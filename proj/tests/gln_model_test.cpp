#include "jkv/conjugacy.hpp"
#include "jkv/gln.hpp"
#include "jkv/gln_jkv.hpp"
#include "jkv/jordan.hpp"
#include "jkv/oracle/gln_sampling.hpp"
#include "jkv/oracle/jordan.hpp"

#include <gtest/gtest.h>

using namespace jkv;
using oracle::Rng;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

RatMatrix m2(long a, long b, long c, long d) { return RatMatrix{{q(a), q(b)}, {q(c), q(d)}}; }

const RatMatrix kI2 = RatMatrix::identity(2);

}  // namespace

TEST(LimitConj, Examples) {
  EXPECT_EQ(limit_conj(diagonal_cocharacter({1, 0}), m2(1, 1, 0, 1)), kI2);
  EXPECT_EQ(limit_conj(diagonal_cocharacter({1, -1}), m2(0, 1, 0, 0)), RatMatrix(2, 2));
  const RatMatrix x = m2(3, -1, 7, 2);
  EXPECT_EQ(limit_conj(diagonal_cocharacter({2, 2}), x), x);
  EXPECT_FALSE(limit_conj(diagonal_cocharacter({1, 0}), m2(0, 0, 1, 0)).has_value());
}

TEST(LimitConj, NonTrivialBasis) {
  // g swaps the basis: lambda(t) = diag(1, t) in standard coordinates
  const auto lambda = make_cocharacter(m2(0, 1, 1, 0), {1, 0});
  EXPECT_EQ(lambda.exponents, (std::vector<long>{1, 0}));
  EXPECT_EQ(lambda.g, m2(0, 1, 1, 0));
  EXPECT_EQ(limit_conj(lambda, m2(1, 0, 4, 1)), kI2);
  EXPECT_FALSE(limit_conj(lambda, m2(1, 4, 0, 1)).has_value());
}

TEST(MakeCocharacter, SortsAndPermutes) {
  const auto lambda = make_cocharacter(m2(1, 2, 3, 4), {-1, 5});
  EXPECT_EQ(lambda.exponents, (std::vector<long>{5, -1}));
  EXPECT_EQ(lambda.g, m2(2, 1, 4, 3));
  EXPECT_THROW(make_cocharacter(m2(1, 2, 2, 4), {0, 0}), Error);
  EXPECT_THROW(make_cocharacter(kI2, {1, 2, 3}), Error);
}

TEST(InPLambda, Examples) {
  const auto lambda = diagonal_cocharacter({1, 0});
  EXPECT_TRUE(in_P_lambda(lambda, kI2));
  EXPECT_TRUE(in_P_lambda(lambda, m2(1, 5, 0, 2)));
  EXPECT_FALSE(in_P_lambda(lambda, m2(1, 0, 5, 2)));
  EXPECT_THROW(in_P_lambda(lambda, m2(1, 1, 1, 1)), Error);
}

TEST(HLambda, Examples) {
  const auto lambda = diagonal_cocharacter({1, 0});
  EXPECT_EQ(h_lambda(lambda, m2(3, 7, 0, -2)), m2(3, 0, 0, -2));
  EXPECT_EQ(h_lambda(lambda, m2(1, 9, 0, 1)), kI2);
  EXPECT_TRUE(in_unipotent_radical(lambda, m2(1, 9, 0, 1)));
  EXPECT_FALSE(in_unipotent_radical(lambda, m2(2, 9, 0, 1)));
  const RatMatrix p = m2(2, 1, 0, 3), p2 = m2(1, -4, 0, 5);
  EXPECT_EQ(h_lambda(lambda, p * p2), m2(2, 0, 0, 15));
  EXPECT_EQ(h_lambda(lambda, p * p2), h_lambda(lambda, p) * h_lambda(lambda, p2));
  EXPECT_THROW(h_lambda(lambda, m2(1, 0, 5, 2)), Error);
}

TEST(Bruhat, Examples) {
  const RatMatrix upper = m2(2, 3, 0, 5);
  const auto a = bruhat(upper);
  EXPECT_EQ(a.p, upper);
  EXPECT_EQ(a.w, kI2);
  EXPECT_EQ(a.u, kI2);

  const auto b = bruhat(m2(0, 1, 1, 0));
  EXPECT_EQ(b.p, kI2);
  EXPECT_EQ(b.w, m2(0, 1, 1, 0));
  EXPECT_EQ(b.u, kI2);

  const auto c = bruhat(m2(1, 0, 1, 1));
  EXPECT_EQ(c.p, m2(-1, 1, 0, 1));
  EXPECT_EQ(c.w, m2(0, 1, 1, 0));
  EXPECT_EQ(c.u, m2(1, 1, 0, 1));

  EXPECT_THROW(bruhat(m2(1, 2, 2, 4)), Error);
}

TEST(Bruhat, SoundOnRandomMatrices) {
  Rng rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const RatMatrix g = oracle::random_invertible(rng, 1 + rng.index(5), 5);
    const auto f = bruhat(g);
    ASSERT_EQ(f.p * f.w * f.u, g);
    ASSERT_TRUE(is_upper_triangular(f.p));
    ASSERT_TRUE(is_upper_unitriangular(f.u));
    ASSERT_TRUE(is_permutation_matrix(f.w));
  }
}

TEST(Bruhat, PermutationIsDoubleCosetInvariant) {
  Rng rng(32);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.index(4);
    const RatMatrix g = oracle::random_invertible(rng, n, 4);
    const RatMatrix moved = oracle::random_upper_invertible(rng, n) * g * oracle::random_upper_invertible(rng, n);
    ASSERT_EQ(bruhat(g).w, bruhat(moved).w);
  }
}

TEST(Polynomials, Examples) {
  EXPECT_EQ(characteristic_polynomial(m2(2, 1, 0, 2)), (RatPoly{q(4), q(-4), q(1)}));
  EXPECT_EQ(minimal_polynomial(m2(2, 1, 0, 2)), (RatPoly{q(4), q(-4), q(1)}));
  EXPECT_EQ(minimal_polynomial(Rational(5) * RatMatrix::identity(3)), (RatPoly{q(-5), q(1)}));
  EXPECT_EQ(characteristic_polynomial(m2(0, 1, -1, 0)), (RatPoly{q(1), q(0), q(1)}));
}

TEST(Polynomials, CayleyHamiltonAndDivisibility) {
  Rng rng(33);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.index(4);
    const RatMatrix x = oracle::random_matrix(rng, n, 5);
    const RatPoly chi = characteristic_polynomial(x);
    const RatPoly m = minimal_polynomial(x);
    ASSERT_EQ(chi(x), RatMatrix(n, n));
    ASSERT_EQ(m(x), RatMatrix(n, n));
    ASSERT_TRUE((chi % m).is_zero());
    ASSERT_EQ(chi(Rational(2)), determinant(Rational(2) * RatMatrix::identity(n) - x));
  }
}

TEST(IsSemisimpleMatrix, Examples) {
  EXPECT_TRUE(is_semisimple_matrix(m2(1, 0, 0, 2)));
  EXPECT_FALSE(is_semisimple_matrix(m2(0, 1, 0, 0)));
  EXPECT_TRUE(is_semisimple_matrix(m2(0, 1, -1, 0)));
}

TEST(JordanChevalley, Examples) {
  const RatMatrix ss = m2(1, 0, 0, 2);
  const auto a = jordan_chevalley(ss);
  EXPECT_EQ(a.s, ss);
  EXPECT_EQ(a.n, RatMatrix(2, 2));

  const auto b = jordan_chevalley(m2(2, 1, 0, 2));
  EXPECT_EQ(b.s, q(2) * kI2);
  EXPECT_EQ(b.n, m2(0, 1, 0, 0));
  EXPECT_EQ(b.p(m2(2, 1, 0, 2)), b.s);

  const auto c = jordan_chevalley(m2(0, 1, -1, 0));
  EXPECT_EQ(c.s, m2(0, 1, -1, 0));
  EXPECT_EQ(c.n, RatMatrix(2, 2));
}

TEST(JordanChevalley, InvariantsAndEigenspaceOracle) {
  Rng rng(34);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.index(4);
    const RatMatrix x = oracle::random_rational_spectrum(rng, n);
    const auto jc = jordan_chevalley(x);
    ASSERT_EQ(jc.s + jc.n, x);
    ASSERT_EQ(jc.s * jc.n, jc.n * jc.s);
    ASSERT_TRUE(is_semisimple_matrix(jc.s));
    ASSERT_TRUE(is_nilpotent_matrix(jc.n));
    ASSERT_EQ(jc.p(x), jc.s);
    const auto truth = oracle::oracle_semisimple_part(x);
    ASSERT_TRUE(truth);
    ASSERT_EQ(jc.s, *truth);
  }
}

TEST(JordanChevalley, IrrationalSpectrumAndConjugationEquivariance) {
  Rng rng(35);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + rng.index(3);
    const RatMatrix x = oracle::random_matrix(rng, n, 4);
    const RatMatrix h = oracle::random_unimodular(rng, n);
    const auto jc = jordan_chevalley(x);
    ASSERT_EQ(jc.s + jc.n, x);
    ASSERT_EQ(jc.s * jc.n, jc.n * jc.s);
    ASSERT_TRUE(is_semisimple_matrix(jc.s));
    ASSERT_TRUE(is_nilpotent_matrix(jc.n));
    const auto moved = jordan_chevalley(h * x * inverse(h));
    ASSERT_EQ(moved.s, h * jc.s * inverse(h));
    ASSERT_EQ(moved.n, h * jc.n * inverse(h));
  }
}

TEST(RationalConjugacy, Examples) {
  const RatMatrix x = m2(3, 1, 4, 1);
  EXPECT_EQ(rational_conjugacy(x, x), kI2);
  const auto g = rational_conjugacy(m2(0, 1, 0, 0), m2(0, 2, 0, 0));
  ASSERT_TRUE(g);
  EXPECT_EQ(*g * m2(0, 1, 0, 0) * inverse(*g), m2(0, 2, 0, 0));
  EXPECT_FALSE(rational_conjugacy(RatMatrix(2, 2), m2(0, 1, 0, 0)).has_value());
  // both have characteristic polynomial x^2 - 2
  const auto h = rational_conjugacy(m2(0, 2, 1, 0), m2(1, 1, 1, -1));
  ASSERT_TRUE(h);
  EXPECT_TRUE(conjugates(*h, m2(0, 2, 1, 0), m2(1, 1, 1, -1)));
}

TEST(RationalConjugacy, SameCharpolyDifferentJordanType) {
  const RatMatrix a{{q(1), q(1), q(0)}, {q(0), q(1), q(0)}, {q(0), q(0), q(1)}};
  const RatMatrix b{{q(1), q(1), q(0)}, {q(0), q(1), q(1)}, {q(0), q(0), q(1)}};
  EXPECT_EQ(characteristic_polynomial(a), characteristic_polynomial(b));
  EXPECT_FALSE(rational_conjugacy(a, b).has_value());
  EXPECT_FALSE(rational_conjugacy(RatMatrix::identity(3), a).has_value());
}

TEST(RationalConjugacy, FindsRandomConjugates) {
  Rng rng(36);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 1 + rng.index(4);
    const RatMatrix x = rng.coin() ? oracle::random_rational_spectrum(rng, n) : oracle::random_matrix(rng, n, 3);
    const RatMatrix h = oracle::random_invertible(rng, n, 3);
    const RatMatrix y = h * x * inverse(h);
    const auto g = rational_conjugacy(x, y);
    ASSERT_TRUE(g);
    ASSERT_TRUE(conjugates(*g, x, y));
    const RatMatrix shifted = y + RatMatrix::identity(n);
    ASSERT_FALSE(rational_conjugacy(x, shifted).has_value());
  }
}

TEST(JkvGln, Examples) {
  const auto nil = jkv_gln(m2(0, 1, 0, 0));
  EXPECT_EQ(nil.s, RatMatrix(2, 2));
  EXPECT_EQ(nil.lambda.exponents, (std::vector<long>{1, 0}));
  EXPECT_EQ(limit_conj(nil.lambda, m2(0, 1, 0, 0)), RatMatrix(2, 2));
  EXPECT_TRUE(nil.passed());

  const auto shifted = jkv_gln(m2(2, 1, 0, 2));
  EXPECT_EQ(shifted.s, q(2) * kI2);
  EXPECT_EQ(shifted.lambda.exponents, (std::vector<long>{1, 0}));
  EXPECT_EQ(shifted.lambda.g, kI2);
  EXPECT_EQ(limit_conj(shifted.lambda, m2(2, 1, 0, 2)), q(2) * kI2);
  EXPECT_TRUE(shifted.passed());

  const RatMatrix ss = m2(1, 2, 3, 4);
  EXPECT_THROW(jkv_gln(ss), Unsupported);
  const auto diag = jkv_gln(m2(1, 0, 0, 2));
  EXPECT_EQ(diag.lambda.exponents, (std::vector<long>{0, 0}));
  EXPECT_EQ(diag.s, m2(1, 0, 0, 2));
}

TEST(JkvGln, RejectsWrongDecomposition) {
  const RatMatrix x = m2(2, 1, 0, 2);
  const auto bad = jkv_certify_gln(x, x, RatMatrix(2, 2), diagonal_cocharacter({0, 0}));
  EXPECT_FALSE(bad.passed());
  ASSERT_NE(bad.first_failure(), nullptr);
  EXPECT_EQ(bad.first_failure()->name, "semisimple");
}

TEST(JkvGln, AgreesWithJordanChevalley) {
  Rng rng(37);
  for (int trial = 0; trial < 150; ++trial) {
    const RatMatrix x = oracle::random_rational_spectrum(rng, 1 + rng.index(4));
    const auto cert = jkv_gln(x);
    ASSERT_TRUE(cert.passed()) << cert.first_failure()->name;
    ASSERT_EQ(cert.s, jordan_chevalley(x).s);
    ASSERT_EQ(cert.n, x - cert.s);
  }
}

TEST(TheoremCheckGln, Examples) {
  const RatMatrix x = m2(1, 1, 0, 1);
  const auto r = theorem_check_gln(x, {diagonal_cocharacter({1, 0}), diagonal_cocharacter({0, -1})});
  EXPECT_TRUE(r.passed);
  ASSERT_EQ(r.samples.size(), 2u);
  for (const auto& s : r.samples) {
    ASSERT_TRUE(s.limit);
    EXPECT_EQ(*s.limit, kI2);
    EXPECT_TRUE(s.semisimple);
  }
  const auto central = theorem_check_gln(x, {diagonal_cocharacter({2, 2})});
  EXPECT_EQ(*central.samples[0].limit, x);
  EXPECT_FALSE(central.samples[0].semisimple);
  EXPECT_TRUE(central.passed);
}

TEST(GlnProperties, SemisimpleLimitsAreConjugate) {
  Rng rng(38);
  for (int trial = 0; trial < 60; ++trial) {
    const auto sample = oracle::random_semisimple(rng, 2 + rng.index(3));
    std::vector<GLnCocharacter> lambdas;
    for (int k = 0; k < 5; ++k) lambdas.push_back(oracle::cocharacter_with_limit(rng, sample.h));
    const auto r = theorem_check_gln(sample.x, lambdas);
    ASSERT_TRUE(r.passed);
    for (const auto& s : r.samples) ASSERT_TRUE(s.limit && s.semisimple);
  }
}

TEST(GlnProperties, HLambdaHomomorphismAndEquivariance) {
  Rng rng(39);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = 2 + rng.index(3);
    const auto lambda = oracle::random_cocharacter(rng, n);
    const RatMatrix p = oracle::random_in_P(rng, lambda), p2 = oracle::random_in_P(rng, lambda);
    const RatMatrix hp = h_lambda(lambda, p);
    ASSERT_EQ(h_lambda(lambda, p * p2), hp * h_lambda(lambda, p2));
    ASSERT_TRUE(centralizes(lambda, hp));
    const RatMatrix x = rng.coin() ? oracle::random_with_limit(rng, lambda, 3) : oracle::random_matrix(rng, n, 3);
    const auto lx = limit_conj(lambda, x);
    const auto lpx = limit_conj(lambda, p * x * inverse(p));
    ASSERT_EQ(lx.has_value(), lpx.has_value());
    if (lx) {
      ASSERT_EQ(*lpx, hp * *lx * inverse(hp));
    }
  }
}
