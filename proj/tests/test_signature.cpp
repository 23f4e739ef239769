#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "roughver/errors.hpp"
#include "roughver/signature.hpp"
#include "test_util.hpp"

using namespace roughver;
using testutil::P;
using testutil::W;

namespace {

PwlPath random_path(std::mt19937_64& rng, int d, int segments) {
  PwlPath p{d, {}};
  for (int s = 0; s < segments; ++s) {
    std::vector<Rational> v;
    for (int i = 0; i < d; ++i) v.push_back(testutil::random_rational(rng));
    p.segments.push_back(v);
  }
  return p;
}

PwlPath l_shaped() { return PwlPath{2, {{1, 0}, {0, 1}}}; }

}  // namespace

TEST(RoughSignatureLevel, PlanarLevelTwo) {
  const Rational x1(2, 3), x2(-5), a(1, 4);
  LieCoefficients c(2, 2);
  c.set(W("1"), x1);
  c.set(W("2"), x2);
  c.set(W("12"), a);
  LevelTensor t = rough_signature_level(c, 2);
  EXPECT_EQ(t.at(W("11")), x1 * x1 / 2);
  EXPECT_EQ(t.at(W("12")), x1 * x2 / 2 + a);
  EXPECT_EQ(t.at(W("21")), x1 * x2 / 2 - a);
  EXPECT_EQ(t.at(W("22")), x2 * x2 / 2);
}

TEST(RoughSignatureLevel, ZeroAndPureArea) {
  EXPECT_TRUE(rough_signature_level(LieCoefficients(3, 3), 3).is_zero());
  LieCoefficients c(2, 2);
  c.set(W("12"), 7);
  EXPECT_EQ(rough_signature_level(c, 2).as_poly(), P(2, {{"12", 7}, {"21", -7}}));
}

TEST(RoughSignatureLevel, CliExample) {
  LieCoefficients c(2, 2);
  c.set(W("1"), 1);
  c.set(W("2"), 2);
  c.set(W("12"), 3);
  EXPECT_EQ(rough_signature_level(c, 2).as_poly(),
            P(2, {{"11", Rational(1, 2)}, {"12", 4}, {"21", -2}, {"22", 2}}));
}

TEST(PwlSignature, Examples) {
  PwlPath one{3, {{1, Rational(2, 3), -4}}};
  EXPECT_EQ(pwl_signature(one, 3).level(1), P(3, {{"1", 1}, {"2", Rational(2, 3)}, {"3", -4}}));
  PwlPath back{2, {{3, -1}, {-3, 1}}};
  EXPECT_EQ(pwl_signature(back, 4), TensorSeries::one(2, 4));
  TensorSeries s = pwl_signature(l_shaped(), 2);
  EXPECT_EQ(s.level(2), P(2, {{"11", Rational(1, 2)}, {"12", 1}, {"22", Rational(1, 2)}}));
  EXPECT_EQ(signed_area(s, 1, 2), Rational(1, 2));
  EXPECT_THROW(pwl_signature(PwlPath{2, {}}, 2), InvalidParameter);
  EXPECT_THROW(pwl_signature(PwlPath{2, {{1}}}, 2), InvalidParameter);
}

TEST(SignedArea, Examples) {
  TensorSeries pure = exp_trunc(TensorSeries::from_poly(P(2, {{"12", Rational(3, 5)}, {"21", Rational(-3, 5)}}), 3));
  EXPECT_EQ(signed_area(pure, 1, 2), Rational(3, 5));
  TensorSeries line = exp_trunc(TensorSeries::from_poly(P(3, {{"1", 2}, {"3", -1}}), 2));
  EXPECT_EQ(signed_area(line, 1, 3), 0);
  EXPECT_THROW(signed_area(line, 2, 1), InvalidParameter);
}

TEST(PwlSignature, MatchesIteratedIntegrals) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 1 + trial % 3;
    const int m = 1 + trial % 3;
    PwlPath path = random_path(rng, d, 1 + trial % 4);
    TensorSeries s = pwl_signature(path, m);
    auto oracle_values = oracle::iterated_integrals(path.segments, d, m);
    for (const auto& [w, v] : oracle_values) EXPECT_EQ(s.coeff(W(w)), v) << w;
  }
  auto l = oracle::iterated_integrals(l_shaped().segments, 2, 2);
  EXPECT_EQ(l["11"], Rational(1, 2));
  EXPECT_EQ(l["12"], 1);
  EXPECT_EQ(l["21"], 0);
  EXPECT_EQ(l["22"], Rational(1, 2));
}

TEST(PwlSignature, ChenAndShuffleIdentity) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int d = 1 + trial % 3;
    const int m = 1 + trial % 4;
    PwlPath a = random_path(rng, d, 1 + trial % 2);
    PwlPath b = random_path(rng, d, 1 + (trial / 2) % 2);
    PwlPath ab = a;
    ab.segments.insert(ab.segments.end(), b.segments.begin(), b.segments.end());
    TensorSeries sab = pwl_signature(ab, m);
    EXPECT_EQ(sab, truncated_mul(pwl_signature(a, m), pwl_signature(b, m)));
    EXPECT_TRUE(is_group_like(sab));
  }
}

TEST(RoughSignatureLevel, WeightedScaling) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + trial % 2;
    const int k = 2 + trial % 3;
    LieCoefficients c = testutil::random_lie(rng, d, k);
    const Rational t = testutil::random_rational(rng, false);
    LevelTensor expected = rough_signature_level(c, k);
    Rational tk = 1;
    for (int i = 0; i < k; ++i) tk *= t;
    expected *= tk;
    EXPECT_EQ(rough_signature_level(c.weighted_scale(t), k), expected);
  }
}

TEST(RoughSignatureLevel, NestedTruncations) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const int d = 2 + trial % 2;
    const int k = 3 + trial % 2;
    const int small = 1 + trial % (k - 1);
    LieCoefficients narrow = testutil::random_lie(rng, d, small);
    LieCoefficients wide(d, k);
    for (const auto& [w, v] : narrow.coeffs()) wide.set(w, v);
    EXPECT_EQ(rough_signature_level(narrow, k), rough_signature_level(wide, k));
  }
}

TEST(LevelTensor, RoundTrip) {
  FreePoly p = P(2, {{"12", 1}, {"21", Rational(-2, 3)}});
  EXPECT_EQ(LevelTensor::from_level(p, 2).as_poly(), p);
  EXPECT_THROW(LevelTensor::from_level(p, 3), InvalidParameter);
}
