#include <gtest/gtest.h>

#include <random>
#include <set>

#include "golden_u24.hpp"
#include "oracles.hpp"
#include "roughver/coord_change.hpp"
#include "roughver/errors.hpp"
#include "roughver/signature.hpp"
#include "roughver/toric.hpp"
#include "test_util.hpp"

using namespace roughver;
using testutil::P;
using testutil::W;

namespace {

const FreePoly& row_for(const CoordChangeMatrix& m, const std::string& label) {
  for (std::size_t i = 0; i < m.rows.size(); ++i)
    if (tuple_label(m.index.tuples[i], m.index.d) == label) return m.rows[i];
  throw std::runtime_error("no row " + label);
}

std::string label_of(std::initializer_list<const char*> words, int d) {
  Tuple t;
  for (const char* w : words) t.push_back(W(w));
  return tuple_label(t, d);
}

}  // namespace

TEST(SPoly, Examples) {
  for (const Word& w : lyndon_words(2, 4).words) EXPECT_EQ(s_poly(w, 2), FreePoly::word(2, w));
  EXPECT_EQ(s_poly(W("132"), 3), P(3, {{"123", 1}, {"132", 1}}));
  EXPECT_EQ(s_poly(W("11"), 2), P(2, {{"11", 1}}));
  EXPECT_EQ(s_poly(Word(), 2), FreePoly::unit(2));
  // the remaining length-3 Lyndon words over three letters are fixed
  for (const Word& w : lyndon_words(3, 3).words)
    if (w != W("132")) EXPECT_EQ(s_poly(w, 3), FreePoly::word(3, w)) << w.to_string();
}

TEST(Psi, Examples) {
  EXPECT_EQ(psi(P(3, {{"2", 1}})), P(3, {{"2", 1}}));
  EXPECT_EQ(psi(P(2, {{"12", 1}})), P(2, {{"12", Rational(1, 2)}, {"21", Rational(-1, 2)}}));
  EXPECT_TRUE(psi(P(2, {{"11", 1}})).is_zero());
  EXPECT_EQ(psi(P(2, {{"1112", 1}})), P(2, {{"1211", Rational(1, 6)}, {"1121", Rational(-1, 6)}}));
}

TEST(Psi, MatchesCompositionOracleAndKeepsDegrees) {
  for (int d = 1; d <= 3; ++d) {
    for (std::size_t len = 1; len <= (d == 3 ? 4u : 5u); ++len) {
      for (const Word& w : words_of_length(d, len)) {
        FreePoly got = psi(FreePoly::word(d, w));
        EXPECT_EQ(testutil::to_oracle(got), oracle::psi(w.to_string())) << w.to_string();
        if (!got.is_zero()) EXPECT_EQ(got.homogeneous_degree(), len);
      }
    }
  }
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 30; ++trial) {
    FreePoly p = testutil::random_poly(rng, 2, 1, 5, 4);
    FreePoly q = psi(p);
    for (std::size_t deg : q.degrees()) EXPECT_TRUE(p.degrees().count(deg));
  }
}

TEST(Psi, LengthCap) {
  Word longw;
  for (int i = 0; i < 13; ++i) longw.push_back(1 + i % 2);
  EXPECT_THROW(psi(FreePoly::word(2, longw)), ResourceError);
}

TEST(TupleIndex, OrderAndSize) {
  TupleIndex idx = TupleIndex::build(2, 4, 4);
  ASSERT_EQ(idx.tuples.size(), 16u);
  std::vector<std::string> labels;
  for (const auto& t : idx.tuples) labels.push_back(tuple_label(t, 2));
  EXPECT_EQ(labels, (std::vector<std::string>{"1·1·1·1", "1·1·1·2", "1·1·2·2", "1·2·2·2", "2·2·2·2",
                                              "1·1·12", "1·2·12", "2·2·12", "1·112", "1·122", "2·112",
                                              "2·122", "12·12", "1112", "1122", "1222"}));
  EXPECT_EQ(idx.position({W("12"), W("1"), W("1")}), 5u);
  EXPECT_EQ(idx.position({W("21")}), std::nullopt);
}

TEST(CoordChange, TwoByTwo) {
  CoordChangeMatrix m = coord_change_matrix(2, 2, 2);
  ASSERT_EQ(m.rows.size(), 4u);
  EXPECT_EQ(m.rows[0], P(2, {{"11", 2}}));
  EXPECT_EQ(m.rows[1], P(2, {{"12", 1}, {"21", 1}}));
  EXPECT_EQ(m.rows[2], P(2, {{"22", 2}}));
  EXPECT_EQ(m.rows[3], P(2, {{"12", Rational(1, 2)}, {"21", Rational(-1, 2)}}));
  EXPECT_NE(m.determinant(), 0);
  EXPECT_EQ(m.determinant(), 4);  // expanded by hand along the first row
}

TEST(CoordChange, RejectsBadParameters) {
  EXPECT_THROW(coord_change_matrix(2, 2, 3), InvalidParameter);
  EXPECT_THROW(coord_change_matrix(2, 0, 0), InvalidParameter);
  EXPECT_THROW(coord_change_matrix(2, 3, 2).determinant(), InvalidParameter);
}

TEST(CoordChange, GoldenU24) {
  CoordChangeMatrix m = coord_change_matrix(2, 4, 4);
  std::set<std::string> seen;
  for (const auto& row : golden::u24_rows()) {
    FreePoly printed = golden::expand(2, row.groups);
    EXPECT_EQ(printed, row.scale * row_for(m, row.tuple)) << row.printed_name;
    seen.insert(row.tuple);
  }
  EXPECT_EQ(seen.size(), 16u);
  EXPECT_EQ(row_for(m, "1112"), P(2, {{"1211", Rational(1, 6)}, {"1121", Rational(-1, 6)}}));
}

TEST(CoordChange, GoldenU33) {
  CoordChangeMatrix m = coord_change_matrix(3, 3, 3);
  for (int i = 1; i <= 3; ++i)
    for (int j = i; j <= 3; ++j)
      for (int k = j; k <= 3; ++k) {
        std::string a(1, char('0' + i)), b(1, char('0' + j)), c(1, char('0' + k));
        EXPECT_EQ(row_for(m, label_of({a.c_str(), b.c_str(), c.c_str()}, 3)),
                  golden::expand(3, golden::u33_letters(i, j, k)));
      }
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      for (int k = j + 1; k <= 3; ++k) {
        std::string a(1, char('0' + i)), jk{char('0' + j), char('0' + k)};
        EXPECT_EQ(row_for(m, label_of({a.c_str(), jk.c_str()}, 3)),
                  golden::expand(3, golden::u33_letter_pair(i, j, k)))
            << a << "," << jk;
      }
  EXPECT_EQ(row_for(m, "132"), golden::expand(3, golden::u33_132()));
  for (const auto& w : golden::u33_other_lyndon()) {
    EXPECT_EQ(row_for(m, w), golden::expand(3, golden::u33_lyndon(w[0] - '0', w[1] - '0', w[2] - '0')))
        << w;
  }
}

TEST(CoordChange, Invertible) {
  for (auto [d, k] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}}) {
    CoordChangeMatrix m = coord_change_matrix(d, k, k);
    ASSERT_TRUE(m.is_square());
    EXPECT_NE(m.determinant(), 0) << d << "," << k;
    auto inv = m.inverse();
    ASSERT_TRUE(inv);
    std::size_t n = m.rows.size();
    EXPECT_EQ(m.dense() * *inv, RationalMatrix::identity(n));
  }
}

TEST(CoordinateLemma, Examples) {
  LieCoefficients ones(2, 2);
  for (const char* w : {"1", "2", "12"}) ones.set(W(w), 1);
  for (const Tuple& t : TupleIndex::build(2, 2, 2).tuples) {
    LemmaCheck r = verify_coordinate_lemma(ones, t);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.pairing, 1);
  }
  LemmaCheck zero = verify_coordinate_lemma(LieCoefficients(2, 3), {W("112")});
  EXPECT_EQ(zero.pairing, 0);
  EXPECT_TRUE(zero.pass);
  for (const Word& w : lyndon_words(2, 4).words) {
    if (w.size() != 4) continue;
    LieCoefficients ind(2, 4);
    ind.set(w, 1);
    EXPECT_EQ(verify_coordinate_lemma(ind, {w}).pairing, 1);
  }
  EXPECT_THROW(verify_coordinate_lemma(ones, {W("112")}), InvalidParameter);
}

TEST(CoordinateLemma, RandomCoefficients) {
  std::mt19937_64 rng(2718);
  const std::vector<std::pair<int, int>> cases{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {2, 4}};
  for (int trial = 0; trial < 20; ++trial) {
    for (auto [d, m] : cases) {
      LieCoefficients c = testutil::random_lie(rng, d, m);
      for (int k = 1; k <= m; ++k) {
        for (const Tuple& t : TupleIndex::build(d, k, m).tuples) {
          LemmaCheck r = verify_coordinate_lemma(c, t);
          EXPECT_TRUE(r.pass) << tuple_label(t, d);
        }
      }
    }
  }
}

TEST(Monomialization, Examples) {
  const Rational x1(3, 2), x2(-2), a(5);
  LieCoefficients c(2, 2);
  c.set(W("1"), x1);
  c.set(W("2"), x2);
  c.set(W("12"), a);
  EXPECT_EQ(monomialized_signature(c, 2), (std::vector<Rational>{x1 * x1, x1 * x2, x2 * x2, a}));
  for (const Rational& v : monomialized_signature(LieCoefficients(2, 3), 3)) EXPECT_EQ(v, 0);
  EXPECT_THROW(monomialized_signature(LieCoefficients(2, 3), 2), InvalidParameter);
}

TEST(Monomialization, MatchesDirectMonomialEvaluation) {
  std::mt19937_64 rng(8);
  const std::vector<std::array<int, 3>> cases{{2, 4, 4}, {2, 4, 2}, {3, 3, 3}, {3, 3, 2}, {2, 5, 3}};
  for (int trial = 0; trial < 5; ++trial) {
    for (auto [d, k, m] : cases) {
      LieCoefficients c = testutil::random_lie(rng, d, m);
      TupleIndex idx = TupleIndex::build(d, k, m);
      std::vector<Rational> got = monomialized_signature(c, k);
      ASSERT_EQ(got.size(), idx.tuples.size());
      for (std::size_t i = 0; i < got.size(); ++i) {
        Rational expected = 1;
        for (const Word& w : idx.tuples[i]) expected *= c.get(w);
        EXPECT_EQ(got[i], expected) << tuple_label(idx.tuples[i], d);
      }
    }
  }
}

// The tuples indexing the coordinate change and the exponent vectors of the
// toric parametrization describe the same monomials.
TEST(Monomialization, TuplesMatchWeightedMonomials) {
  for (int d = 1; d <= 3; ++d) {
    for (int k = 1; k <= 5; ++k) {
      for (int m = 1; m <= k; ++m) {
        TupleIndex idx = TupleIndex::build(d, k, m);
        MonomialSet mons = weighted_monomials(d, k, m);
        std::set<ExponentVector> from_tuples;
        for (const Tuple& t : idx.tuples) {
          ExponentVector e(mons.variables.size(), 0);
          for (const Word& w : t) ++e[*mons.variables.index_of(w)];
          from_tuples.insert(e);
        }
        EXPECT_EQ(from_tuples, std::set<ExponentVector>(mons.exponents.begin(), mons.exponents.end()));
        EXPECT_EQ(from_tuples.size(), idx.tuples.size());
      }
    }
  }
}
