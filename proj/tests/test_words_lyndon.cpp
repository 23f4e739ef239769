#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "roughver/errors.hpp"
#include "roughver/exact_matrix.hpp"
#include "roughver/lyndon.hpp"
#include "test_util.hpp"

using namespace roughver;
using testutil::P;
using testutil::W;

namespace {

std::vector<std::string> as_strings(const std::vector<Word>& ws) {
  std::vector<std::string> out;
  for (const auto& w : ws) out.push_back(w.to_string());
  return out;
}

}  // namespace

TEST(Word, ParseAndFormat) {
  EXPECT_EQ(W("1122").to_string(), "1122");
  EXPECT_EQ(Word({1, 12, 3}).to_string(12), "1,12,3");
  EXPECT_EQ(Word::parse("1,12,3", 12), Word({1, 12, 3}));
  EXPECT_EQ(Word::parse("", 2), Word());
  EXPECT_THROW(Word::parse("13", 2), ParseError);
  EXPECT_THROW(Word::parse("1a"), ParseError);
  EXPECT_THROW(Word({0}), InvalidParameter);
  EXPECT_THROW(Word({65}), InvalidParameter);
  EXPECT_THROW(check_alphabet(0), InvalidParameter);
}

TEST(Word, LexicographicOrderHasPrefixFirst) {
  EXPECT_LT(W("1"), W("12"));
  EXPECT_LT(W("12"), W("2"));
  EXPECT_TRUE(ShortLex{}(W("2"), W("12")));
  EXPECT_FALSE(ShortLex{}(W("12"), W("12")));
}

TEST(LyndonWords, TwoLettersLengthFour) {
  EXPECT_EQ(as_strings(lyndon_words(2, 4).words),
            (std::vector<std::string>{"1", "2", "12", "112", "122", "1112", "1122", "1222"}));
}

TEST(LyndonWords, ThreeLettersLengthThree) {
  LyndonSet s = lyndon_words(3, 3);
  std::vector<std::string> got = as_strings(s.words);
  std::set<std::string> expected{"1",   "2",   "3",   "12",  "13",  "23",  "112",
                                 "113", "122", "133", "223", "233", "123", "132"};
  EXPECT_EQ(got.size(), 14u);
  EXPECT_EQ(std::set<std::string>(got.begin(), got.end()), expected);
  // canonical (length, lex) order
  EXPECT_TRUE(std::is_sorted(s.words.begin(), s.words.end(), ShortLex{}));
}

TEST(LyndonWords, SingleLetter) {
  EXPECT_EQ(as_strings(lyndon_words(1, 5).words), (std::vector<std::string>{"1"}));
}

TEST(LyndonWords, RejectsZeroParameters) {
  EXPECT_THROW(lyndon_words(0, 3), InvalidParameter);
  EXPECT_THROW(lyndon_words(2, 0), InvalidParameter);
  EXPECT_THROW(lyndon_count(0, 2), InvalidParameter);
}

TEST(LyndonWords, MatchesBruteForceForSmallAlphabets) {
  for (int d = 1; d <= 4; ++d) {
    for (int m = 1; m <= 6; ++m) {
      LyndonSet s = lyndon_words(d, m);
      std::set<std::string> brute;
      for (int l = 1; l <= m; ++l) {
        for (const Word& w : words_of_length(d, static_cast<std::size_t>(l))) {
          if (oracle::is_lyndon(w.to_string())) brute.insert(w.to_string());
        }
      }
      std::vector<std::string> got = as_strings(s.words);
      EXPECT_EQ(std::set<std::string>(got.begin(), got.end()), brute) << d << "," << m;
      EXPECT_EQ(got.size(), brute.size()) << "duplicates for " << d << "," << m;
      std::uint64_t total = 0;
      for (int l = 1; l <= m; ++l) {
        EXPECT_EQ(lyndon_count(l, d), s.count_of_length(static_cast<std::size_t>(l)));
        total += lyndon_count(l, d);
      }
      EXPECT_EQ(total, s.size());
      EXPECT_EQ(lie_dimension(d, m), s.size());
    }
  }
}

TEST(LyndonCount, Values) {
  EXPECT_EQ(lyndon_count(1, 2), 2u);
  EXPECT_EQ(lyndon_count(4, 2), 3u);
  EXPECT_EQ(lyndon_count(3, 3), 8u);
  EXPECT_EQ(lyndon_count(6, 2), 9u);
}

TEST(LyndonSet, IndexOf) {
  LyndonSet s = lyndon_words(2, 4);
  EXPECT_EQ(s.index_of(W("12")), 2u);
  EXPECT_EQ(s.index_of(W("21")), std::nullopt);
}

TEST(Cfl, Examples) {
  EXPECT_EQ(as_strings(cfl_factorize(W("21"))), (std::vector<std::string>{"2", "1"}));
  EXPECT_EQ(as_strings(cfl_factorize(W("1111"))), (std::vector<std::string>{"1", "1", "1", "1"}));
  // Brute force: the unique non-increasing Lyndon factorization of 2112.
  auto brute = oracle::cfl_candidates("2112");
  ASSERT_EQ(brute.size(), 1u);
  EXPECT_EQ(brute[0], (std::vector<std::string>{"2", "112"}));
  EXPECT_EQ(as_strings(cfl_factorize(W("2112"))), brute[0]);
  EXPECT_THROW(cfl_factorize(Word()), InvalidParameter);
}

TEST(Cfl, AgreesWithBruteForceAndConcatenates) {
  for (int d = 1; d <= 3; ++d) {
    for (std::size_t len = 1; len <= 8; ++len) {
      for (const Word& w : words_of_length(d, len)) {
        auto factors = cfl_factorize(w);
        Word joined;
        for (const auto& f : factors) {
          EXPECT_TRUE(is_lyndon(f));
          joined += f;
        }
        EXPECT_EQ(joined, w);
        for (std::size_t i = 1; i < factors.size(); ++i) EXPECT_GE(factors[i - 1], factors[i]);
        if (len <= 6) {
          auto brute = oracle::cfl_candidates(w.to_string());
          ASSERT_EQ(brute.size(), 1u) << w.to_string();
          EXPECT_EQ(as_strings(factors), brute[0]);
        }
      }
    }
  }
}

TEST(Cfl, MultisetOfFactorsDeterminesTheWord) {
  for (int d = 2; d <= 3; ++d) {
    for (std::size_t k = 1; k <= 5; ++k) {
      std::map<std::multiset<std::string>, std::string> seen;
      for (const Word& w : words_of_length(d, k)) {
        auto f = as_strings(cfl_factorize(w));
        auto [it, inserted] = seen.emplace(std::multiset<std::string>(f.begin(), f.end()), w.to_string());
        EXPECT_TRUE(inserted) << w.to_string() << " collides with " << it->second;
      }
    }
  }
}

TEST(Bracketing, Examples) {
  EXPECT_EQ(standard_bracketing(W("1"), 2), P(2, {{"1", 1}}));
  EXPECT_EQ(standard_bracketing(W("12"), 2), P(2, {{"12", 1}, {"21", -1}}));
  // [1,[1,2]] expanded by the independent expander.
  oracle::Poly expected = oracle::bracket_longest_lyndon_suffix("112");
  EXPECT_EQ(expected, (oracle::Poly{{"112", 1}, {"121", -2}, {"211", 1}}));
  EXPECT_EQ(standard_bracketing(W("112"), 2), testutil::from_oracle(expected, 2));
  EXPECT_THROW(standard_bracketing(W("21"), 2), InvalidParameter);
}

TEST(Bracketing, MinimalSuffixRuleMatchesLongestLyndonSuffix) {
  for (int d = 2; d <= 3; ++d) {
    for (const Word& w : lyndon_words(d, 6).words) {
      EXPECT_EQ(standard_bracketing(w, d),
                testutil::from_oracle(oracle::bracket_longest_lyndon_suffix(w.to_string()), d))
          << w.to_string();
    }
  }
}

TEST(Bracketing, HomogeneousWithZeroCoefficientSum) {
  for (const Word& w : lyndon_words(3, 5).words) {
    FreePoly p = standard_bracketing(w, 3);
    EXPECT_EQ(p.homogeneous_degree(), w.size());
    if (w.size() >= 2) EXPECT_EQ(p.coefficient_sum(), 0);
    // P_w = w + (larger words): leading term is the word itself.
    EXPECT_EQ(p.coeff(w), 1);
  }
}

// The bracketings of length-l Lyndon words form a basis of the degree-l part
// of the free Lie algebra, spanned by left-normed brackets of letters.
TEST(Bracketing, SpansTheBruteForceLieComponent) {
  for (int d = 2; d <= 3; ++d) {
    for (std::size_t l = 1; l <= 4; ++l) {
      std::vector<Word> cols = words_of_length(d, l);
      std::vector<FreePoly> span;
      for (const Word& letters : cols) {
        FreePoly acc = FreePoly::word(d, Word::letter(letters[0]));
        for (std::size_t i = 1; i < l; ++i) {
          FreePoly x = FreePoly::word(d, Word::letter(letters[i]));
          acc = concat(acc, x) - concat(x, acc);
        }
        span.push_back(acc);
      }
      std::vector<FreePoly> basis;
      for (const Word& w : lyndon_words(d, static_cast<int>(l)).words) {
        if (w.size() == l) basis.push_back(standard_bracketing(w, d));
      }
      auto to_matrix = [&](const std::vector<FreePoly>& rows) {
        RationalMatrix m(rows.size(), cols.size());
        for (std::size_t r = 0; r < rows.size(); ++r)
          for (std::size_t c = 0; c < cols.size(); ++c) m(r, c) = rows[r].coeff(cols[c]);
        return m;
      };
      std::vector<FreePoly> both = span;
      both.insert(both.end(), basis.begin(), basis.end());
      const std::size_t r_span = rank(to_matrix(span));
      EXPECT_EQ(rank(to_matrix(basis)), basis.size());
      EXPECT_EQ(r_span, basis.size());
      EXPECT_EQ(rank(to_matrix(both)), r_span);
    }
  }
}
