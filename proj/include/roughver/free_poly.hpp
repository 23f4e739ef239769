#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "roughver/rational.hpp"
#include "roughver/word.hpp"

namespace roughver {

/// A noncommutative polynomial: a finite Q-linear combination of words over
/// {1, ..., d}. Zero coefficients are never stored, so equality of term maps
/// is equality of polynomials. Terms iterate in ShortLex order.
class FreePoly {
 public:
  using Terms = std::map<Word, Rational, ShortLex>;

  explicit FreePoly(int d);

  static FreePoly word(int d, const Word& w, const Rational& c = 1);
  /// The empty word e, unit for both products.
  static FreePoly unit(int d) { return word(d, Word()); }

  int alphabet() const noexcept { return d_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coeff(const Word& w) const;
  /// Adds c to the coefficient of w, erasing it if the result is zero.
  void add_term(const Word& w, const Rational& c);

  /// Set of word lengths carrying nonzero coefficients.
  std::set<std::size_t> degrees() const;
  /// The common length when the polynomial is nonzero and homogeneous.
  std::optional<std::size_t> homogeneous_degree() const;
  Rational coefficient_sum() const;
  /// Part of length exactly k.
  FreePoly level(std::size_t k) const;

  FreePoly& operator+=(const FreePoly& other);
  FreePoly& operator-=(const FreePoly& other);
  FreePoly& operator*=(const Rational& c);
  friend FreePoly operator+(FreePoly a, const FreePoly& b) { return a += b; }
  friend FreePoly operator-(FreePoly a, const FreePoly& b) { return a -= b; }
  friend FreePoly operator-(FreePoly a) { return a *= Rational(-1); }
  friend FreePoly operator*(FreePoly a, const Rational& c) { return a *= c; }
  friend FreePoly operator*(const Rational& c, FreePoly a) { return a *= c; }

  friend bool operator==(const FreePoly& a, const FreePoly& b) {
    return a.d_ == b.d_ && a.terms_ == b.terms_;
  }

 private:
  void check_same_alphabet(const FreePoly& other) const;

  int d_;
  Terms terms_;
};

/// Throws InvalidParameter when the two alphabets differ.
void require_same_alphabet(const FreePoly& p, const FreePoly& q);

/// Bilinear extension of word concatenation.
FreePoly concat(const FreePoly& p, const FreePoly& q);

/// Bilinear extension of the shuffle of words.
FreePoly shuffle(const FreePoly& p, const FreePoly& q);

/// Sum over common support of p(w) * q(w).
Rational pair(const FreePoly& p, const FreePoly& q);

/// n-fold shuffle of p with itself; shuffle_power(p, 0) is e.
FreePoly shuffle_power(const FreePoly& p, unsigned n);

/// Shuffle of two words as (word, multiplicity) pairs in ShortLex order.
/// Results are memoized per thread.
using WordShuffle = std::vector<std::pair<Word, std::uint64_t>>;
WordShuffle shuffle_words(const Word& v, const Word& w);

/// Drops the calling thread's shuffle memo.
void clear_shuffle_cache();

}  // namespace roughver
