#pragma once

#include <map>
#include <optional>
#include <utility>

#include "roughver/free_poly.hpp"
#include "roughver/rational.hpp"
#include "roughver/word.hpp"

namespace roughver {

/// An element of the truncated tensor algebra T^m(R^d): a scalar plus words
/// of length 1..m. Every binary operation requires equal (d, m).
class TensorSeries {
 public:
  TensorSeries(int d, int m);

  static TensorSeries one(int d, int m);
  /// Words longer than m are dropped; the coefficient of e becomes the scalar.
  static TensorSeries from_poly(const FreePoly& p, int m);

  int alphabet() const noexcept { return body_.alphabet(); }
  int truncation() const noexcept { return m_; }
  const Rational& scalar() const noexcept { return scalar_; }
  const FreePoly& body() const noexcept { return body_; }

  /// <S, w>; the empty word reads the scalar.
  Rational coeff(const Word& w) const;
  /// Projection onto (R^d)^{(x)k}; k = 0 is the scalar as a multiple of e.
  FreePoly level(std::size_t k) const;
  /// Scalar and body merged into one polynomial.
  FreePoly as_poly() const;

  TensorSeries& operator+=(const TensorSeries& other);
  TensorSeries& operator-=(const TensorSeries& other);
  TensorSeries& operator*=(const Rational& c);
  friend TensorSeries operator+(TensorSeries a, const TensorSeries& b) { return a += b; }
  friend TensorSeries operator-(TensorSeries a, const TensorSeries& b) { return a -= b; }
  friend TensorSeries operator-(TensorSeries a) { return a *= Rational(-1); }
  friend TensorSeries operator*(TensorSeries a, const Rational& c) { return a *= c; }
  friend TensorSeries operator*(const Rational& c, TensorSeries a) { return a *= c; }
  friend bool operator==(const TensorSeries&, const TensorSeries&) = default;

  /// Throws InvalidParameter unless d and m agree.
  void require_compatible(const TensorSeries& other) const;

 private:
  int m_;
  Rational scalar_;
  FreePoly body_;
};

TensorSeries truncated_mul(const TensorSeries& s, const TensorSeries& t);

/// exp(T) = sum T^n / n!, n <= m. Requires scalar 0.
TensorSeries exp_trunc(const TensorSeries& t);

/// log(S) = sum (-1)^{n+1} (S - 1)^n / n, n <= m. Requires scalar 1.
TensorSeries log_trunc(const TensorSeries& s);

/// Inverse in the truncated group. Requires scalar 1.
TensorSeries group_inverse(const TensorSeries& s);

/// Outcome of the shuffle-identity test <S,v><S,w> = <S, v sh w>.
struct GroupLikeCheck {
  bool group_like = true;
  /// First failing pair; (e, e) when the scalar is not 1.
  std::optional<std::pair<Word, Word>> witness;
  Rational product;        ///< <S,v><S,w> at the witness
  Rational shuffle_value;  ///< <S, v sh w> at the witness

  explicit operator bool() const noexcept { return group_like; }
};

/// Checks scalar == 1 and the shuffle identity for all nonempty v, w with
/// |v| <= |w| and |v| + |w| <= m, in ShortLex order of (v, w).
GroupLikeCheck is_group_like(const TensorSeries& s);

/// Coordinates of a Lie element in the Lyndon basis {P_w : w in W_{d,m}}.
class LieCoefficients {
 public:
  using Map = std::map<Word, Rational, ShortLex>;

  LieCoefficients(int d, int m);

  int alphabet() const noexcept { return d_; }
  int truncation() const noexcept { return m_; }
  const Map& coeffs() const noexcept { return coeffs_; }

  /// Throws InvalidParameter unless w is a Lyndon word of length <= m over d letters.
  void set(const Word& w, const Rational& c);
  Rational get(const Word& w) const;

  /// Multiplies each alpha_w by t^{|w|}.
  LieCoefficients weighted_scale(const Rational& t) const;
  LieCoefficients operator-() const;

 private:
  int d_;
  int m_;
  Map coeffs_;
};

/// sum alpha_w P_w at truncation `truncation` (defaults to the coefficient
/// truncation m); brackets longer than the truncation are dropped.
TensorSeries lie_element(const LieCoefficients& c, std::optional<int> truncation = std::nullopt);

}  // namespace roughver
