#pragma once

#include <map>
#include <vector>

#include "roughver/rational.hpp"
#include "roughver/tensor_series.hpp"
#include "roughver/word.hpp"

namespace roughver {

/// A piecewise linear path given by its segment increments in Q^d.
struct PwlPath {
  int d = 0;
  std::vector<std::vector<Rational>> segments;

  /// Throws InvalidParameter on an empty path or a wrong-sized increment.
  void validate() const;
};

/// One homogeneous level (R^d)^{(x)k} of a signature, stored sparsely.
class LevelTensor {
 public:
  LevelTensor(int d, int k);
  static LevelTensor from_level(const FreePoly& p, int k);

  int alphabet() const noexcept { return d_; }
  int level() const noexcept { return k_; }
  const std::map<Word, Rational, ShortLex>& entries() const noexcept { return entries_; }

  Rational at(const Word& w) const;
  void set(const Word& w, const Rational& c);
  bool is_zero() const noexcept { return entries_.empty(); }
  FreePoly as_poly() const;

  LevelTensor& operator*=(const Rational& c);
  friend bool operator==(const LevelTensor&, const LevelTensor&) = default;

 private:
  int d_;
  int k_;
  std::map<Word, Rational, ShortLex> entries_;
};

/// p_k(exp(L)) for L = sum alpha_w P_w, computed at truncation k. Lyndon
/// words longer than k do not reach level k and are ignored.
LevelTensor rough_signature_level(const LieCoefficients& lie, int k);

/// exp(v_1) (x) ... (x) exp(v_r) truncated at m.
TensorSeries pwl_signature(const PwlPath& path, int m);

/// (<S, ij> - <S, ji>) / 2 for 1 <= i < j <= d.
Rational signed_area(const TensorSeries& s, int i, int j);

}  // namespace roughver
