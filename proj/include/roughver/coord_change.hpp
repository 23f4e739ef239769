#pragma once

#include <optional>
#include <string>
#include <vector>

#include "roughver/exact_matrix.hpp"
#include "roughver/free_poly.hpp"
#include "roughver/lyndon.hpp"
#include "roughver/tensor_series.hpp"

namespace roughver {

/// A multiset of Lyndon words, stored sorted in ShortLex order.
using Tuple = std::vector<Word>;

/// Canonical order on tuples: more factors first, then lexicographic on the
/// factor sequences (factors compared in ShortLex).
bool tuple_before(const Tuple& a, const Tuple& b);

/// "1·12·2" style label; factors joined by U+00B7.
std::string tuple_label(const Tuple& t, int d);

/// The index set J of weighted-degree-k monomials: every multiset of Lyndon
/// words of length <= m whose lengths sum to k.
struct TupleIndex {
  int d = 0;
  int k = 0;
  int m = 0;
  LyndonSet lyndon;
  std::vector<Tuple> tuples;

  static TupleIndex build(int d, int k, int m);
  std::optional<std::size_t> position(const Tuple& t) const;
};

/// S_v: the empty word maps to e; a Lyndon word v = l w maps to l S_w;
/// otherwise v = w_1^{i_1} ... w_r^{i_r} (CFL, decreasing) maps to
/// S_{w_1}^{sh i_1} sh ... sh S_{w_r}^{sh i_r} / (i_1! ... i_r!).
FreePoly s_poly(const Word& v, int d);

/// psi(v) = sum_n (-1)^{n+1}/n sum_{v = u_1...u_n} u_1 sh ... sh u_n, extended
/// linearly. Words longer than kMaxPsiLength are rejected.
FreePoly psi(const FreePoly& p);
inline constexpr std::size_t kMaxPsiLength = 12;

/// psi(S_{w_1}) sh ... sh psi(S_{w_r}).
FreePoly tuple_functional(const Tuple& t, int d);

/// Rows of the linear change of coordinates T -> [<T, L_t>]_{t in J}.
struct CoordChangeMatrix {
  TupleIndex index;
  std::vector<FreePoly> rows;

  /// Rows against the columns words_of_length(d, k).
  RationalMatrix dense() const;
  bool is_square() const;
  /// Only for square matrices (m = k).
  Rational determinant() const;
  std::optional<RationalMatrix> inverse() const;
};

/// Requires 1 <= m <= k. Rows are computed independently and placed by index.
CoordChangeMatrix coord_change_matrix(int d, int k, int m);

struct LemmaCheck {
  Rational pairing;   ///< <exp(sum alpha_w P_w), psi(S_w1) sh ... sh psi(S_wr)>
  Rational expected;  ///< alpha_w1 ... alpha_wr
  bool pass = false;
};

/// Evaluates the pairing at truncation k = sum |w_i|.
LemmaCheck verify_coordinate_lemma(const LieCoefficients& c, const Tuple& t);

/// Each row of coord_change_matrix(d, k, m) applied to rough_signature_level(c, k),
/// ordered as TupleIndex::build(d, k, m).tuples.
std::vector<Rational> monomialized_signature(const LieCoefficients& c, int k);

}  // namespace roughver
