#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "roughver/lyndon.hpp"
#include "roughver/rational.hpp"

namespace roughver {

/// Exponents of the variables x_w, indexed by W_{d,m} in ShortLex order.
using ExponentVector = std::vector<int>;

/// The weights |w| of the variables x_w, in W_{d,m} order: i repeated
/// lyndon_count(i, d) times for i = 1..m.
struct WeightSequence {
  int d = 0;
  int m = 0;
  std::vector<int> s;
};
WeightSequence weight_sequence(int d, int m);

/// All monomials of weighted degree k in the variables {x_w : w in W_{d,m}}.
/// `m > k` is normalized to `m = k`. Exponents are listed in decreasing
/// lexicographic order (x_1^k first).
struct MonomialSet {
  int d = 0;
  int k = 0;
  int m = 0;
  LyndonSet variables;
  std::vector<ExponentVector> exponents;

  std::size_t size() const noexcept { return exponents.size(); }
};
/// Enumeration limit; larger monomial sets raise ResourceError.
inline constexpr unsigned long kMaxMonomials = 1ul << 22;
MonomialSet weighted_monomials(int d, int k, int m);

/// The three independent counts of weighted-degree-k monomials.
std::uint64_t span_count_enumerated(int d, int k, int m);
Integer span_count_partitions(int d, int k, int m);
Integer span_count_series(int d, int k, int m);

/// Affine dimension N of the linear span (projective span is N - 1).
/// Throws InternalDisagreement if the three counts differ.
std::uint64_t span_dimension(int d, int k, int m);

/// Projective dimension: the rank of {a - a_0 : a in A}, checked against
/// dim Lie^m - 1. Throws InternalDisagreement on mismatch.
int variety_dimension(int d, int k, int m);

struct SumsetOptions {
  std::size_t memory_budget_bytes = std::size_t{2} << 30;
};

/// Incrementally enumerates the n-fold sumsets nA = {a_1 + ... + a_n} of a
/// finite set of nonnegative integer vectors. Points are bit-packed into
/// 64-bit words and deduplicated in an open-addressing table.
class SumsetEnumerator {
 public:
  SumsetEnumerator(const std::vector<ExponentVector>& generators, int n_max,
                   SumsetOptions options = {});

  int current_degree() const noexcept { return n_; }
  std::uint64_t current_size() const noexcept { return points_.size() / words_per_key_; }

  /// Moves from nA to (n+1)A and returns |(n+1)A|. Throws ResourceError
  /// (carrying the last completed n) if the memory budget would be exceeded.
  std::uint64_t advance();

 private:
  std::size_t words_per_key_ = 1;
  std::vector<std::uint64_t> generators_;  // packed, words_per_key_ each
  std::vector<std::uint64_t> points_;      // packed current sumset
  int n_ = 0;
  int n_max_;
  SumsetOptions options_;
};

/// H(n) = |nA|; H(0) = 1, H(1) = |A|.
std::uint64_t hilbert_function(const std::vector<ExponentVector>& a, int n,
                               SumsetOptions options = {});

/// H(0), ..., H(n_max).
std::vector<std::uint64_t> hilbert_values(const std::vector<ExponentVector>& a, int n_max,
                                          SumsetOptions options = {});

struct DegreeOptions {
  int dimension_cap = 7;
  int n_max = 64;
  std::size_t memory_budget_bytes = std::size_t{2} << 30;
};

/// Trace of the degree computation, for inspection and tests.
struct DegreeTrace {
  int dimension = 0;
  std::vector<std::uint64_t> hilbert;  ///< H(0..n)
  std::vector<Integer> differences;    ///< r-th finite difference at n = 0..n
  std::uint64_t degree = 0;
};

/// Degree as the eventually constant r-th finite difference of H, where r is
/// the projective dimension. Accepted once three consecutive values with
/// n >= r agree and are positive. Throws ResourceError when r exceeds the
/// cap, when the memory budget runs out, or when n_max is reached first.
DegreeTrace toric_degree_trace(int d, int k, int m, DegreeOptions options = {});
std::uint64_t toric_degree(int d, int k, int m, DegreeOptions options = {});

/// N(N+1)/2 - |2A|: the dimension of the degree-2 part of the toric ideal in
/// span coordinates.
std::uint64_t quadric_space_dimension(int d, int k, int m);

struct ConeSplit {
  std::vector<Word> vertex;  ///< Lyndon words of length k
  int vertex_projective_dimension = 0;
  std::vector<ExponentVector> base;  ///< monomials of R_{d,k,k-1}, in W_{d,k-1} coordinates
};

/// Splits U_{d,k} into its vertex variables and the base R_{d,k,k-1},
/// verifying the cone structure. Throws InternalDisagreement on failure.
ConeSplit cone_vertex_split(int d, int k);

struct BasePointResult {
  bool base_point_free = true;
  /// Weighted projective point with a single 1 at a variable whose weight
  /// does not divide k.
  std::optional<std::vector<int>> witness;
  std::optional<Word> witness_variable;
};

/// Decided by divisibility of k by every weight, and independently by looking
/// for a pure power of each variable among the monomials; disagreement
/// throws InternalDisagreement.
BasePointResult is_base_point_free(int d, int k, int m);

using WeightTriple = std::array<int, 3>;

/// Two disjoint triples of distinct weights, each summing to k, such that no
/// other triple inside their union sums to k. First such pair in
/// lexicographic order, or nullopt.
std::optional<std::pair<WeightTriple, WeightTriple>> cubic_obstruction_search(
    int k, std::span<const int> weights);

}  // namespace roughver
