#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "roughver/free_poly.hpp"
#include "roughver/word.hpp"

namespace roughver {

/// The Lyndon words of length at most m over {1, ..., d}, in ShortLex order.
struct LyndonSet {
  int d = 0;
  int m = 0;
  std::vector<Word> words;

  std::size_t size() const noexcept { return words.size(); }
  /// Position of w in `words`, if w is a member.
  std::optional<std::size_t> index_of(const Word& w) const;
  std::size_t count_of_length(std::size_t l) const;
};

/// True iff w is nonempty and strictly smaller than each of its proper suffixes.
bool is_lyndon(const Word& w);

/// Duval's generator, restricted to lengths 1..m and re-sorted by length.
LyndonSet lyndon_words(int d, int m);

/// Number of Lyndon words of length l over d letters (Moebius inversion).
/// Throws InvalidParameter on l < 1, d < 1, or 64-bit overflow.
std::uint64_t lyndon_count(int l, int d);

/// Dimension of the degree <= m truncation of the free Lie algebra on d letters.
std::uint64_t lie_dimension(int d, int m);

/// Chen-Fox-Lyndon factorization w = w_1 w_2 ... w_r with w_1 >= ... >= w_r,
/// each w_i Lyndon (Duval's factorization algorithm).
std::vector<Word> cfl_factorize(const Word& w);

/// Split w = pq with q the lexicographically smallest proper nonempty suffix.
std::pair<Word, Word> standard_factorization(const Word& w);

/// The Lie polynomial P_w: the letter itself for |w| = 1, otherwise
/// [P_p, P_q] = P_p P_q - P_q P_p for the standard factorization w = pq.
FreePoly standard_bracketing(const Word& w, int d);

}  // namespace roughver
