#include "roughver/lyndon.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "roughver/errors.hpp"

namespace roughver {

std::optional<std::size_t> LyndonSet::index_of(const Word& w) const {
  auto it = std::lower_bound(words.begin(), words.end(), w, ShortLex{});
  if (it == words.end() || *it != w) return std::nullopt;
  return static_cast<std::size_t>(it - words.begin());
}

std::size_t LyndonSet::count_of_length(std::size_t l) const {
  return static_cast<std::size_t>(
      std::count_if(words.begin(), words.end(), [l](const Word& w) { return w.size() == l; }));
}

bool is_lyndon(const Word& w) {
  if (w.empty()) return false;
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (!(w < w.suffix_from(i))) return false;
  }
  return true;
}

LyndonSet lyndon_words(int d, int m) {
  if (d < 1 || m < 1) {
    throw InvalidParameter("lyndon_words requires d >= 1 and m >= 1");
  }
  check_alphabet(d);
  LyndonSet out{d, m, {}};
  // Duval: successor of a Lyndon word w is obtained by repeating w up to
  // length m, stripping trailing maximal letters and incrementing the last.
  std::vector<int> w{1};
  while (!w.empty()) {
    out.words.emplace_back(w);
    std::size_t len = w.size();
    while (w.size() < static_cast<std::size_t>(m)) w.push_back(w[w.size() - len]);
    while (!w.empty() && w.back() == d) w.pop_back();
    if (!w.empty()) ++w.back();
  }
  std::stable_sort(out.words.begin(), out.words.end(), ShortLex{});
  return out;
}

namespace {

int moebius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return 0;
      result = -result;
    }
  }
  if (n > 1) result = -result;
  return result;
}

}  // namespace

std::uint64_t lyndon_count(int l, int d) {
  if (l < 1 || d < 1) {
    throw InvalidParameter("lyndon_count requires l >= 1 and d >= 1");
  }
  Integer total = 0;
  for (int t = 1; t <= l; ++t) {
    if (l % t != 0) continue;
    int mu = moebius(t);
    if (mu == 0) continue;
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(d),
                  static_cast<unsigned long>(l / t));
    total += mu * power;
  }
  total /= l;
  if (!total.fits_ulong_p()) {
    throw InvalidParameter("lyndon_count(" + std::to_string(l) + ", " + std::to_string(d) +
                           ") exceeds 64 bits");
  }
  return total.get_ui();
}

std::uint64_t lie_dimension(int d, int m) {
  std::uint64_t total = 0;
  for (int l = 1; l <= m; ++l) {
    std::uint64_t c = lyndon_count(l, d);
    if (total > std::numeric_limits<std::uint64_t>::max() - c) {
      throw InvalidParameter("Lie algebra dimension exceeds 64 bits");
    }
    total += c;
  }
  return total;
}

std::vector<Word> cfl_factorize(const Word& w) {
  if (w.empty()) throw InvalidParameter("cfl_factorize requires a nonempty word");
  std::vector<Word> out;
  const std::size_t n = w.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i + 1;
    std::size_t k = i;
    while (j < n && w[k] <= w[j]) {
      k = w[k] < w[j] ? i : k + 1;
      ++j;
    }
    while (i <= k) {
      out.push_back(w.prefix(i + j - k).suffix_from(i));
      i += j - k;
    }
  }
  return out;
}

std::pair<Word, Word> standard_factorization(const Word& w) {
  if (w.size() < 2) {
    throw InvalidParameter("standard factorization needs a word of length >= 2");
  }
  std::size_t best = 1;
  for (std::size_t i = 2; i < w.size(); ++i) {
    if (w.suffix_from(i) < w.suffix_from(best)) best = i;
  }
  return {w.prefix(best), w.suffix_from(best)};
}

FreePoly standard_bracketing(const Word& w, int d) {
  if (!is_lyndon(w)) {
    throw InvalidParameter("standard_bracketing requires a Lyndon word, got '" +
                           w.to_string(kMaxAlphabet) + "'");
  }
  if (w.size() == 1) return FreePoly::word(d, w);
  auto [p, q] = standard_factorization(w);
  FreePoly pp = standard_bracketing(p, d);
  FreePoly pq = standard_bracketing(q, d);
  return concat(pp, pq) - concat(pq, pp);
}

}  // namespace roughver
