#include "roughver/free_poly.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "roughver/errors.hpp"

namespace roughver {

FreePoly::FreePoly(int d) : d_(d) { check_alphabet(d); }

FreePoly FreePoly::word(int d, const Word& w, const Rational& c) {
  FreePoly p(d);
  p.add_term(w, c);
  return p;
}

Rational FreePoly::coeff(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Rational(0) : it->second;
}

void FreePoly::add_term(const Word& w, const Rational& c) {
  if (c == 0) return;
  if (w.max_letter() > d_) {
    throw InvalidParameter("word '" + w.to_string(kMaxAlphabet) + "' uses a letter above d = " +
                           std::to_string(d_));
  }
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::set<std::size_t> FreePoly::degrees() const {
  std::set<std::size_t> out;
  for (const auto& [w, c] : terms_) out.insert(w.size());
  return out;
}

std::optional<std::size_t> FreePoly::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  // ShortLex keeps the shortest word first and the longest last.
  std::size_t lo = terms_.begin()->first.size();
  std::size_t hi = terms_.rbegin()->first.size();
  if (lo != hi) return std::nullopt;
  return lo;
}

Rational FreePoly::coefficient_sum() const {
  Rational s = 0;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

FreePoly FreePoly::level(std::size_t k) const {
  FreePoly out(d_);
  for (const auto& [w, c] : terms_) {
    if (w.size() == k) out.terms_.emplace_hint(out.terms_.end(), w, c);
  }
  return out;
}

void FreePoly::check_same_alphabet(const FreePoly& other) const { require_same_alphabet(*this, other); }

void require_same_alphabet(const FreePoly& p, const FreePoly& q) {
  if (p.alphabet() != q.alphabet()) {
    throw InvalidParameter("alphabet mismatch: " + std::to_string(p.alphabet()) + " vs " +
                           std::to_string(q.alphabet()));
  }
}

FreePoly& FreePoly::operator+=(const FreePoly& other) {
  check_same_alphabet(other);
  for (const auto& [w, c] : other.terms_) add_term(w, c);
  return *this;
}

FreePoly& FreePoly::operator-=(const FreePoly& other) {
  check_same_alphabet(other);
  for (const auto& [w, c] : other.terms_) add_term(w, -c);
  return *this;
}

FreePoly& FreePoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, x] : terms_) x *= c;
  return *this;
}

FreePoly concat(const FreePoly& p, const FreePoly& q) {
  require_same_alphabet(p, q);
  FreePoly out(p.alphabet());
  for (const auto& [v, a] : p.terms()) {
    for (const auto& [w, b] : q.terms()) out.add_term(v + w, a * b);
  }
  return out;
}

namespace {

// Longest pair of words whose shuffle multiplicities are guaranteed to fit in
// 64 bits: binom(62, 31) < 2^64.
constexpr std::size_t kMaxShuffleLength = 62;
constexpr std::size_t kMaxCacheEntries = 1u << 18;

using ShuffleCache = std::unordered_map<std::string, WordShuffle>;

ShuffleCache& cache() {
  thread_local ShuffleCache c;
  return c;
}

const WordShuffle& shuffle_rec(const Word& v, const Word& w) {
  std::string key = v.key();
  key.push_back('\0');
  key += w.key();
  auto& memo = cache();
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  WordShuffle result;
  if (v.empty()) {
    result.emplace_back(w, 1);
  } else if (w.empty()) {
    result.emplace_back(v, 1);
  } else {
    // (v'i) sh (w'j) = (v' sh w'j) i + (v'i sh w') j
    std::unordered_map<Word, std::uint64_t, WordHash> acc;
    for (const auto& [u, n] : shuffle_rec(v.drop_back(), w)) {
      Word x = u;
      acc[x.push_back(v.back())] += n;
    }
    for (const auto& [u, n] : shuffle_rec(v, w.drop_back())) {
      Word x = u;
      acc[x.push_back(w.back())] += n;
    }
    result.assign(acc.begin(), acc.end());
    std::sort(result.begin(), result.end(),
              [](const auto& a, const auto& b) { return ShortLex{}(a.first, b.first); });
  }
  return memo.emplace(std::move(key), std::move(result)).first->second;
}

}  // namespace

WordShuffle shuffle_words(const Word& v, const Word& w) {
  if (v.size() + w.size() > kMaxShuffleLength) {
    throw InvalidParameter("shuffle of words longer than " + std::to_string(kMaxShuffleLength) +
                           " letters in total is not supported");
  }
  if (cache().size() > kMaxCacheEntries) cache().clear();
  return shuffle_rec(v, w);
}

void clear_shuffle_cache() { cache().clear(); }

FreePoly shuffle(const FreePoly& p, const FreePoly& q) {
  require_same_alphabet(p, q);
  FreePoly out(p.alphabet());
  for (const auto& [v, a] : p.terms()) {
    for (const auto& [w, b] : q.terms()) {
      Rational ab = a * b;
      for (const auto& [u, n] : shuffle_words(v, w)) {
        out.add_term(u, ab * Rational(Integer(static_cast<unsigned long>(n))));
      }
    }
  }
  return out;
}

Rational pair(const FreePoly& p, const FreePoly& q) {
  require_same_alphabet(p, q);
  const auto& small = p.size() <= q.size() ? p : q;
  const auto& large = p.size() <= q.size() ? q : p;
  Rational s = 0;
  for (const auto& [w, c] : small.terms()) {
    auto it = large.terms().find(w);
    if (it != large.terms().end()) s += c * it->second;
  }
  return s;
}

FreePoly shuffle_power(const FreePoly& p, unsigned n) {
  FreePoly out = FreePoly::unit(p.alphabet());
  for (unsigned i = 0; i < n; ++i) out = shuffle(out, p);
  return out;
}

}  // namespace roughver
