#include "roughver/coord_change.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <string>
#include <thread>
#include <unordered_map>

#include "roughver/errors.hpp"
#include "roughver/signature.hpp"

namespace roughver {

bool tuple_before(const Tuple& a, const Tuple& b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), ShortLex{});
}

std::string tuple_label(const Tuple& t, int d) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i > 0) out += "·";
    out += t[i].to_string(d);
  }
  return out;
}

TupleIndex TupleIndex::build(int d, int k, int m) {
  if (m < 1 || k < 1) throw InvalidParameter("tuple index requires k >= 1 and m >= 1");
  TupleIndex idx{d, k, m, lyndon_words(d, std::min(m, k)), {}};
  const auto& words = idx.lyndon.words;
  Tuple current;
  std::function<void(std::size_t, int)> extend = [&](std::size_t from, int remaining) {
    if (remaining == 0) {
      idx.tuples.push_back(current);
      return;
    }
    for (std::size_t i = from; i < words.size(); ++i) {
      int len = static_cast<int>(words[i].size());
      if (len > remaining) break;
      current.push_back(words[i]);
      extend(i, remaining - len);
      current.pop_back();
    }
  };
  extend(0, k);
  std::sort(idx.tuples.begin(), idx.tuples.end(), tuple_before);
  return idx;
}

std::optional<std::size_t> TupleIndex::position(const Tuple& t) const {
  Tuple sorted = t;
  std::sort(sorted.begin(), sorted.end(), ShortLex{});
  auto it = std::lower_bound(tuples.begin(), tuples.end(), sorted, tuple_before);
  if (it == tuples.end() || *it != sorted) return std::nullopt;
  return static_cast<std::size_t>(it - tuples.begin());
}

FreePoly s_poly(const Word& v, int d) {
  if (v.empty()) return FreePoly::unit(d);
  if (is_lyndon(v)) {
    FreePoly tail = s_poly(v.suffix_from(1), d);
    return concat(FreePoly::word(d, Word::letter(v.front())), tail);
  }
  std::vector<Word> factors = cfl_factorize(v);
  FreePoly out = FreePoly::unit(d);
  Integer denom = 1;
  for (std::size_t i = 0; i < factors.size();) {
    std::size_t j = i;
    while (j < factors.size() && factors[j] == factors[i]) ++j;
    const unsigned run = static_cast<unsigned>(j - i);
    out = shuffle(out, shuffle_power(s_poly(factors[i], d), run));
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), run);
    denom *= f;
    i = j;
  }
  return out * Rational(Integer(1), denom);
}

namespace {

FreePoly psi_word_uncached(const Word& v, int d) {
  FreePoly out(d);
  if (v.empty()) return out;
  const std::size_t l = v.size();
  const std::size_t cuts = l - 1;
  // Bit i of mask set <=> a cut after position i.
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cuts); ++mask) {
    FreePoly prod = FreePoly::unit(d);
    std::size_t start = 0;
    int n = 0;
    for (std::size_t i = 0; i < l; ++i) {
      bool cut_here = i == l - 1 || ((mask >> i) & 1u);
      if (!cut_here) continue;
      prod = shuffle(prod, FreePoly::word(d, v.prefix(i + 1).suffix_from(start)));
      start = i + 1;
      ++n;
    }
    out += prod * Rational(n % 2 == 1 ? 1 : -1, n);
  }
  return out;
}

const FreePoly& psi_word(const Word& v, int d) {
  thread_local std::unordered_map<std::string, FreePoly> memo;
  std::string key = v.key();
  key.push_back(static_cast<char>(d));
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  return memo.emplace(std::move(key), psi_word_uncached(v, d)).first->second;
}

}  // namespace

FreePoly psi(const FreePoly& p) {
  FreePoly out(p.alphabet());
  for (const auto& [w, c] : p.terms()) {
    if (w.size() > kMaxPsiLength) {
      throw ResourceError("psi is limited to words of length <= " + std::to_string(kMaxPsiLength) +
                          "; got length " + std::to_string(w.size()));
    }
    out += psi_word(w, p.alphabet()) * c;
  }
  return out;
}

FreePoly tuple_functional(const Tuple& t, int d) {
  FreePoly out = FreePoly::unit(d);
  for (const Word& w : t) out = shuffle(out, psi(s_poly(w, d)));
  return out;
}

RationalMatrix CoordChangeMatrix::dense() const {
  std::vector<Word> cols = words_of_length(index.d, static_cast<std::size_t>(index.k));
  RationalMatrix out(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols.size(); ++c) out(r, c) = rows[r].coeff(cols[c]);
  }
  return out;
}

bool CoordChangeMatrix::is_square() const {
  std::size_t cols = 1;
  for (int i = 0; i < index.k; ++i) cols *= static_cast<std::size_t>(index.d);
  return rows.size() == cols;
}

Rational CoordChangeMatrix::determinant() const {
  if (!is_square()) throw InvalidParameter("determinant requires m = k (a square matrix)");
  return roughver::determinant(dense());
}

std::optional<RationalMatrix> CoordChangeMatrix::inverse() const {
  if (!is_square()) throw InvalidParameter("inverse requires m = k (a square matrix)");
  return roughver::inverse(dense());
}

CoordChangeMatrix coord_change_matrix(int d, int k, int m) {
  if (m < 1 || m > k) throw InvalidParameter("coord_change_matrix requires 1 <= m <= k");
  CoordChangeMatrix out{TupleIndex::build(d, k, m), {}};
  const std::size_t n = out.index.tuples.size();
  std::vector<std::optional<FreePoly>> slots(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      slots[i] = tuple_functional(out.index.tuples[i], d).level(static_cast<std::size_t>(k));
    }
  };
  const unsigned threads = std::clamp<unsigned>(std::thread::hardware_concurrency(), 1u, 8u);
  if (n < 64 || threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  out.rows.reserve(n);
  for (auto& s : slots) out.rows.push_back(std::move(*s));
  return out;
}

LemmaCheck verify_coordinate_lemma(const LieCoefficients& c, const Tuple& t) {
  std::size_t k = 0;
  Rational expected = 1;
  for (const Word& w : t) {
    if (w.size() > static_cast<std::size_t>(c.truncation()) || !is_lyndon(w) ||
        w.max_letter() > c.alphabet()) {
      throw InvalidParameter("tuple entry '" + w.to_string(kMaxAlphabet) + "' is not in W_{d,m}");
    }
    k += w.size();
    expected *= c.get(w);
  }
  if (k == 0) throw InvalidParameter("empty tuple");
  TensorSeries sig = exp_trunc(lie_element(c, static_cast<int>(k)));
  LemmaCheck out;
  out.pairing = pair(sig.as_poly(), tuple_functional(t, c.alphabet()));
  out.expected = expected;
  out.pass = out.pairing == out.expected;
  return out;
}

std::vector<Rational> monomialized_signature(const LieCoefficients& c, int k) {
  const int m = c.truncation();
  if (m > k) throw InvalidParameter("monomialized_signature requires m <= k");
  CoordChangeMatrix lambda = coord_change_matrix(c.alphabet(), k, m);
  FreePoly level = rough_signature_level(c, k).as_poly();
  std::vector<Rational> out;
  out.reserve(lambda.rows.size());
  for (const FreePoly& row : lambda.rows) out.push_back(pair(level, row));
  return out;
}

}  // namespace roughver
