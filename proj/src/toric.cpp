#include "roughver/toric.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>
#include <string>

#include "roughver/errors.hpp"
#include "roughver/exact_matrix.hpp"

namespace roughver {

namespace {

int normalize_m(int k, int m) {
  if (k < 1 || m < 1) throw InvalidParameter("require k >= 1 and m >= 1");
  return std::min(m, k);
}

Integer binomial(const Integer& n, unsigned long k) {
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), k);
  return out;
}

}  // namespace

WeightSequence weight_sequence(int d, int m) {
  WeightSequence ws{d, m, {}};
  for (int i = 1; i <= m; ++i) {
    ws.s.insert(ws.s.end(), static_cast<std::size_t>(lyndon_count(i, d)), i);
  }
  return ws;
}

MonomialSet weighted_monomials(int d, int k, int m) {
  m = normalize_m(k, m);
  const Integer expected = span_count_partitions(d, k, m);
  if (expected > kMaxMonomials) {
    throw ResourceError("R_{" + std::to_string(d) + "," + std::to_string(k) + "," + std::to_string(m) +
                        "} has " + expected.get_str() + " monomials, above the enumeration limit " +
                        std::to_string(kMaxMonomials));
  }
  MonomialSet out{d, k, m, lyndon_words(d, m), {}};
  const auto& words = out.variables.words;
  const std::size_t n = words.size();
  out.exponents.reserve(expected.get_ui());
  ExponentVector current(n, 0);
  // Only nonzero exponents recurse, so the depth is at most k. Choosing the
  // first nonzero variable in increasing order and its exponent in decreasing
  // order lists the vectors in decreasing lexicographic order.
  std::function<void(std::size_t, int)> assign = [&](std::size_t from, int remaining) {
    if (remaining == 0) {
      out.exponents.push_back(current);
      return;
    }
    for (std::size_t var = from; var < n; ++var) {
      const int weight = static_cast<int>(words[var].size());
      if (weight > remaining) break;  // weights are non-decreasing
      for (int e = remaining / weight; e >= 1; --e) {
        current[var] = e;
        assign(var + 1, remaining - e * weight);
      }
      current[var] = 0;
    }
  };
  assign(0, k);
  return out;
}

std::uint64_t span_count_enumerated(int d, int k, int m) { return weighted_monomials(d, k, m).size(); }

Integer span_count_partitions(int d, int k, int m) {
  m = normalize_m(k, m);
  std::vector<std::uint64_t> mu(static_cast<std::size_t>(m) + 1);
  for (int i = 1; i <= m; ++i) mu[i] = lyndon_count(i, d);
  // Partitions of k with parts <= m, as multiplicities c_1..c_m.
  std::vector<int> mult(static_cast<std::size_t>(m) + 1, 0);
  Integer total = 0;
  std::function<void(int, int)> rec = [&](int part, int remaining) {
    if (remaining == 0) {
      Integer prod = 1;
      for (int i = 1; i <= m; ++i) {
        if (mu[i] == 0) {
          if (mult[i] != 0) return;
          continue;
        }
        prod *= binomial(Integer(static_cast<unsigned long>(mu[i] + mult[i] - 1)), mu[i] - 1);
      }
      total += prod;
      return;
    }
    if (part == 0) return;
    for (int c = remaining / part; c >= 0; --c) {
      mult[part] = c;
      rec(part - 1, remaining - c * part);
    }
    mult[part] = 0;
  };
  rec(m, k);
  return total;
}

Integer span_count_series(int d, int k, int m) {
  m = normalize_m(k, m);
  std::vector<Integer> coeff(static_cast<std::size_t>(k) + 1, 0);
  coeff[0] = 1;
  for (int i = 1; i <= m; ++i) {
    const std::uint64_t mu = lyndon_count(i, d);
    // Multiplying by 1/(1 - t^i) is a stride-i prefix sum.
    for (std::uint64_t rep = 0; rep < mu; ++rep) {
      for (int j = i; j <= k; ++j) coeff[j] += coeff[j - i];
    }
  }
  return coeff[k];
}

std::uint64_t span_dimension(int d, int k, int m) {
  const std::uint64_t a = span_count_enumerated(d, k, m);
  const Integer b = span_count_partitions(d, k, m);
  const Integer c = span_count_series(d, k, m);
  if (b != Integer(static_cast<unsigned long>(a)) || c != b) {
    throw InternalDisagreement("span_dimension(" + std::to_string(d) + "," + std::to_string(k) +
                               "," + std::to_string(m) + "): enumeration " + std::to_string(a) +
                               ", partition sum " + b.get_str() + ", series " + c.get_str());
  }
  return a;
}

int variety_dimension(int d, int k, int m) {
  MonomialSet a = weighted_monomials(d, k, m);
  const std::size_t vars = a.variables.size();
  RationalMatrix diffs(a.size() > 0 ? a.size() - 1 : 0, vars);
  for (std::size_t i = 1; i < a.size(); ++i) {
    for (std::size_t j = 0; j < vars; ++j) diffs(i - 1, j) = a.exponents[i][j] - a.exponents[0][j];
  }
  const auto r = static_cast<std::uint64_t>(rank(diffs));
  const std::uint64_t expected = lie_dimension(d, a.m) - 1;
  if (r != expected) {
    throw InternalDisagreement("variety_dimension(" + std::to_string(d) + "," +
                               std::to_string(k) + "," + std::to_string(m) + "): lattice rank " +
                               std::to_string(r) + " but dim Lie - 1 = " +
                               std::to_string(expected));
  }
  return static_cast<int>(r);
}

// ---------------------------------------------------------------------------
// Sumset enumeration

namespace {

struct Packing {
  unsigned bits = 1;
  unsigned fields_per_word = 64;
  std::size_t words_per_key = 1;
};

Packing plan_packing(std::size_t dims, std::uint64_t max_value) {
  Packing p;
  // Strictly below the all-ones field so that ~0 in word 0 is never a key.
  p.bits = static_cast<unsigned>(std::bit_width(max_value + 1));
  if (p.bits > 63) throw ResourceError("sumset coordinates too large to pack");
  p.fields_per_word = 64 / p.bits;
  p.words_per_key = std::max<std::size_t>(1, (dims + p.fields_per_word - 1) / p.fields_per_word);
  return p;
}

std::vector<std::uint64_t> pack(const ExponentVector& v, const Packing& p) {
  std::vector<std::uint64_t> out(p.words_per_key, 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    out[i / p.fields_per_word] |= static_cast<std::uint64_t>(v[i])
                                  << (p.bits * (i % p.fields_per_word));
  }
  return out;
}

constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Open-addressing set of fixed-width keys with linear probing.
class PackedSet {
 public:
  PackedSet(std::size_t width, std::size_t capacity_hint, std::size_t budget, std::size_t reserved,
            long completed)
      : width_(width), budget_(budget), reserved_(reserved), completed_(completed) {
    std::size_t cap = 16;
    while (cap < 2 * capacity_hint) cap <<= 1;
    allocate(cap);
  }

  void insert(const std::uint64_t* key) {
    if (2 * (size_ + 1) > capacity_) grow();
    insert_unchecked(key);
  }

  std::vector<std::uint64_t> extract() const {
    std::vector<std::uint64_t> out;
    out.reserve(size_ * width_);
    for (std::size_t s = 0; s < capacity_; ++s) {
      const std::uint64_t* slot = &table_[s * width_];
      if (slot[0] != kEmpty) out.insert(out.end(), slot, slot + width_);
    }
    return out;
  }

  std::size_t size() const noexcept { return size_; }

 private:
  void allocate(std::size_t cap) {
    const std::size_t bytes = cap * width_ * sizeof(std::uint64_t);
    if (bytes + reserved_ > budget_) {
      throw ResourceError("sumset enumeration exceeds the memory budget of " +
                              std::to_string(budget_ >> 20) + " MiB",
                          completed_);
    }
    table_.assign(cap * width_, 0);
    for (std::size_t s = 0; s < cap; ++s) table_[s * width_] = kEmpty;
    capacity_ = cap;
    size_ = 0;
  }

  std::size_t hash(const std::uint64_t* key) const {
    std::uint64_t h = 0;
    for (std::size_t i = 0; i < width_; ++i) h = mix(h ^ key[i]);
    return static_cast<std::size_t>(h);
  }

  void insert_unchecked(const std::uint64_t* key) {
    std::size_t s = hash(key) & (capacity_ - 1);
    while (true) {
      std::uint64_t* slot = &table_[s * width_];
      if (slot[0] == kEmpty) {
        std::copy(key, key + width_, slot);
        ++size_;
        return;
      }
      if (std::equal(key, key + width_, slot)) return;
      s = (s + 1) & (capacity_ - 1);
    }
  }

  void grow() {
    std::vector<std::uint64_t> old = extract();
    allocate(capacity_ * 2);
    for (std::size_t i = 0; i < old.size(); i += width_) insert_unchecked(&old[i]);
  }

  std::size_t width_;
  std::size_t budget_;
  std::size_t reserved_;
  long completed_;
  std::vector<std::uint64_t> table_;
  std::size_t capacity_ = 0;
  std::size_t size_ = 0;
};

}  // namespace

SumsetEnumerator::SumsetEnumerator(const std::vector<ExponentVector>& generators, int n_max,
                                   SumsetOptions options)
    : n_max_(n_max), options_(options) {
  if (generators.empty()) throw InvalidParameter("sumset of an empty set");
  if (n_max < 0) throw InvalidParameter("n_max must be >= 0");
  const std::size_t dims = generators.front().size();
  std::uint64_t max_coord = 0;
  for (const auto& g : generators) {
    if (g.size() != dims) throw InvalidParameter("generators of differing dimension");
    for (int x : g) {
      if (x < 0) throw InvalidParameter("generators must be nonnegative");
      max_coord = std::max<std::uint64_t>(max_coord, static_cast<std::uint64_t>(x));
    }
  }
  const Packing p = plan_packing(dims, max_coord * static_cast<std::uint64_t>(std::max(n_max, 1)));
  words_per_key_ = p.words_per_key;
  std::set<std::vector<std::uint64_t>> unique;
  for (const auto& g : generators) unique.insert(pack(g, p));
  for (const auto& g : unique) generators_.insert(generators_.end(), g.begin(), g.end());
  points_.assign(words_per_key_, 0);  // the origin: 0A = {0}
}

std::uint64_t SumsetEnumerator::advance() {
  if (n_ >= n_max_) {
    throw ResourceError("sumset enumeration reached its planned maximum degree " +
                            std::to_string(n_max_),
                        n_);
  }
  const std::size_t w = words_per_key_;
  const std::size_t count = points_.size() / w;
  const std::size_t gens = generators_.size() / w;
  const std::size_t reserved = points_.size() * sizeof(std::uint64_t);
  PackedSet next(w, count * 2, options_.memory_budget_bytes, reserved, n_);
  std::vector<std::uint64_t> key(w);
  for (std::size_t i = 0; i < count; ++i) {
    const std::uint64_t* p = &points_[i * w];
    for (std::size_t g = 0; g < gens; ++g) {
      const std::uint64_t* a = &generators_[g * w];
      // Fields never overflow, so packed addition is word-wise addition.
      for (std::size_t j = 0; j < w; ++j) key[j] = p[j] + a[j];
      next.insert(key.data());
    }
  }
  points_ = next.extract();
  ++n_;
  return points_.size() / w;
}

std::vector<std::uint64_t> hilbert_values(const std::vector<ExponentVector>& a, int n_max,
                                          SumsetOptions options) {
  SumsetEnumerator e(a, n_max, options);
  std::vector<std::uint64_t> out{1};
  for (int n = 1; n <= n_max; ++n) out.push_back(e.advance());
  return out;
}

std::uint64_t hilbert_function(const std::vector<ExponentVector>& a, int n, SumsetOptions options) {
  if (n < 0) throw InvalidParameter("hilbert_function needs n >= 0");
  return hilbert_values(a, n, options).back();
}

DegreeTrace toric_degree_trace(int d, int k, int m, DegreeOptions options) {
  DegreeTrace trace;
  const int r = variety_dimension(d, k, m);
  trace.dimension = r;
  if (r > options.dimension_cap) {
    throw ResourceError("variety dimension " + std::to_string(r) + " exceeds the degree cap " +
                        std::to_string(options.dimension_cap));
  }
  MonomialSet a = weighted_monomials(d, k, m);
  SumsetEnumerator e(a.exponents, options.n_max, SumsetOptions{options.memory_budget_bytes});
  trace.hilbert.push_back(1);
  auto h = [&](long n) -> Integer {
    return n < 0 ? Integer(0) : Integer(static_cast<unsigned long>(trace.hilbert[n]));
  };
  int run = 0;
  for (int n = 0;; ++n) {
    if (n > 0) trace.hilbert.push_back(e.advance());
    Integer diff = 0;
    Integer c = 1;  // binom(r, i) with alternating sign
    for (int i = 0; i <= r; ++i) {
      diff += ((i % 2 == 0) ? c : Integer(-c)) * h(n - i);
      c = c * (r - i) / (i + 1);
    }
    trace.differences.push_back(diff);
    if (n >= r && n > 0 && diff > 0 && diff == trace.differences[n - 1]) {
      ++run;
    } else {
      run = (n >= r && diff > 0) ? 1 : 0;
    }
    if (run >= 3) {
      trace.degree = diff.get_ui();
      return trace;
    }
    if (n >= options.n_max) break;
  }
  throw ResourceError("finite differences did not stabilize by n = " +
                          std::to_string(options.n_max),
                      options.n_max);
}

std::uint64_t toric_degree(int d, int k, int m, DegreeOptions options) {
  return toric_degree_trace(d, k, m, options).degree;
}

std::uint64_t quadric_space_dimension(int d, int k, int m) {
  MonomialSet a = weighted_monomials(d, k, m);
  const std::uint64_t n = a.size();
  const std::uint64_t pair_sums = hilbert_function(a.exponents, 2);
  return n * (n + 1) / 2 - pair_sums;
}

ConeSplit cone_vertex_split(int d, int k) {
  if (k < 2) throw InvalidParameter("cone_vertex_split requires k >= 2");
  MonomialSet full = weighted_monomials(d, k, k);
  MonomialSet base = weighted_monomials(d, k, k - 1);
  const std::size_t base_vars = base.variables.size();
  const std::size_t vars = full.variables.size();

  ConeSplit out;
  for (std::size_t v = base_vars; v < vars; ++v) {
    const Word& w = full.variables.words[v];
    if (w.size() != static_cast<std::size_t>(k)) {
      throw InternalDisagreement("variable ordering: expected only length-k words after W_{d,k-1}");
    }
    out.vertex.push_back(w);
    std::size_t occurrences = 0;
    for (const auto& e : full.exponents) {
      if (e[v] == 0) continue;
      ++occurrences;
      for (std::size_t j = 0; j < vars; ++j) {
        if (e[j] != (j == v ? 1 : 0)) {
          throw InternalDisagreement("vertex variable x_" + w.to_string(d) +
                                     " appears in a non-singleton monomial");
        }
      }
    }
    if (occurrences != 1) {
      throw InternalDisagreement("vertex variable x_" + w.to_string(d) + " appears " +
                                 std::to_string(occurrences) + " times");
    }
  }
  for (const auto& e : full.exponents) {
    bool on_vertex = std::any_of(e.begin() + static_cast<long>(base_vars), e.end(),
                                 [](int x) { return x != 0; });
    if (!on_vertex) out.base.emplace_back(e.begin(), e.begin() + static_cast<long>(base_vars));
  }
  if (out.base != base.exponents) {
    throw InternalDisagreement("cone base differs from the monomials of R_{d,k,k-1}");
  }
  out.vertex_projective_dimension = static_cast<int>(out.vertex.size()) - 1;
  return out;
}

BasePointResult is_base_point_free(int d, int k, int m) {
  m = normalize_m(k, m);
  bool criterion = true;
  for (int i = 1; i <= m; ++i) {
    if (lyndon_count(i, d) > 0 && k % i != 0) criterion = false;
  }

  MonomialSet a = weighted_monomials(d, k, m);
  const std::size_t vars = a.variables.size();
  std::vector<bool> has_pure_power(vars, false);
  for (const auto& e : a.exponents) {
    std::size_t nonzero = 0;
    std::size_t where = 0;
    for (std::size_t j = 0; j < vars; ++j) {
      if (e[j] != 0) {
        ++nonzero;
        where = j;
      }
    }
    if (nonzero == 1) has_pure_power[where] = true;
  }
  BasePointResult out;
  for (std::size_t j = 0; j < vars; ++j) {
    if (has_pure_power[j]) continue;
    out.base_point_free = false;
    std::vector<int> point(vars, 0);
    point[j] = 1;
    out.witness = std::move(point);
    out.witness_variable = a.variables.words[j];
    break;
  }
  if (out.base_point_free != criterion) {
    throw InternalDisagreement("base point criterion and monomial check disagree for (" +
                               std::to_string(d) + "," + std::to_string(k) + "," +
                               std::to_string(m) + ")");
  }
  return out;
}

std::optional<std::pair<WeightTriple, WeightTriple>> cubic_obstruction_search(
    int k, std::span<const int> weights) {
  std::vector<int> w(weights.begin(), weights.end());
  std::sort(w.begin(), w.end());
  if (std::adjacent_find(w.begin(), w.end()) != w.end()) {
    throw InvalidParameter("weights must be distinct");
  }
  if (!w.empty() && w.front() < 1) throw InvalidParameter("weights must be positive");

  std::vector<WeightTriple> triples;
  const std::size_t n = w.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      for (std::size_t c = b + 1; c < n; ++c) {
        if (w[a] + w[b] + w[c] == k) triples.push_back({w[a], w[b], w[c]});
      }
    }
  }
  auto disjoint = [](const WeightTriple& x, const WeightTriple& y) {
    for (int u : x) {
      if (std::find(y.begin(), y.end(), u) != y.end()) return false;
    }
    return true;
  };
  for (std::size_t i = 0; i < triples.size(); ++i) {
    for (std::size_t j = i + 1; j < triples.size(); ++j) {
      if (!disjoint(triples[i], triples[j])) continue;
      std::set<int> uni(triples[i].begin(), triples[i].end());
      uni.insert(triples[j].begin(), triples[j].end());
      std::size_t inside = 0;
      for (const auto& t : triples) {
        if (uni.count(t[0]) && uni.count(t[1]) && uni.count(t[2])) ++inside;
      }
      if (inside == 2) return std::pair{triples[i], triples[j]};
    }
  }
  return std::nullopt;
}

}  // namespace roughver
