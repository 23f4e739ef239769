#include "roughver/tensor_series.hpp"

#include <string>

#include "roughver/errors.hpp"
#include "roughver/lyndon.hpp"

namespace roughver {

TensorSeries::TensorSeries(int d, int m) : m_(m), scalar_(0), body_(d) {
  if (m < 0) throw InvalidParameter("truncation level must be >= 0");
}

TensorSeries TensorSeries::one(int d, int m) {
  TensorSeries s(d, m);
  s.scalar_ = 1;
  return s;
}

TensorSeries TensorSeries::from_poly(const FreePoly& p, int m) {
  TensorSeries s(p.alphabet(), m);
  for (const auto& [w, c] : p.terms()) {
    if (w.empty()) {
      s.scalar_ = c;
    } else if (w.size() <= static_cast<std::size_t>(m)) {
      s.body_.add_term(w, c);
    }
  }
  return s;
}

Rational TensorSeries::coeff(const Word& w) const { return w.empty() ? scalar_ : body_.coeff(w); }

FreePoly TensorSeries::level(std::size_t k) const {
  if (k == 0) return FreePoly::unit(alphabet()) * scalar_;
  return body_.level(k);
}

FreePoly TensorSeries::as_poly() const {
  FreePoly p = body_;
  p.add_term(Word(), scalar_);
  return p;
}

void TensorSeries::require_compatible(const TensorSeries& other) const {
  if (alphabet() != other.alphabet() || m_ != other.m_) {
    throw InvalidParameter("tensor series mismatch: (d=" + std::to_string(alphabet()) +
                           ", m=" + std::to_string(m_) + ") vs (d=" +
                           std::to_string(other.alphabet()) + ", m=" + std::to_string(other.m_) +
                           ")");
  }
}

TensorSeries& TensorSeries::operator+=(const TensorSeries& other) {
  require_compatible(other);
  scalar_ += other.scalar_;
  body_ += other.body_;
  return *this;
}

TensorSeries& TensorSeries::operator-=(const TensorSeries& other) {
  require_compatible(other);
  scalar_ -= other.scalar_;
  body_ -= other.body_;
  return *this;
}

TensorSeries& TensorSeries::operator*=(const Rational& c) {
  scalar_ *= c;
  body_ *= c;
  return *this;
}

TensorSeries truncated_mul(const TensorSeries& s, const TensorSeries& t) {
  s.require_compatible(t);
  const std::size_t m = static_cast<std::size_t>(s.truncation());
  TensorSeries out(s.alphabet(), s.truncation());
  FreePoly body(s.alphabet());
  body += s.body() * t.scalar();
  body += t.body() * s.scalar();
  for (const auto& [v, a] : s.body().terms()) {
    if (v.size() >= m) break;  // ShortLex: every later word is at least as long
    for (const auto& [w, b] : t.body().terms()) {
      if (v.size() + w.size() > m) break;
      body.add_term(v + w, a * b);
    }
  }
  FreePoly full = body;
  full.add_term(Word(), s.scalar() * t.scalar());
  return TensorSeries::from_poly(full, s.truncation());
}

TensorSeries exp_trunc(const TensorSeries& t) {
  if (t.scalar() != 0) throw InvalidParameter("exp_trunc requires a series with scalar 0");
  const TensorSeries one = TensorSeries::one(t.alphabet(), t.truncation());
  // Horner: 1 + T(1 + T/2(1 + T/3(...)))
  TensorSeries acc = one;
  for (int n = t.truncation(); n >= 1; --n) {
    acc = one + truncated_mul(t, acc) * Rational(1, n);
  }
  return acc;
}

TensorSeries log_trunc(const TensorSeries& s) {
  if (s.scalar() != 1) throw InvalidParameter("log_trunc requires a series with scalar 1");
  const int m = s.truncation();
  const TensorSeries one = TensorSeries::one(s.alphabet(), m);
  const TensorSeries x = s - one;
  if (m == 0) return x;
  auto c = [](int n) { return Rational(n % 2 == 1 ? 1 : -1, n); };
  // X (c_1 + X (c_2 + ... + X c_m))
  TensorSeries acc = one * c(m);
  for (int n = m - 1; n >= 1; --n) acc = one * c(n) + truncated_mul(x, acc);
  return truncated_mul(x, acc);
}

TensorSeries group_inverse(const TensorSeries& s) {
  if (s.scalar() != 1) throw InvalidParameter("group_inverse requires a series with scalar 1");
  const TensorSeries one = TensorSeries::one(s.alphabet(), s.truncation());
  const TensorSeries x = s - one;
  // sum_{n<=m} (-X)^n
  TensorSeries acc = one;
  for (int n = 1; n <= s.truncation(); ++n) acc = one - truncated_mul(x, acc);
  return acc;
}

GroupLikeCheck is_group_like(const TensorSeries& s) {
  GroupLikeCheck out;
  if (s.scalar() != 1) {
    out.group_like = false;
    out.witness = std::pair{Word(), Word()};
    out.product = s.scalar() * s.scalar();
    out.shuffle_value = s.scalar();
    return out;
  }
  const int d = s.alphabet();
  const std::size_t m = static_cast<std::size_t>(s.truncation());
  std::vector<std::vector<Word>> by_length(m + 1);
  for (std::size_t l = 1; l <= m; ++l) by_length[l] = words_of_length(d, l);

  for (std::size_t lv = 1; 2 * lv <= m; ++lv) {
    for (const Word& v : by_length[lv]) {
      const Rational sv = s.coeff(v);
      for (std::size_t lw = lv; lv + lw <= m; ++lw) {
        for (const Word& w : by_length[lw]) {
          Rational rhs = 0;
          for (const auto& [u, n] : shuffle_words(v, w)) {
            rhs += s.coeff(u) * Rational(Integer(static_cast<unsigned long>(n)));
          }
          Rational lhs = sv * s.coeff(w);
          if (lhs != rhs) {
            out.group_like = false;
            out.witness = std::pair{v, w};
            out.product = lhs;
            out.shuffle_value = rhs;
            return out;
          }
        }
      }
    }
  }
  return out;
}

LieCoefficients::LieCoefficients(int d, int m) : d_(d), m_(m) {
  check_alphabet(d);
  if (m < 1) throw InvalidParameter("Lie truncation must be >= 1");
}

void LieCoefficients::set(const Word& w, const Rational& c) {
  if (w.size() > static_cast<std::size_t>(m_) || w.max_letter() > d_ || !is_lyndon(w)) {
    throw InvalidParameter("'" + w.to_string(kMaxAlphabet) + "' is not in W_{" +
                           std::to_string(d_) + "," + std::to_string(m_) + "}");
  }
  if (c == 0) {
    coeffs_.erase(w);
  } else {
    coeffs_[w] = c;
  }
}

Rational LieCoefficients::get(const Word& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

LieCoefficients LieCoefficients::weighted_scale(const Rational& t) const {
  LieCoefficients out(d_, m_);
  for (const auto& [w, c] : coeffs_) {
    Rational f = 1;
    for (std::size_t i = 0; i < w.size(); ++i) f *= t;
    out.set(w, c * f);
  }
  return out;
}

LieCoefficients LieCoefficients::operator-() const {
  LieCoefficients out(d_, m_);
  for (const auto& [w, c] : coeffs_) out.set(w, -c);
  return out;
}

TensorSeries lie_element(const LieCoefficients& c, std::optional<int> truncation) {
  const int m = truncation.value_or(c.truncation());
  FreePoly sum(c.alphabet());
  for (const auto& [w, a] : c.coeffs()) {
    if (w.size() > static_cast<std::size_t>(m)) continue;
    sum += standard_bracketing(w, c.alphabet()) * a;
  }
  return TensorSeries::from_poly(sum, m);
}

}  // namespace roughver
