#include "roughver/signature.hpp"

#include <string>

#include "roughver/errors.hpp"

namespace roughver {

void PwlPath::validate() const {
  check_alphabet(d);
  if (segments.empty()) throw InvalidParameter("a path needs at least one segment");
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (segments[i].size() != static_cast<std::size_t>(d)) {
      throw InvalidParameter("segment " + std::to_string(i) + " has " +
                             std::to_string(segments[i].size()) + " coordinates, expected " +
                             std::to_string(d));
    }
  }
}

LevelTensor::LevelTensor(int d, int k) : d_(d), k_(k) {
  check_alphabet(d);
  if (k < 0) throw InvalidParameter("level must be >= 0");
}

LevelTensor LevelTensor::from_level(const FreePoly& p, int k) {
  LevelTensor t(p.alphabet(), k);
  for (const auto& [w, c] : p.terms()) t.set(w, c);
  return t;
}

Rational LevelTensor::at(const Word& w) const {
  auto it = entries_.find(w);
  return it == entries_.end() ? Rational(0) : it->second;
}

void LevelTensor::set(const Word& w, const Rational& c) {
  if (w.size() != static_cast<std::size_t>(k_) || w.max_letter() > d_) {
    throw InvalidParameter("word '" + w.to_string(kMaxAlphabet) + "' is not an index of level " +
                           std::to_string(k_));
  }
  if (c == 0) {
    entries_.erase(w);
  } else {
    entries_[w] = c;
  }
}

FreePoly LevelTensor::as_poly() const {
  FreePoly p(d_);
  for (const auto& [w, c] : entries_) p.add_term(w, c);
  return p;
}

LevelTensor& LevelTensor::operator*=(const Rational& c) {
  if (c == 0) {
    entries_.clear();
    return *this;
  }
  for (auto& [w, x] : entries_) x *= c;
  return *this;
}

LevelTensor rough_signature_level(const LieCoefficients& lie, int k) {
  if (k < 1) throw InvalidParameter("signature level must be >= 1");
  TensorSeries s = exp_trunc(lie_element(lie, k));
  return LevelTensor::from_level(s.level(static_cast<std::size_t>(k)), k);
}

TensorSeries pwl_signature(const PwlPath& path, int m) {
  path.validate();
  if (m < 1) throw InvalidParameter("truncation must be >= 1");
  TensorSeries sig = TensorSeries::one(path.d, m);
  for (const auto& v : path.segments) {
    TensorSeries inc(path.d, m);
    for (int i = 0; i < path.d; ++i) {
      inc += TensorSeries::from_poly(FreePoly::word(path.d, Word::letter(i + 1), v[i]), m);
    }
    sig = truncated_mul(sig, exp_trunc(inc));
  }
  return sig;
}

Rational signed_area(const TensorSeries& s, int i, int j) {
  if (s.truncation() < 2) throw InvalidParameter("signed_area needs truncation >= 2");
  if (i < 1 || j <= i || j > s.alphabet()) {
    throw InvalidParameter("signed_area needs 1 <= i < j <= d");
  }
  return (s.coeff(Word{i, j}) - s.coeff(Word{j, i})) / 2;
}

}  // namespace roughver
