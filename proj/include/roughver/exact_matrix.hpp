#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "roughver/rational.hpp"

namespace roughver {

/// Dense row-major matrix over Q.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Determinant by Bareiss elimination on the integer matrix obtained by
/// clearing each row's denominators. Requires a square matrix.
Rational determinant(const RationalMatrix& a);

/// Rank by fraction-free elimination.
std::size_t rank(const RationalMatrix& a);

/// Inverse via fraction-free elimination of [A | I] followed by back
/// substitution; nullopt if singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& a);

}  // namespace roughver
