#include "roughver/exact_matrix.hpp"

#include <utility>

#include "roughver/errors.hpp"

namespace roughver {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw InvalidParameter("matrix shape mismatch in product");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += x * b(k, j);
    }
  }
  return out;
}

namespace {

using IntRows = std::vector<std::vector<Integer>>;

// Scales each row by the lcm of its denominators. Returns the product of the
// scale factors.
Integer clear_denominators(const RationalMatrix& a, IntRows& out) {
  out.assign(a.rows(), std::vector<Integer>(a.cols()));
  Integer scale = 1;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    Integer l = 1;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(r, c).get_den_mpz_t());
    }
    for (std::size_t c = 0; c < a.cols(); ++c) {
      out[r][c] = a(r, c).get_num() * (l / a(r, c).get_den());
    }
    scale *= l;
  }
  return scale;
}

// In-place Bareiss forward elimination. Returns the rank and the sign of the
// row permutation. After the call, when the matrix is square and of full rank,
// m[n-1][n-1] is the determinant up to that sign.
std::pair<std::size_t, int> bareiss(IntRows& m, std::size_t pivot_cols) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  Integer prev = 1;
  std::size_t r = 0;
  int sign = 1;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(m[p], m[r]);
      sign = -sign;
    }
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return {r, sign};
}

}  // namespace

Rational determinant(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidParameter("determinant of a non-square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  IntRows m;
  Integer scale = clear_denominators(a, m);
  auto [r, sign] = bareiss(m, n);
  if (r < n) return 0;
  Rational det(m[n - 1][n - 1] * sign, scale);
  det.canonicalize();
  return det;
}

std::size_t rank(const RationalMatrix& a) {
  IntRows m;
  clear_denominators(a, m);
  return bareiss(m, a.cols()).first;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw InvalidParameter("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  // Build [A | I] with each row scaled to integers; the identity block picks
  // up the same scale, which the final division undoes.
  RationalMatrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  IntRows m;
  clear_denominators(aug, m);
  auto [r, sign] = bareiss(m, n);
  (void)sign;
  if (r < n) return std::nullopt;
  // Back substitution on the upper-triangular left block over Q.
  RationalMatrix out(n, n);
  for (std::size_t col = 0; col < n; ++col) {
    for (std::size_t ii = n; ii-- > 0;) {
      Rational acc(m[ii][n + col]);
      for (std::size_t j = ii + 1; j < n; ++j) acc -= Rational(m[ii][j]) * out(j, col);
      out(ii, col) = acc / Rational(m[ii][ii]);
    }
  }
  return out;
}

}  // namespace roughver
