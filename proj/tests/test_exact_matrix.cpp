#include <gtest/gtest.h>

#include <random>

#include "roughver/exact_matrix.hpp"
#include "test_util.hpp"

using namespace roughver;

namespace {

RationalMatrix from_rows(std::initializer_list<std::initializer_list<Rational>> rows) {
  RationalMatrix m(rows.size(), rows.begin()->size());
  std::size_t r = 0;
  for (const auto& row : rows) {
    std::size_t c = 0;
    for (const auto& x : row) m(r, c++) = x;
    ++r;
  }
  return m;
}

// Laplace expansion along the first row.
Rational laplace(const RationalMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 1) return a(0, 0);
  Rational det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    RationalMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c)
        if (c != j) minor(r - 1, cc++) = a(r, c);
    det += (j % 2 == 0 ? 1 : -1) * a(0, j) * laplace(minor);
  }
  return det;
}

}  // namespace

TEST(ExactMatrix, SmallCases) {
  RationalMatrix a = from_rows({{Rational(1, 2), 2}, {3, 4}});
  EXPECT_EQ(determinant(a), -4);
  auto inv = inverse(a);
  ASSERT_TRUE(inv);
  EXPECT_EQ(a * *inv, RationalMatrix::identity(2));
  RationalMatrix sing = from_rows({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  EXPECT_EQ(determinant(sing), 0);
  EXPECT_EQ(rank(sing), 2u);
  EXPECT_FALSE(inverse(sing));
  EXPECT_EQ(rank(RationalMatrix(2, 3)), 0u);
  // a zero leading pivot forces a row swap
  RationalMatrix swap = from_rows({{0, 1}, {1, 0}});
  EXPECT_EQ(determinant(swap), -1);
}

TEST(ExactMatrix, RandomAgainstLaplace) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    RationalMatrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) a(r, c) = testutil::random_rational(rng);
    const Rational det = laplace(a);
    EXPECT_EQ(determinant(a), det);
    EXPECT_EQ(rank(a) == n, det != 0);
    if (det != 0) {
      auto inv = inverse(a);
      ASSERT_TRUE(inv);
      EXPECT_EQ(a * *inv, RationalMatrix::identity(n));
      EXPECT_EQ(*inv * a, RationalMatrix::identity(n));
    }
  }
}
