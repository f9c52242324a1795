#include "oracles.hpp"

#include <pdet/charpoly.hpp>
#include <pdet/io.hpp>
#include <pdet/random.hpp>

#include <gtest/gtest.h>

using namespace pdet;

namespace {

std::vector<Scalar> ints(std::initializer_list<long> xs) {
  return {xs.begin(), xs.end()};
}

const ExactMatrix kSymmetric3{{0, 4, 4}, {4, 0, 3}, {4, 3, 6}};
const ExactMatrix kPitfallG{{1, -1, -1}, {1, -1, -1}, {-2, 2, -1}};

}  // namespace

TEST(CharPoly, PaperExamples) {
  EXPECT_EQ(char_poly(kSymmetric3).coeffs, ints({0, 41, 6, -1}));
  const auto p = char_poly(mat_mul(transpose(ExactMatrix::identity(3)), kPitfallG));
  EXPECT_EQ(p.coeffs, ints({0, 0, -1, -1}));
}

TEST(CharPoly, EmptyMatrixIsOne) {
  const auto p = char_poly(ExactMatrix(0, 0));
  EXPECT_EQ(p.coeffs, ints({1}));
  EXPECT_EQ(pseudo_det(ExactMatrix(0, 0)), Scalar(1));
  EXPECT_EQ(spectral_count(ExactMatrix(0, 0)), 0u);
}

TEST(CharPoly, NonSquareRejected) {
  EXPECT_THROW(char_poly(ExactMatrix(2, 3)), DimensionError);
  EXPECT_THROW(pseudo_det(ExactMatrix(3, 1)), DimensionError);
  EXPECT_THROW(spectral_count(ExactMatrix(1, 2)), DimensionError);
  EXPECT_THROW(is_nilpotent(ExactMatrix(1, 2)), DimensionError);
}

TEST(CharPoly, MatchesInterpolationOracle) {
  Rng rng(42);
  for (std::size_t n = 1; n <= 6; ++n)
    for (int t = 0; t < 6; ++t) {
      const auto a = t % 2 == 0 ? random_rational_matrix(rng, n, n)
                                : random_low_rank_matrix(rng, n, n / 2);
      EXPECT_EQ(char_poly(a).coeffs, oracle::char_poly_by_interpolation(a)) << format_matrix(a);
    }
}

TEST(CharPoly, LeadingAndConstantTerms) {
  Rng rng(3);
  for (std::size_t n = 0; n <= 7; ++n) {
    const auto a = random_integer_matrix(rng, n, n);
    const auto p = char_poly(a);
    ASSERT_EQ(p.coeffs.size(), n + 1);
    EXPECT_EQ(p.coeffs[n], sign_power(n));
    EXPECT_EQ(p.coeffs[0], determinant(a));
    if (n > 0) {
      EXPECT_EQ(p.coeffs[n - 1], sign_power(n - 1) * trace(a));
    }
  }
}

TEST(CharPoly, EvaluatesToShiftedDeterminant) {
  const auto p = char_poly(kSymmetric3);
  for (long x = -3; x <= 3; ++x) {
    auto shifted = kSymmetric3;
    for (std::size_t i = 0; i < 3; ++i) shifted(i, i) -= x;
    EXPECT_EQ(p(Scalar(x)), determinant(shifted));
  }
}

TEST(PseudoDet, PaperExamples) {
  EXPECT_EQ(pseudo_det(ExactMatrix{{5, 6}, {10, 12}}), Scalar(17));
  ExactMatrix rank_one(4, 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) rank_one(i, j) = static_cast<long>(j + 1);
  EXPECT_EQ(pseudo_det(rank_one), Scalar(10));
  EXPECT_EQ(pseudo_det(kSymmetric3), Scalar(-41));
  EXPECT_EQ(pseudo_det(kPitfallG), Scalar(-1));
  EXPECT_EQ(pseudo_det(ExactMatrix{{1, 1}, {1, 1}}), Scalar(2));
}

TEST(PseudoDet, NilpotentIsOne) {
  EXPECT_EQ(pseudo_det(ExactMatrix{{0, 1}, {0, 0}}), Scalar(1));
  EXPECT_TRUE(is_nilpotent(ExactMatrix{{0, 1}, {0, 0}}));
  EXPECT_FALSE(is_nilpotent(ExactMatrix::identity(3)));
  ExactMatrix f{{-1, -1}, {1, 1}};
  const auto ftg = mat_mul(transpose(f), ExactMatrix::identity(2));
  EXPECT_TRUE(is_nilpotent(ftg));
  EXPECT_EQ(pseudo_det(ftg), Scalar(1));
  EXPECT_EQ(pseudo_det(ExactMatrix(3, 3)), Scalar(1));
}

TEST(PseudoDet, SpectralCountVersusRank) {
  EXPECT_EQ(spectral_count(kPitfallG), 1u);
  EXPECT_EQ(rank(kPitfallG), 2u);
  EXPECT_EQ(spectral_count(ExactMatrix::identity(4)), 4u);
  EXPECT_EQ(spectral_count(ExactMatrix{{0, 1}, {0, 0}}), 0u);
}

TEST(PseudoDet, ElementaryCoefficients) {
  const auto p = char_poly(kSymmetric3);
  EXPECT_EQ(elementary_coefficient(p, 0), Scalar(1));
  EXPECT_EQ(elementary_coefficient(p, 1), Scalar(6));    // trace
  EXPECT_EQ(elementary_coefficient(p, 2), Scalar(-41));  // sum of principal 2x2 minors
  EXPECT_EQ(elementary_coefficient(p, 3), Scalar(0));    // det
}

TEST(PseudoDet, InvertibleEqualsLeibniz) {
  Rng rng(8);
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto a = random_invertible_matrix(rng, n);
    EXPECT_EQ(pseudo_det(a), oracle::leibniz_det(a));
    EXPECT_EQ(spectral_count(a), n);
  }
}
