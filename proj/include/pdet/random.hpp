#ifndef PDET_RANDOM_HPP
#define PDET_RANDOM_HPP

#include <pdet/charpoly.hpp>
#include <pdet/exact.hpp>
#include <pdet/matrix.hpp>

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace pdet {

// Random exact instances for property checks. All draws go through one
// mt19937_64 so a seed reproduces a whole suite.

using Rng = std::mt19937_64;

inline long uniform_int(Rng& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline ExactMatrix random_integer_matrix(Rng& rng, std::size_t rows, std::size_t cols,
                                         long lo = -4, long hi = 4) {
  ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = uniform_int(rng, lo, hi);
  return m;
}

/// Entries p/q with p in [-4, 4] and q in [1, 3].
inline ExactMatrix random_rational_matrix(Rng& rng, std::size_t rows, std::size_t cols) {
  ExactMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = Scalar(uniform_int(rng, -4, 4), uniform_int(rng, 1, 3));
  return m;
}

/// Product of an n x r and an r x n random matrix, so rank <= r.
inline ExactMatrix random_low_rank_matrix(Rng& rng, std::size_t n, std::size_t r) {
  return mat_mul(random_integer_matrix(rng, n, r, -3, 3), random_integer_matrix(rng, r, n, -3, 3));
}

inline ExactMatrix random_invertible_matrix(Rng& rng, std::size_t n) {
  while (true) {
    auto m = random_rational_matrix(rng, n, n);
    if (determinant(m) != 0) return m;
  }
}

/// S N S⁻¹ with N strictly upper triangular.
inline ExactMatrix random_nilpotent_matrix(Rng& rng, std::size_t n) {
  ExactMatrix upper(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) upper(i, j) = uniform_int(rng, -3, 3);
  ExactMatrix s(n, n);
  while (true) {
    s = random_integer_matrix(rng, n, n, -2, 2);
    if (determinant(s) != 0) break;
  }
  return mat_mul(mat_mul(s, upper), inverse(s));
}

inline ExactMatrix random_symmetric_matrix(Rng& rng, std::size_t n, long lo = -4, long hi = 4) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = uniform_int(rng, lo, hi);
  return m;
}

inline ExactMatrix random_skew_matrix(Rng& rng, std::size_t n, long lo = -4, long hi = 4) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      m(i, j) = uniform_int(rng, lo, hi);
      m(j, i) = -m(i, j);
    }
  return m;
}

/*
 * Random real normal matrix of one of several kinds: symmetric of random
 * rank, skew-symmetric, or a block diagonal of rotation-scaling blocks
 * [[a, -b], [b, a]] and scalars, conjugated by a permutation.
 */
inline ExactMatrix random_normal_matrix(Rng& rng, std::size_t n) {
  switch (uniform_int(rng, 0, 2)) {
    case 0: {
      const auto r = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<long>(n)));
      const auto b = random_integer_matrix(rng, r, n, -3, 3);
      auto m = mat_mul(transpose(b), b);
      if (uniform_int(rng, 0, 1) == 1) m = scaled(m, Scalar(-1));
      return m;
    }
    case 1:
      return random_skew_matrix(rng, n, -3, 3);
    default: {
      ExactMatrix m(n, n);
      std::size_t i = 0;
      while (i < n) {
        if (i + 1 < n && uniform_int(rng, 0, 1) == 1) {
          const long a = uniform_int(rng, -3, 3), b = uniform_int(rng, -3, 3);
          m(i, i) = a;
          m(i, i + 1) = -b;
          m(i + 1, i) = b;
          m(i + 1, i + 1) = a;
          i += 2;
        } else {
          m(i, i) = uniform_int(rng, -3, 3);
          i += 1;
        }
      }
      std::vector<std::size_t> perm(n);
      for (std::size_t k = 0; k < n; ++k) perm[k] = k;
      std::shuffle(perm.begin(), perm.end(), rng);
      ExactMatrix p(n, n);
      for (std::size_t k = 0; k < n; ++k) p(k, perm[k]) = 1;
      return mat_mul(mat_mul(p, m), transpose(p));
    }
  }
}

}  // namespace pdet

#endif  // PDET_RANDOM_HPP
