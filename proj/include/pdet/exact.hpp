#ifndef PDET_EXACT_HPP
#define PDET_EXACT_HPP

#include <pdet/matrix.hpp>
#include <pdet/scalar.hpp>

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pdet {

using ExactMatrix = Matrix<Scalar>;

/*
 * Row reduction, rank, null space, rank factorization and the Moore-Penrose
 * pseudo-inverse over an exact field T (the rationals by default).
 *
 * Pivots are chosen as the first nonzero entry in the current column, so
 * every result is a deterministic function of the input.
 */

template <typename T>
struct RowEchelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank = 0;
};

template <typename T>
struct RankFactorization {
  Matrix<T> left;   // n x r, full column rank
  Matrix<T> right;  // r x m, full row rank
  std::size_t rank = 0;
};

template <typename T>
RowEchelon<T> rref(const Matrix<T>& a) {
  RowEchelon<T> out{a, {}, 0};
  Matrix<T>& m = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    const T inv = T(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const T factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    out.pivot_columns.push_back(col);
    ++row;
  }
  out.rank = row;
  return out;
}

template <typename T>
std::size_t rank(const Matrix<T>& a) {
  return rref(a).rank;
}

/// Null-space basis as column vectors, one per free column of rref(a).
template <typename T>
std::vector<Matrix<T>> kernel_basis(const Matrix<T>& a) {
  const auto echelon = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : echelon.pivot_columns) is_pivot[c] = true;

  std::vector<Matrix<T>> basis;
  for (std::size_t free = 0; free < a.cols(); ++free) {
    if (is_pivot[free]) continue;
    Matrix<T> v(a.cols(), 1);
    v(free, 0) = T(1);
    for (std::size_t r = 0; r < echelon.rank; ++r)
      v(echelon.pivot_columns[r], 0) = -echelon.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// a = left * right with left built from the pivot columns of a and right
/// from the nonzero rows of rref(a).
template <typename T>
RankFactorization<T> rank_factorization(const Matrix<T>& a) {
  const auto echelon = rref(a);
  const std::size_t r = echelon.rank;
  RankFactorization<T> f{Matrix<T>(a.rows(), r), Matrix<T>(r, a.cols()), r};
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < r; ++k) f.left(i, k) = a(i, echelon.pivot_columns[k]);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < a.cols(); ++j) f.right(k, j) = echelon.reduced(k, j);
  return f;
}

/// Fraction-free (Bareiss) determinant. Every division is exact, so integer
/// inputs stay integral throughout.
template <typename T>
T determinant(const Matrix<T>& a) {
  if (!a.is_square())
    throw DimensionError("determinant of non-square " + shape_string(a.rows(), a.cols()) +
                         " matrix");
  const std::size_t n = a.rows();
  if (n == 0) return T(1);
  Matrix<T> m = a;
  T previous(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m(swap_row, k) == 0) ++swap_row;
      if (swap_row == n) return T(0);
      for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(swap_row, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / previous;
      m(i, k) = T(0);
    }
    previous = m(k, k);
  }
  return negate ? T(-m(n - 1, n - 1)) : m(n - 1, n - 1);
}

template <typename T>
Matrix<T> inverse(const Matrix<T>& a) {
  if (!a.is_square())
    throw DimensionError("inverse of non-square " + shape_string(a.rows(), a.cols()) +
                         " matrix");
  const std::size_t n = a.rows();
  Matrix<T> augmented(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) augmented(i, j) = a(i, j);
    augmented(i, n + i) = T(1);
  }
  const auto echelon = rref(augmented);
  if (echelon.rank < n || (n > 0 && echelon.pivot_columns[n - 1] != n - 1))
    throw std::domain_error("matrix is singular");
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = echelon.reduced(i, n + j);
  return inv;
}

/// Moore-Penrose pseudo-inverse via a = C R:  a⁺ = Rᵀ (R Rᵀ)⁻¹ (Cᵀ C)⁻¹ Cᵀ.
/// The zero matrix maps to the zero matrix of transposed shape.
template <typename T>
Matrix<T> pseudo_inverse(const Matrix<T>& a) {
  const auto f = rank_factorization(a);
  if (f.rank == 0) return Matrix<T>(a.cols(), a.rows());
  const auto ct = transpose(f.left);
  const auto rt = transpose(f.right);
  const auto rr_inv = inverse(mat_mul(f.right, rt));
  const auto cc_inv = inverse(mat_mul(ct, f.left));
  return mat_mul(mat_mul(rt, rr_inv), mat_mul(cc_inv, ct));
}

}  // namespace pdet

#endif  // PDET_EXACT_HPP
