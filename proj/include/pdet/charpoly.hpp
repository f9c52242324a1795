#ifndef PDET_CHARPOLY_HPP
#define PDET_CHARPOLY_HPP

#include <pdet/matrix.hpp>
#include <pdet/scalar.hpp>

#include <cstddef>
#include <vector>

namespace pdet {

/// Ascending coefficient list: coeffs[j] multiplies x^j.
template <typename T>
struct Polynomial {
  std::vector<T> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }

  T operator()(const T& x) const {
    T value(0);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * x + *it;
    return value;
  }

  bool operator==(const Polynomial&) const = default;
};

namespace detail {

template <typename T>
void require_square(const Matrix<T>& a, const char* what) {
  if (!a.is_square())
    throw DimensionError(std::string(what) + " needs a square matrix, got " +
                         shape_string(a.rows(), a.cols()));
}

}  // namespace detail

/*
 * Characteristic polynomial det(A - x), ascending in x.
 *
 * Berkowitz's algorithm: the characteristic polynomial of each leading
 * principal block is a lower-triangular Toeplitz matrix applied to the
 * previous one. Only ring operations are used, so integer input never
 * produces a fraction and no pivoting decisions are needed.
 */
template <typename T>
Polynomial<T> char_poly(const Matrix<T>& a) {
  detail::require_square(a, "char_poly");
  const std::size_t n = a.rows();

  // Descending coefficients of det(x - A_r) for the leading r x r block.
  std::vector<T> p{T(1)};
  for (std::size_t r = 1; r <= n; ++r) {
    const std::size_t t = r - 1;  // new row/column
    std::vector<T> q(r + 1, T(0));
    q[0] = T(1);
    q[1] = -a(t, t);

    std::vector<T> v(t);  // M^(i-2) C, M the leading t x t block
    for (std::size_t i = 0; i < t; ++i) v[i] = a(i, t);
    for (std::size_t i = 2; i <= r; ++i) {
      T dot(0);
      for (std::size_t j = 0; j < t; ++j) dot += a(t, j) * v[j];
      q[i] = -dot;
      if (i == r) break;
      std::vector<T> next(t, T(0));
      for (std::size_t row = 0; row < t; ++row)
        for (std::size_t j = 0; j < t; ++j) next[row] += a(row, j) * v[j];
      v = std::move(next);
    }

    std::vector<T> updated(r + 1, T(0));
    for (std::size_t i = 0; i <= r; ++i)
      for (std::size_t j = 0; j < r && j <= i; ++j) updated[i] += q[i - j] * p[j];
    p = std::move(updated);
  }

  Polynomial<T> result;
  result.coeffs.resize(n + 1);
  const bool flip = n % 2 == 1;
  for (std::size_t j = 0; j <= n; ++j) result.coeffs[j] = flip ? T(-p[n - j]) : p[n - j];
  return result;
}

/// Index of the lowest nonzero coefficient. A characteristic polynomial is
/// never identically zero, so this always exists.
template <typename T>
std::size_t lowest_nonzero_index(const Polynomial<T>& p) {
  std::size_t j = 0;
  while (j < p.coeffs.size() && p.coeffs[j] == 0) ++j;
  return j;
}

/// k-th elementary symmetric function of the eigenvalues of an n x n matrix,
/// read off its characteristic polynomial: (-1)^(n-k) coeffs[n-k].
template <typename T>
T elementary_coefficient(const Polynomial<T>& char_polynomial, std::size_t k) {
  const std::size_t n = char_polynomial.degree();
  if (k > n) return T(0);
  const T& c = char_polynomial.coeffs[n - k];
  return (n - k) % 2 == 0 ? c : T(-c);
}

/// Product of the nonzero eigenvalues (1 for nilpotent matrices):
/// (-1)^j coeffs[j] for the lowest nonzero coefficient j.
template <typename T>
T pseudo_det_from_char_poly(const Polynomial<T>& char_polynomial) {
  const std::size_t j = lowest_nonzero_index(char_polynomial);
  const T& c = char_polynomial.coeffs[j];
  return j % 2 == 0 ? c : T(-c);
}

template <typename T>
T pseudo_det(const Matrix<T>& a) {
  return pseudo_det_from_char_poly(char_poly(a));
}

/// Number of nonzero eigenvalues with algebraic multiplicity. Can be
/// smaller than the rank when a has nontrivial Jordan blocks at zero.
template <typename T>
std::size_t spectral_count(const Matrix<T>& a) {
  return a.rows() - lowest_nonzero_index(char_poly(a));
}

template <typename T>
bool is_nilpotent(const Matrix<T>& a) {
  return spectral_count(a) == 0;
}

}  // namespace pdet

#endif  // PDET_CHARPOLY_HPP
