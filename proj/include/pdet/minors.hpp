#ifndef PDET_MINORS_HPP
#define PDET_MINORS_HPP

#include <pdet/charpoly.hpp>
#include <pdet/exact.hpp>
#include <pdet/matrix.hpp>

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pdet {

using IndexSet = std::vector<std::size_t>;

/// Default cap on the number of (row set, column set) pairs a single call
/// may enumerate.
inline constexpr std::uint64_t kDefaultPatternBudget = 2'000'000;

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A k x k selection: sorted row indices I and sorted column indices J.
struct MinorPattern {
  IndexSet rows;
  IndexSet cols;

  std::size_t order() const { return rows.size(); }
};

/// Binomial coefficient, saturating at uint64 max instead of overflowing.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t factor = n - k + i;
    if (result > std::numeric_limits<std::uint64_t>::max() / factor)
      return std::numeric_limits<std::uint64_t>::max();
    result = result * factor / i;  // exact: result * factor = C(n-k+i, i) * i
  }
  return result;
}

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a)
    return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

/// Number of k x k patterns of an n x m matrix.
inline std::uint64_t pattern_count(std::size_t n, std::size_t m, std::size_t k) {
  return saturating_mul(binomial(n, k), binomial(m, k));
}

inline void check_budget(std::uint64_t needed, std::uint64_t budget, const char* what) {
  if (needed > budget)
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(needed) +
                         " minor patterns exceed the budget of " + std::to_string(budget));
}

/// All k-subsets of {0..n-1} in lexicographic order; empty when k > n.
inline std::vector<IndexSet> subsets(std::size_t n, std::size_t k) {
  std::vector<IndexSet> out;
  if (k > n) return out;
  IndexSet current(k);
  for (std::size_t i = 0; i < k; ++i) current[i] = i;
  while (true) {
    out.push_back(current);
    // Advance the rightmost index that still has room.
    std::size_t i = k;
    while (i > 0 && current[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++current[i - 1];
    for (std::size_t j = i; j < k; ++j) current[j] = current[j - 1] + 1;
  }
  return out;
}

namespace detail {

inline void validate_index_set(const IndexSet& s, std::size_t bound, const char* axis) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= bound)
      throw std::out_of_range(std::string(axis) + " index " + std::to_string(s[i]) +
                              " out of range for extent " + std::to_string(bound));
    if (i > 0 && s[i] <= s[i - 1])
      throw std::invalid_argument(std::string(axis) + " indices must be strictly increasing");
  }
}

template <typename T>
void require_same_shape(const Matrix<T>& f, const Matrix<T>& g, const char* what) {
  if (f.rows() != g.rows() || f.cols() != g.cols())
    throw DimensionError(std::string(what) + ": shapes differ (" +
                         shape_string(f.rows(), f.cols()) + " vs " +
                         shape_string(g.rows(), g.cols()) + ")");
}

}  // namespace detail

/// det of the submatrix selected by the pattern; 1 for the empty pattern.
template <typename T>
T minor_det(const Matrix<T>& f, const MinorPattern& p) {
  if (p.rows.size() != p.cols.size())
    throw std::invalid_argument("pattern row and column sets differ in size");
  detail::validate_index_set(p.rows, f.rows(), "row");
  detail::validate_index_set(p.cols, f.cols(), "column");
  return determinant(submatrix<T>(f, p.rows, p.cols));
}

/*
 * k-th compound matrix Λᵏf: the C(n,k) x C(m,k) matrix of all k x k minors,
 * rows and columns indexed by lexicographically ordered subsets. Λ⁰f = [1].
 */
template <typename T>
Matrix<T> exterior_power(const Matrix<T>& f, std::size_t k,
                         std::uint64_t budget = kDefaultPatternBudget) {
  check_budget(pattern_count(f.rows(), f.cols(), k), budget, "exterior_power");
  const auto row_sets = subsets(f.rows(), k);
  const auto col_sets = subsets(f.cols(), k);
  Matrix<T> out(row_sets.size(), col_sets.size());
  for (std::size_t i = 0; i < row_sets.size(); ++i)
    for (std::size_t j = 0; j < col_sets.size(); ++j)
      out(i, j) = determinant(submatrix<T>(f, row_sets[i], col_sets[j]));
  return out;
}

/// Σ over all k x k patterns P of det(f_P) det(g_P). 1 for k = 0, 0 when k
/// exceeds both dimensions' reach.
template <typename T>
T minor_pair_sum(const Matrix<T>& f, const Matrix<T>& g, std::size_t k,
                 std::uint64_t budget = kDefaultPatternBudget) {
  detail::require_same_shape(f, g, "minor_pair_sum");
  if (k == 0) return T(1);
  check_budget(pattern_count(f.rows(), f.cols(), k), budget, "minor_pair_sum");
  const auto row_sets = subsets(f.rows(), k);
  const auto col_sets = subsets(f.cols(), k);
  T sum(0);
  for (const auto& rows : row_sets)
    for (const auto& cols : col_sets) {
      const T df = determinant(submatrix<T>(f, rows, cols));
      if (df == 0) continue;
      sum += df * determinant(submatrix<T>(g, rows, cols));
    }
  return sum;
}

/// det(1 + z fᵀg) as a polynomial in z: coefficient k is minor_pair_sum(f, g, k).
template <typename T>
Polynomial<T> cauchy_binet_coeffs(const Matrix<T>& f, const Matrix<T>& g,
                                  std::uint64_t budget = kDefaultPatternBudget) {
  detail::require_same_shape(f, g, "cauchy_binet_coeffs");
  const std::size_t top = std::min(f.rows(), f.cols());
  std::uint64_t total = 0;
  for (std::size_t k = 1; k <= top; ++k) {
    total += pattern_count(f.rows(), f.cols(), k);
    if (total < pattern_count(f.rows(), f.cols(), k))
      total = std::numeric_limits<std::uint64_t>::max();
  }
  check_budget(total, budget, "cauchy_binet_coeffs");
  Polynomial<T> p;
  p.coeffs.reserve(top + 1);
  for (std::size_t k = 0; k <= top; ++k) p.coeffs.push_back(minor_pair_sum(f, g, k, budget));
  return p;
}

/// Det(fᵀg) computed as a sum of minor products. The order k is the spectral
/// count of fᵀg, which can be smaller than its rank.
template <typename T>
T pseudo_det_via_minors(const Matrix<T>& f, const Matrix<T>& g,
                        std::uint64_t budget = kDefaultPatternBudget) {
  detail::require_same_shape(f, g, "pseudo_det_via_minors");
  const std::size_t k = spectral_count(mat_mul(transpose(f), g));
  return minor_pair_sum(f, g, k, budget);
}

/// Σ over all k x k patterns of det(a_P)².
template <typename T>
T pythagoras_sum(const Matrix<T>& a, std::size_t k,
                 std::uint64_t budget = kDefaultPatternBudget) {
  detail::require_square(a, "pythagoras_sum");
  return minor_pair_sum(a, a, k, budget);
}

/// tr(Λᵏa): the sum of the principal k x k minors.
template <typename T>
T diag_minor_trace(const Matrix<T>& a, std::size_t k,
                   std::uint64_t budget = kDefaultPatternBudget) {
  detail::require_square(a, "diag_minor_trace");
  check_budget(binomial(a.rows(), k), budget, "diag_minor_trace");
  T sum(0);
  for (const auto& s : subsets(a.rows(), k)) sum += determinant(submatrix<T>(a, s, s));
  return sum;
}

/*
 * Appends λ·(row `source` of fT) to fT and μ·(row `source` of gT) to gT.
 * When fᵀg is nonsingular, Det of the enlarged product is (1 + λμ) Det(fᵀg).
 */
template <typename T>
std::pair<Matrix<T>, Matrix<T>> append_parallel_rows(const Matrix<T>& fT, const Matrix<T>& gT,
                                                     std::size_t source, const T& lambda,
                                                     const T& mu) {
  detail::require_same_shape(fT, gT, "append_parallel_rows");
  if (source >= fT.rows())
    throw std::out_of_range("source row " + std::to_string(source) + " out of range for " +
                            std::to_string(fT.rows()) + " rows");
  Matrix<T> v(1, fT.cols()), w(1, gT.cols());
  for (std::size_t j = 0; j < fT.cols(); ++j) {
    v(0, j) = lambda * fT(source, j);
    w(0, j) = mu * gT(source, j);
  }
  return {vstack(fT, v), vstack(gT, w)};
}

/// Appends Σ λⱼ·(row j of fT) to fT and Σ μⱼ·(row j of gT) to gT, for
/// j < lambdas.size(). The pseudo-determinant scales by 1 + Σ λⱼμⱼ.
template <typename T>
std::pair<Matrix<T>, Matrix<T>> append_combination_rows(const Matrix<T>& fT,
                                                        const Matrix<T>& gT,
                                                        const std::vector<T>& lambdas,
                                                        const std::vector<T>& mus) {
  detail::require_same_shape(fT, gT, "append_combination_rows");
  if (lambdas.size() != mus.size())
    throw std::invalid_argument("coefficient lists differ in length");
  if (lambdas.size() > fT.rows())
    throw std::out_of_range("more coefficients than rows");
  Matrix<T> v(1, fT.cols()), w(1, gT.cols());
  for (std::size_t r = 0; r < lambdas.size(); ++r)
    for (std::size_t j = 0; j < fT.cols(); ++j) {
      v(0, j) += lambdas[r] * fT(r, j);
      w(0, j) += mus[r] * gT(r, j);
    }
  return {vstack(fT, v), vstack(gT, w)};
}

}  // namespace pdet

#endif  // PDET_MINORS_HPP
