#ifndef PDET_NUMERIC_HPP
#define PDET_NUMERIC_HPP

#include <pdet/charpoly.hpp>
#include <pdet/exact.hpp>
#include <pdet/matrix.hpp>
#include <pdet/minors.hpp>

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pdet {

// Floating-point helpers for spectral statements. Nothing here feeds back
// into the exact routines.

inline constexpr double kJacobiTolerance = 1e-13;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr double kZeroEigenvalueThreshold = 1e-9;
inline constexpr double kPfaffianPairTolerance = 1e-8;

class NumericalBreakdown : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct FloatSpectrum {
  std::vector<double> eigenvalues;  // ascending
  std::size_t dimension = 0;
};

inline double to_double(const Scalar& x) { return x.convert_to<double>(); }

template <typename T>
Matrix<double> to_double_matrix(const Matrix<T>& a) {
  if constexpr (std::is_same_v<T, double>) {
    return a;
  } else {
    return map_entries<double>(a, [](const T& x) { return to_double(x); });
  }
}

inline double frobenius_norm(const Matrix<double>& a) {
  double sum = 0;
  for (double x : a.data()) sum += x * x;
  return std::sqrt(sum);
}

/// Cyclic Jacobi rotations on a symmetric double matrix, in place. Stops
/// when the off-diagonal Frobenius norm drops below tol * ‖a‖.
inline std::vector<double> jacobi_eigenvalues(Matrix<double> a) {
  const std::size_t n = a.rows();
  const double norm = frobenius_norm(a);
  for (int sweep = 0; sweep < kJacobiMaxSweeps; ++sweep) {
    double off = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) off += a(i, j) * a(i, j);
    if (std::sqrt(off) <= kJacobiTolerance * norm) break;

    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::hypot(theta, 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
      }
  }
  std::vector<double> values(n);
  for (std::size_t i = 0; i < n; ++i) values[i] = a(i, i);
  std::sort(values.begin(), values.end());
  return values;
}

template <typename T>
FloatSpectrum symmetric_eigenvalues(const Matrix<T>& a) {
  if (!is_symmetric(a)) throw std::invalid_argument("symmetric_eigenvalues: input not symmetric");
  return {jacobi_eigenvalues(to_double_matrix(a)), a.rows()};
}

/// Eigenvalues counted as nonzero: |λ| > 1e-9 ‖a‖.
inline std::size_t numeric_nonzero_count(const FloatSpectrum& spectrum, double norm) {
  return static_cast<std::size_t>(
      std::count_if(spectrum.eigenvalues.begin(), spectrum.eigenvalues.end(),
                    [&](double x) { return std::abs(x) > kZeroEigenvalueThreshold * norm; }));
}

/*
 * |Pf(a)| for real skew-symmetric a: the product of the block parameters
 * |λⱼ| of its orthogonal normal form. Each |λⱼ| appears twice among the
 * singular values, which are read off as the positive eigenvalues of
 * [[0, a], [aᵀ, 0]]; the pairs must agree to within 1e-8 relative.
 */
template <typename T>
double pseudo_pfaffian_abs(const Matrix<T>& a) {
  if (!is_skew_symmetric(a))
    throw std::invalid_argument("pseudo_pfaffian_abs: input not skew-symmetric");
  const std::size_t n = a.rows();
  const auto ad = to_double_matrix(a);
  Matrix<double> embed(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      embed(i, n + j) = ad(i, j);
      embed(n + j, i) = ad(i, j);
    }
  const double norm = frobenius_norm(embed);
  std::vector<double> singular;
  for (double x : jacobi_eigenvalues(embed))
    if (x > kZeroEigenvalueThreshold * norm) singular.push_back(x);
  std::sort(singular.rbegin(), singular.rend());
  if (singular.size() % 2 != 0)
    throw NumericalBreakdown("pseudo_pfaffian_abs: odd number of nonzero singular values");
  double product = 1.0;
  for (std::size_t i = 0; i < singular.size(); i += 2) {
    const double hi = singular[i], lo = singular[i + 1];
    if (hi - lo > kPfaffianPairTolerance * hi)
      throw NumericalBreakdown("pseudo_pfaffian_abs: singular values do not pair up");
    product *= std::sqrt(hi * lo);
  }
  return product;
}

/// (|Det(a)|, sqrt of the sum of squared rank-sized minors) for real normal a.
template <typename T>
std::pair<double, double> volume_check(const Matrix<T>& a) {
  if (!is_normal(a)) throw std::invalid_argument("volume_check: input not normal");
  const double det = std::abs(to_double(pseudo_det(a)));
  const double volume = std::sqrt(to_double(pythagoras_sum(a, rank(a))));
  return {det, volume};
}

/// (tr log⁺|a| from numeric eigenvalues, log |Det(a)| from the exact value).
template <typename T>
std::pair<double, double> log_trace_check(const Matrix<T>& a) {
  const auto spectrum = symmetric_eigenvalues(a);
  const double norm = frobenius_norm(to_double_matrix(a));
  double trace_log = 0;
  for (double x : spectrum.eigenvalues)
    if (std::abs(x) > kZeroEigenvalueThreshold * norm) trace_log += std::log(std::abs(x));
  const Scalar det = abs(pseudo_det(a));
  const double log_det = std::log(numerator(det).convert_to<double>()) -
                         std::log(denominator(det).convert_to<double>());
  return {trace_log, log_det};
}

}  // namespace pdet

#endif  // PDET_NUMERIC_HPP
