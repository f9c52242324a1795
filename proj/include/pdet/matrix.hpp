#ifndef PDET_MATRIX_HPP
#define PDET_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pdet {

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline std::string shape_string(std::size_t rows, std::size_t cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

/*
 * Dense row-major matrix over a ring T.
 *
 * Zero-row and zero-column matrices are legal values; products involving
 * them are zero matrices of the conformable shape.
 */
template <typename T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<T>> init) : rows_(init.size()) {
    cols_ = rows_ == 0 ? 0 : init.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged initializer list");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return data_.empty(); }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  const std::vector<T>& data() const noexcept { return data_; }

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows())
    throw DimensionError("cannot multiply " + shape_string(a.rows(), a.cols()) + " by " +
                         shape_string(b.rows(), b.cols()));
  Matrix<T> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

template <typename T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

template <typename T>
Matrix<T> operator+(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("cannot add " + shape_string(a.rows(), a.cols()) + " and " +
                         shape_string(b.rows(), b.cols()));
  Matrix<T> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  return c;
}

template <typename T>
Matrix<T> operator-(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionError("cannot subtract " + shape_string(b.rows(), b.cols()) + " from " +
                         shape_string(a.rows(), a.cols()));
  Matrix<T> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  return c;
}

template <typename T>
Matrix<T> scaled(const Matrix<T>& a, const T& factor) {
  Matrix<T> c = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) *= factor;
  return c;
}

template <typename T>
Matrix<T> power(const Matrix<T>& a, unsigned exponent) {
  if (!a.is_square()) throw DimensionError("power of non-square matrix");
  Matrix<T> result = Matrix<T>::identity(a.rows());
  for (unsigned i = 0; i < exponent; ++i) result = mat_mul(result, a);
  return result;
}

template <typename T>
T trace(const Matrix<T>& a) {
  if (!a.is_square()) throw DimensionError("trace of non-square matrix");
  T sum(0);
  for (std::size_t i = 0; i < a.rows(); ++i) sum += a(i, i);
  return sum;
}

template <typename T>
bool is_symmetric(const Matrix<T>& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j)
      if (a(i, j) != a(j, i)) return false;
  return true;
}

template <typename T>
bool is_skew_symmetric(const Matrix<T>& a) {
  if (!a.is_square()) return false;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i; j < a.cols(); ++j)
      if (a(i, j) != -a(j, i)) return false;
  return true;
}

template <typename T>
bool is_zero(const Matrix<T>& a) {
  return std::all_of(a.data().begin(), a.data().end(), [](const T& x) { return x == 0; });
}

/// Real-sense normality check: AᵀA = AAᵀ.
template <typename T>
bool is_normal(const Matrix<T>& a) {
  if (!a.is_square()) return false;
  const auto at = transpose(a);
  return mat_mul(at, a) == mat_mul(a, at);
}

/// Rows `rows` and columns `cols` of a, in the given order.
template <typename T>
Matrix<T> submatrix(const Matrix<T>& a, std::span<const std::size_t> rows,
                    std::span<const std::size_t> cols) {
  Matrix<T> s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = a(rows[i], cols[j]);
  return s;
}

template <typename T>
Matrix<T> block_diag(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> c(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, a.cols() + j) = b(i, j);
  return c;
}

/// Appends the rows of b below a.
template <typename T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.cols())
    throw DimensionError("cannot stack " + shape_string(a.rows(), a.cols()) + " over " +
                         shape_string(b.rows(), b.cols()));
  Matrix<T> c(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c(a.rows() + i, j) = b(i, j);
  return c;
}

template <typename To, typename From, typename Convert>
Matrix<To> map_entries(const Matrix<From>& a, Convert convert) {
  Matrix<To> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = convert(a(i, j));
  return out;
}

}  // namespace pdet

#endif  // PDET_MATRIX_HPP
