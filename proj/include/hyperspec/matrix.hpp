#ifndef HYPERSPEC_MATRIX_HPP
#define HYPERSPEC_MATRIX_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hyperspec/error.hpp"

namespace hyperspec {

// Dense row-major rectangular matrix.
template <typename T>
class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> values() const { return data_; }

  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

// Entries in {-1, 0, +1}; rows are vertices, columns hyperedges.
using IncidenceMatrix = DenseMatrix<int>;

// Dense symmetric matrix. Every write goes to (i,j) and (j,i), so the
// stored array is exactly symmetric at all times.
template <typename T>
class BasicSymmetricMatrix {
 public:
  using value_type = T;

  BasicSymmetricMatrix() = default;
  explicit BasicSymmetricMatrix(std::size_t order) : order_(order), data_(order * order, T{}) {}

  // Rejects any input that is not exactly symmetric.
  static BasicSymmetricMatrix from_row_major(std::size_t order, std::vector<T> entries) {
    if (entries.size() != order * order)
      throw Error(Errc::invalid_parameters, "entry count does not match order");
    for (std::size_t i = 0; i < order; ++i)
      for (std::size_t j = i + 1; j < order; ++j)
        if (entries[i * order + j] != entries[j * order + i])
          throw Error(Errc::non_symmetric_input,
                      "entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
    BasicSymmetricMatrix m;
    m.order_ = order;
    m.data_ = std::move(entries);
    return m;
  }

  static BasicSymmetricMatrix identity(std::size_t order) {
    BasicSymmetricMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) m.set(i, i, T{1});
    return m;
  }

  static BasicSymmetricMatrix diagonal(std::span<const T> diag) {
    BasicSymmetricMatrix m(diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m.set(i, i, diag[i]);
    return m;
  }

  std::size_t order() const { return order_; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * order_ + j]; }

  void set(std::size_t i, std::size_t j, T value) {
    data_[i * order_ + j] = value;
    data_[j * order_ + i] = value;
  }
  void add(std::size_t i, std::size_t j, T delta) {
    data_[i * order_ + j] += delta;
    if (i != j) data_[j * order_ + i] += delta;
  }

  std::span<const T> row(std::size_t i) const { return {data_.data() + i * order_, order_}; }
  std::span<const T> values() const { return data_; }

  T trace() const {
    T t{};
    for (std::size_t i = 0; i < order_; ++i) t += (*this)(i, i);
    return t;
  }

  template <typename U>
  BasicSymmetricMatrix<U> cast() const {
    std::vector<U> out(data_.size());
    for (std::size_t k = 0; k < data_.size(); ++k) out[k] = static_cast<U>(data_[k]);
    return BasicSymmetricMatrix<U>::from_row_major(order_, std::move(out));
  }

  BasicSymmetricMatrix principal_submatrix(std::span<const std::size_t> keep) const {
    BasicSymmetricMatrix sub(keep.size());
    for (std::size_t a = 0; a < keep.size(); ++a)
      for (std::size_t b = a; b < keep.size(); ++b) sub.set(a, b, (*this)(keep[a], keep[b]));
    return sub;
  }

  friend BasicSymmetricMatrix operator-(const BasicSymmetricMatrix& x,
                                        const BasicSymmetricMatrix& y) {
    if (x.order_ != y.order_) throw Error(Errc::order_mismatch, "matrix difference");
    BasicSymmetricMatrix out(x.order_);
    for (std::size_t k = 0; k < x.data_.size(); ++k) out.data_[k] = x.data_[k] - y.data_[k];
    return out;
  }

  friend bool operator==(const BasicSymmetricMatrix&, const BasicSymmetricMatrix&) = default;

 private:
  std::size_t order_ = 0;
  std::vector<T> data_;
};

using SymmetricMatrix = BasicSymmetricMatrix<double>;
using IntegerSymmetricMatrix = BasicSymmetricMatrix<std::int64_t>;

}  // namespace hyperspec

#endif
