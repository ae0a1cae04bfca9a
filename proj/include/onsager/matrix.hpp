#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "onsager/errors.hpp"

namespace onsager {

/// Dense row-major matrix over any ring-like entry type. T() must be zero.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw InputError("matrix data size does not match shape");
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<T>& data() const { return data_; }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  Matrix operator-() const {
    Matrix r(rows_, cols_);
    for (std::size_t k = 0; k < data_.size(); ++k) r.data_[k] = -data_[k];
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  template <class F>
  auto map(F&& f) const -> Matrix<decltype(f(std::declval<const T&>()))> {
    using R = decltype(f(std::declval<const T&>()));
    std::vector<R> out;
    out.reserve(data_.size());
    for (const auto& x : data_) out.push_back(f(x));
    return Matrix<R>(rows_, cols_, std::move(out));
  }

  Matrix transpose() const {
    Matrix r(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
    return r;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw InputError("matrix shapes do not conform");
  }
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Product of matrices with possibly different entry types (e.g. scalar
/// matrix times algebra-valued matrix).
template <class A, class B>
auto mul(const Matrix<A>& a, const Matrix<B>& b)
    -> Matrix<decltype(std::declval<const A&>() * std::declval<const B&>())> {
  using R = decltype(std::declval<const A&>() * std::declval<const B&>());
  if (a.cols() != b.rows()) throw InputError("matrix product: inner dimensions do not conform");
  Matrix<R> r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j).is_zero()) continue;
        r(i, j) += a(i, k) * b(k, j);
      }
    }
  return r;
}

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  return mul(a, b);
}

template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  if (!a.square() || !b.square() || a.rows() != b.rows())
    throw InputError("commutator: matrices must be square of equal size");
  return a * b - b * a;
}

template <class T>
T trace(const Matrix<T>& m) {
  if (!m.square()) throw InputError("trace of non-square matrix");
  T t{};
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

template <class T>
Matrix<T> kron(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) r(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return r;
}

namespace detail {

inline std::size_t ipow(std::size_t base, std::size_t e) {
  std::size_t r = 1;
  while (e-- > 0) r *= base;
  return r;
}

/// Digit of multi-index `index` at 1-based tensor position `leg` of `total`,
/// leg 1 being the most significant factor.
inline std::size_t digit(std::size_t index, int leg, int total, std::size_t dim) {
  return (index / ipow(dim, static_cast<std::size_t>(total - leg))) % dim;
}

}  // namespace detail

/// Places an operator acting on `legs.size()` tensor factors of dimension
/// `dim` onto the listed positions of a `total`-fold tensor product, identity
/// elsewhere. The k-th factor of `m` lands on tensor position legs[k]
/// (1-based), so embed(r, {2, 1}, 2) is r with its factors swapped.
template <class T>
Matrix<T> embed(const Matrix<T>& m, std::span<const int> legs, int total, std::size_t dim = 2) {
  const std::size_t k = legs.size();
  const std::size_t sub = detail::ipow(dim, k);
  if (m.rows() != sub || m.cols() != sub) throw InputError("embed: operator size does not match leg count");
  if (total < static_cast<int>(k)) throw InputError("embed: more legs than tensor factors");
  std::vector<bool> used(static_cast<std::size_t>(total) + 1, false);
  for (int leg : legs) {
    if (leg < 1 || leg > total) throw InputError("embed: leg " + std::to_string(leg) + " out of range");
    if (used[static_cast<std::size_t>(leg)]) throw InputError("embed: repeated leg " + std::to_string(leg));
    used[static_cast<std::size_t>(leg)] = true;
  }
  const std::size_t n = detail::ipow(dim, static_cast<std::size_t>(total));
  Matrix<T> r(n, n);
  for (std::size_t row = 0; row < n; ++row)
    for (std::size_t col = 0; col < n; ++col) {
      bool spectator_match = true;
      for (int leg = 1; leg <= total && spectator_match; ++leg)
        if (!used[static_cast<std::size_t>(leg)] &&
            detail::digit(row, leg, total, dim) != detail::digit(col, leg, total, dim))
          spectator_match = false;
      if (!spectator_match) continue;
      std::size_t mr = 0;
      std::size_t mc = 0;
      for (int leg : legs) {
        mr = mr * dim + detail::digit(row, leg, total, dim);
        mc = mc * dim + detail::digit(col, leg, total, dim);
      }
      r(row, col) = m(mr, mc);
    }
  return r;
}

/// Two-leg embedding: the first factor of `m` on leg i, the second on leg j.
template <class T>
Matrix<T> embed_leg(const Matrix<T>& m, int i, int j, int total, std::size_t dim = 2) {
  const int legs[2] = {i, j};
  return embed(m, std::span<const int>(legs, 2), total, dim);
}

/// Traces out tensor position `leg` (1-based) of an operator on `total` legs.
template <class T>
Matrix<T> partial_trace(const Matrix<T>& m, int leg, int total, std::size_t dim = 2) {
  if (leg < 1 || leg > total) throw InputError("partial_trace: leg " + std::to_string(leg) + " out of range");
  const std::size_t n = detail::ipow(dim, static_cast<std::size_t>(total));
  if (m.rows() != n || m.cols() != n) throw InputError("partial_trace: matrix size does not match leg count");
  const std::size_t out = n / dim;
  const std::size_t stride = detail::ipow(dim, static_cast<std::size_t>(total - leg));
  auto lift = [&](std::size_t reduced, std::size_t d) {
    std::size_t hi = reduced / stride;
    std::size_t lo = reduced % stride;
    return (hi * dim + d) * stride + lo;
  };
  Matrix<T> r(out, out);
  for (std::size_t i = 0; i < out; ++i)
    for (std::size_t j = 0; j < out; ++j)
      for (std::size_t d = 0; d < dim; ++d) r(i, j) += m(lift(i, d), lift(j, d));
  return r;
}

/// Permutation matrix exchanging the two factors of V (x) V.
template <class T>
Matrix<T> flip(std::size_t dim = 2) {
  Matrix<T> p(dim * dim, dim * dim);
  for (std::size_t a = 0; a < dim; ++a)
    for (std::size_t b = 0; b < dim; ++b) p(a * dim + b, b * dim + a) = T(1);
  return p;
}

}  // namespace onsager
