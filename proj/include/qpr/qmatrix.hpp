#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "qpr/quaternion.hpp"

namespace qpr {

/// Dense row-major matrix of quaternions.
///
/// Matrices act on column vectors from the left; scalars multiply vectors from
/// the right. Entry (f, g) is <f|A|g>.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix diagonal(std::span<const Quaternion> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Quaternion& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  /// Bounds-checked access; throws IndexOutOfRange.
  const Quaternion& at(std::size_t r, std::size_t c) const;

  std::span<const Quaternion> data() const { return data_; }
  std::span<Quaternion> data() { return data_; }

  friend bool operator==(const QMatrix&, const QMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Quaternion> data_;
};

/// Product with entries summed left to right; throws ShapeMismatch.
QMatrix mat_mul(const QMatrix& a, const QMatrix& b);
QMatrix mat_adjoint(const QMatrix& a);
QMatrix mat_add(const QMatrix& a, const QMatrix& b);
QMatrix mat_sub(const QMatrix& a, const QMatrix& b);
/// Left multiplication of every entry by q.
QMatrix scale_left(const Quaternion& q, const QMatrix& a);

inline QMatrix operator*(const QMatrix& a, const QMatrix& b) { return mat_mul(a, b); }
inline QMatrix operator+(const QMatrix& a, const QMatrix& b) { return mat_add(a, b); }
inline QMatrix operator-(const QMatrix& a, const QMatrix& b) { return mat_sub(a, b); }

/// Largest componentwise deviation between two equally shaped matrices.
double max_abs_diff(const QMatrix& a, const QMatrix& b);
/// Largest modulus of an off-diagonal entry.
double max_offdiag(const QMatrix& a);
/// max_abs_diff(adjoint(a) a, I).
double unitarity_deviation(const QMatrix& a);

bool is_unitary(const QMatrix& a, double eps = kDefaultEps);

std::ostream& operator<<(std::ostream& os, const QMatrix& m);

}  // namespace qpr
