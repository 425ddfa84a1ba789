#include "qpr/qmatrix.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "qpr/errors.hpp"

namespace qpr {

namespace {

void require_same_shape(const QMatrix& a, const QMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ShapeMismatch(std::string(op) + ": " + std::to_string(a.rows()) + "x" +
                        std::to_string(a.cols()) + " vs " + std::to_string(b.rows()) +
                        "x" + std::to_string(b.cols()));
  }
}

}  // namespace

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<Quaternion>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ShapeMismatch("ragged initializer list");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

QMatrix QMatrix::diagonal(std::span<const Quaternion> entries) {
  QMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

const Quaternion& QMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_) throw IndexOutOfRange(r, rows_);
  if (c >= cols_) throw IndexOutOfRange(c, cols_);
  return (*this)(r, c);
}

QMatrix mat_mul(const QMatrix& a, const QMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeMismatch("mat_mul: inner dimensions " + std::to_string(a.cols()) +
                        " and " + std::to_string(b.rows()));
  }
  QMatrix c(a.rows(), b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t col = 0; col < b.cols(); ++col) {
      Quaternion acc;
      for (std::size_t k = 0; k < a.cols(); ++k) acc += a(r, k) * b(k, col);
      c(r, col) = acc;
    }
  }
  return c;
}

QMatrix mat_adjoint(const QMatrix& a) {
  QMatrix t(a.cols(), a.rows());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) t(c, r) = conj(a(r, c));
  return t;
}

QMatrix mat_add(const QMatrix& a, const QMatrix& b) {
  require_same_shape(a, b, "mat_add");
  QMatrix c = a;
  auto out = c.data();
  auto in = b.data();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += in[i];
  return c;
}

QMatrix mat_sub(const QMatrix& a, const QMatrix& b) {
  require_same_shape(a, b, "mat_sub");
  QMatrix c = a;
  auto out = c.data();
  auto in = b.data();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= in[i];
  return c;
}

QMatrix scale_left(const Quaternion& q, const QMatrix& a) {
  QMatrix c = a;
  for (auto& e : c.data()) e = q * e;
  return c;
}

double max_abs_diff(const QMatrix& a, const QMatrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  auto da = a.data();
  auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) m = std::max(m, max_abs_diff(da[i], db[i]));
  return m;
}

double max_offdiag(const QMatrix& a) {
  double m = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (r != c) m = std::max(m, a(r, c).norm());
  return m;
}

double unitarity_deviation(const QMatrix& a) {
  if (!a.is_square()) throw ShapeMismatch("unitarity check on a non-square matrix");
  return max_abs_diff(mat_mul(mat_adjoint(a), a), QMatrix::identity(a.rows()));
}

bool is_unitary(const QMatrix& a, double eps) {
  return a.is_square() && unitarity_deviation(a) <= eps;
}

std::ostream& operator<<(std::ostream& os, const QMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? ",\n [" : "[");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
    os << ']';
  }
  return os << ']';
}

}  // namespace qpr
