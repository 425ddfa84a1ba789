#pragma once

#include <array>
#include <cmath>
#include <iosfwd>

#include <Eigen/Core>

namespace qpr {

/// Tolerance used for every unit, unitary and identity check unless a caller
/// passes its own.
inline constexpr double kDefaultEps = 1e-9;

/// q = w + x i + y j + z k.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}
  // Real scalars convert implicitly; this keeps `2.0 * q` and `q == 1` short.
  constexpr Quaternion(double real) : w(real) {}  // NOLINT

  static constexpr Quaternion one() { return {1, 0, 0, 0}; }
  static constexpr Quaternion i() { return {0, 1, 0, 0}; }
  static constexpr Quaternion j() { return {0, 0, 1, 0}; }
  static constexpr Quaternion k() { return {0, 0, 0, 1}; }

  /// Complex number re + im*i embedded along the i axis.
  static constexpr Quaternion complex(double re, double im) { return {re, im, 0, 0}; }
  /// exp(angle * axis) for a unit imaginary axis.
  static Quaternion from_axis_angle(const Eigen::Vector3d& axis, double angle);

  Eigen::Vector3d imag() const { return {x, y, z}; }
  constexpr double real() const { return w; }

  constexpr double norm2() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm2()); }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w; x += o.x; y += o.y; z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w; x -= o.x; y -= o.y; z -= o.z;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    w *= s; x *= s; y *= s; z *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

/// Hamilton product.
constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
  return {p.w * q.w - p.x * q.x - p.y * q.y - p.z * q.z,
          p.w * q.x + p.x * q.w + p.y * q.z - p.z * q.y,
          p.w * q.y - p.x * q.z + p.y * q.w + p.z * q.x,
          p.w * q.z + p.x * q.y - p.y * q.x + p.z * q.w};
}
constexpr Quaternion operator+(Quaternion p, const Quaternion& q) { return p += q; }
constexpr Quaternion operator-(Quaternion p, const Quaternion& q) { return p -= q; }
constexpr Quaternion operator-(const Quaternion& q) { return {-q.w, -q.x, -q.y, -q.z}; }
constexpr Quaternion operator*(double s, Quaternion q) { return q *= s; }
constexpr Quaternion operator*(Quaternion q, double s) { return q *= s; }

constexpr Quaternion quat_mul(const Quaternion& p, const Quaternion& q) { return p * q; }
constexpr Quaternion conj(const Quaternion& q) { return {q.w, -q.x, -q.y, -q.z}; }
constexpr Quaternion quat_conj(const Quaternion& q) { return conj(q); }

/// conj(q)/|q|^2. Throws ZeroQuaternion when |q| == 0.
Quaternion quat_inv(const Quaternion& q);

inline double abs(const Quaternion& q) { return q.norm(); }

/// Largest componentwise absolute difference.
double max_abs_diff(const Quaternion& p, const Quaternion& q);

inline bool is_unit(const Quaternion& q, double eps = kDefaultEps) {
  return std::abs(q.norm() - 1.0) <= eps;
}

/// True when q lies in span{1, i} within eps.
inline bool is_complex(const Quaternion& q, double eps = kDefaultEps) {
  return std::abs(q.y) <= eps && std::abs(q.z) <= eps;
}

/// q/|q|. Throws ZeroQuaternion on zero input.
Quaternion normalized(const Quaternion& q);

/// Matrix of v -> q v conj(q) on imaginary parts. Throws NotUnit when
/// |q| deviates from 1 by more than eps.
Eigen::Matrix3d rotation_of(const Quaternion& q, double eps = kDefaultEps);

/// Unit quaternion q with rotation_of(q) == r (the lift with w >= 0).
Quaternion quaternion_from_rotation(const Eigen::Matrix3d& r);

/// Unit quaternion u with u a conj(u) parallel to b for unit vectors a, b,
/// taking the smallest rotation angle. Antipodal inputs rotate by pi about a
/// fixed axis perpendicular to a.
Quaternion minimal_rotation(const Eigen::Vector3d& a, const Eigen::Vector3d& b);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace qpr
