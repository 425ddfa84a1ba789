#include "qpr/quaternion.hpp"

#include <algorithm>
#include <ostream>

#include <Eigen/Geometry>

#include "qpr/errors.hpp"

namespace qpr {

Quaternion Quaternion::from_axis_angle(const Eigen::Vector3d& axis, double angle) {
  const double s = std::sin(angle);
  return {std::cos(angle), s * axis.x(), s * axis.y(), s * axis.z()};
}

Quaternion quat_inv(const Quaternion& q) {
  const double n2 = q.norm2();
  if (n2 == 0.0) throw ZeroQuaternion();
  return (1.0 / n2) * conj(q);
}

double max_abs_diff(const Quaternion& p, const Quaternion& q) {
  return std::max({std::abs(p.w - q.w), std::abs(p.x - q.x), std::abs(p.y - q.y),
                   std::abs(p.z - q.z)});
}

Quaternion normalized(const Quaternion& q) {
  const double n = q.norm();
  if (n == 0.0) throw ZeroQuaternion();
  return (1.0 / n) * q;
}

Eigen::Matrix3d rotation_of(const Quaternion& q, double eps) {
  if (!is_unit(q, eps)) throw NotUnit(q.norm());
  const double w = q.w, x = q.x, y = q.y, z = q.z;
  Eigen::Matrix3d r;
  r << 1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
      2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
      2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y);
  return r;
}

Quaternion quaternion_from_rotation(const Eigen::Matrix3d& r) {
  // Shepperd: branch on the largest of the four squared components.
  const double tr = r.trace();
  Quaternion q;
  if (tr >= r(0, 0) && tr >= r(1, 1) && tr >= r(2, 2)) {
    const double s = 2.0 * std::sqrt(1.0 + tr);
    q = {0.25 * s, (r(2, 1) - r(1, 2)) / s, (r(0, 2) - r(2, 0)) / s, (r(1, 0) - r(0, 1)) / s};
  } else if (r(0, 0) >= r(1, 1) && r(0, 0) >= r(2, 2)) {
    const double s = 2.0 * std::sqrt(1.0 + r(0, 0) - r(1, 1) - r(2, 2));
    q = {(r(2, 1) - r(1, 2)) / s, 0.25 * s, (r(0, 1) + r(1, 0)) / s, (r(0, 2) + r(2, 0)) / s};
  } else if (r(1, 1) >= r(2, 2)) {
    const double s = 2.0 * std::sqrt(1.0 + r(1, 1) - r(0, 0) - r(2, 2));
    q = {(r(0, 2) - r(2, 0)) / s, (r(0, 1) + r(1, 0)) / s, 0.25 * s, (r(1, 2) + r(2, 1)) / s};
  } else {
    const double s = 2.0 * std::sqrt(1.0 + r(2, 2) - r(0, 0) - r(1, 1));
    q = {(r(1, 0) - r(0, 1)) / s, (r(0, 2) + r(2, 0)) / s, (r(1, 2) + r(2, 1)) / s, 0.25 * s};
  }
  if (q.w < 0) q = -q;
  return normalized(q);
}

Quaternion minimal_rotation(const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
  const Eigen::Vector3d u = a.normalized();
  const Eigen::Vector3d v = b.normalized();
  const double c = u.dot(v);
  if (c < -1.0 + 1e-12) {
    // Antipodal: any perpendicular axis works; pick the one built from the
    // coordinate axis least aligned with u.
    Eigen::Index idx;
    u.cwiseAbs().minCoeff(&idx);
    const Eigen::Vector3d axis = u.cross(Eigen::Vector3d::Unit(idx)).normalized();
    return {0.0, axis.x(), axis.y(), axis.z()};
  }
  // Half-angle construction: q = (1 + c, u x v) normalized.
  const Eigen::Vector3d cr = u.cross(v);
  return normalized(Quaternion{1.0 + c, cr.x(), cr.y(), cr.z()});
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '[' << q.w << ", " << q.x << ", " << q.y << ", " << q.z << ']';
}

}  // namespace qpr
