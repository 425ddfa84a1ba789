#include <doctest.h>

#include <numbers>

#include "oracle.hpp"
#include "qpr/errors.hpp"
#include "qpr/quaternion.hpp"

using namespace qpr;

TEST_CASE("unit products") {
  const auto i = Quaternion::i(), j = Quaternion::j(), k = Quaternion::k();
  CHECK(i * j == k);
  CHECK(j * i == -k);
  CHECK(j * k == i);
  CHECK(k * i == j);
  CHECK(i * i == Quaternion(-1.0));
  CHECK(i * j * k == Quaternion(-1.0));

  const double h = 1.0 / std::sqrt(2.0);
  const Quaternion q{h, h, 0, 0};
  CHECK(max_abs_diff(q * q, i) <= 1e-15);
}

TEST_CASE("product agrees with the complex 2x2 form") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 2000; ++t) {
    const auto p = oracle::random_quaternion(rng), q = oracle::random_quaternion(rng);
    CHECK(oracle::diff(p * q, oracle::mul(p, q)) <= 1e-12);
  }
}

TEST_CASE("norm, conjugate and inverse") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 2000; ++t) {
    const auto p = oracle::random_quaternion(rng), q = oracle::random_quaternion(rng);
    CHECK(std::abs((p * q).norm() - p.norm() * q.norm()) <= 1e-12 * (1 + p.norm() * q.norm()));
    CHECK(max_abs_diff(conj(p * q), conj(q) * conj(p)) <= 1e-12);
    CHECK(max_abs_diff(p * quat_inv(p), 1.0) <= 1e-12);
    CHECK(max_abs_diff(quat_inv(p) * p, 1.0) <= 1e-12);
  }
  CHECK_THROWS_AS(quat_inv(Quaternion{}), ZeroQuaternion);
  CHECK_THROWS_AS(normalized(Quaternion{}), ZeroQuaternion);
}

TEST_CASE("rotation_of") {
  SUBCASE("k rotates by pi about z") {
    const Eigen::Matrix3d r = rotation_of(Quaternion::k());
    CHECK((r - Eigen::Vector3d(-1, -1, 1).asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff() <=
          1e-15);
  }
  SUBCASE("(1+i)/sqrt2 rotates by pi/2 about x") {
    const double h = 1.0 / std::sqrt(2.0);
    const Eigen::Matrix3d r = rotation_of({h, h, 0, 0});
    Eigen::Matrix3d expect;
    expect << 1, 0, 0, 0, 0, -1, 0, 1, 0;
    CHECK((r - expect).cwiseAbs().maxCoeff() <= 1e-15);
  }
  SUBCASE("acts as conjugation") {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 500; ++t) {
      const auto q = oracle::random_unit(rng);
      const Eigen::Vector3d v(rng() % 7 - 3.0, rng() % 5 - 2.0, 1.5);
      const Quaternion rotated = oracle::mul(oracle::mul(q, {0, v.x(), v.y(), v.z()}), conj(q));
      CHECK((rotation_of(q) * v - rotated.imag()).cwiseAbs().maxCoeff() <= 1e-12);
      CHECK(std::abs(rotated.w) <= 1e-12);
    }
  }
  SUBCASE("lift round trip") {
    std::mt19937_64 rng(14);
    for (int t = 0; t < 500; ++t) {
      const auto q = oracle::random_unit(rng);
      const auto back = quaternion_from_rotation(rotation_of(q));
      CHECK(back.w >= 0.0);
      CHECK(std::min(max_abs_diff(back, q), max_abs_diff(back, -q)) <= 1e-12);
    }
  }
  CHECK_THROWS_AS(rotation_of(Quaternion(2.0)), NotUnit);
}

TEST_CASE("minimal_rotation maps a onto b") {
  std::mt19937_64 rng(15);
  auto check = [](const Eigen::Vector3d& a, const Eigen::Vector3d& b) {
    const Quaternion u = minimal_rotation(a, b);
    CHECK(std::abs(u.norm() - 1.0) <= 1e-12);
    CHECK((rotation_of(u) * a.normalized() - b.normalized()).norm() <= 1e-12);
  };
  for (int t = 0; t < 300; ++t) {
    const Eigen::Vector3d a = oracle::random_quaternion(rng).imag();
    const Eigen::Vector3d b = oracle::random_quaternion(rng).imag();
    check(a, b);
    check(a, a);
    check(a, -a);
  }
  check({1, 0, 0}, {-1, 0, 0});
  check({0, 0, 1}, {0, 0, -1});
}

TEST_CASE("from_axis_angle") {
  const auto q = Quaternion::from_axis_angle({0, 0, 1}, std::numbers::pi / 2);
  CHECK(max_abs_diff(q, Quaternion::k()) <= 1e-15);
  CHECK(is_complex(Quaternion::complex(0.3, -2.0)));
  CHECK_FALSE(is_complex(Quaternion::j()));
}
