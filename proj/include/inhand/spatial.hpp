#pragma once

#include <Eigen/Dense>

#include "inhand/errors.hpp"

namespace inhand {

using Vec2 = Eigen::Vector2d;
using Vec3 = Eigen::Vector3d;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using VecX = Eigen::VectorXd;
using Mat2 = Eigen::Matrix2d;
using Mat3 = Eigen::Matrix3d;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using MatX = Eigen::MatrixXd;
using Mat23 = Eigen::Matrix<double, 2, 3>;
using Mat36 = Eigen::Matrix<double, 3, 6>;
using Mat63 = Eigen::Matrix<double, 6, 3>;
using RowVec2 = Eigen::Matrix<double, 1, 2>;

// 3x3 orthonormal rotation, det +1. Stored as a plain matrix; orthonormality
// is the owner's invariant (checked where it matters, restored by the
// integrator via reorthonormalize()).
using Rot3 = Mat3;

struct Pose {
  Vec3 position = Vec3::Zero();   // [m]
  Rot3 orientation = Rot3::Identity();

  Vec3 apply(const Vec3& p_local) const { return position + orientation * p_local; }
};

struct Twist {
  Vec3 linear = Vec3::Zero();    // [m/s]
  Vec3 angular = Vec3::Zero();   // [rad/s]

  Vec6 stacked() const {
    Vec6 v;
    v << linear, angular;
    return v;
  }
};

// Skew-symmetric cross-product matrix: skew(v) * w == v x w.
Mat3 skew(const Vec3& v);

Rot3 rot_x(double angle);
Rot3 rot_y(double angle);
Rot3 rot_z(double angle);

// R = Rz(zyx[0]) * Ry(zyx[1]) * Rx(zyx[2])  (yaw-pitch-roll order).
Rot3 rot_from_euler_zyx(const Vec3& zyx);

// Inverse of rot_from_euler_zyx. Throws GimbalLock when |cos(pitch)| is
// within 1e-6 of zero.
Vec3 euler_zyx_from_rot(const Rot3& R);

// Convenience for 6-vector poses stored as (position, roll-pitch-yaw):
// same rotation, angles given in reversed component order.
inline Rot3 rot_from_rpy(const Vec3& rpy) {
  return rot_from_euler_zyx(Vec3(rpy.z(), rpy.y(), rpy.x()));
}
inline Vec3 rpy_from_rot(const Rot3& R) {
  const Vec3 zyx = euler_zyx_from_rot(R);
  return Vec3(zyx.z(), zyx.y(), zyx.x());
}

// Maps roll-pitch-yaw rates to the world angular velocity: w = E(rpy) * rpy_dot.
Mat3 rpy_rate_matrix(const Vec3& rpy);

// P = blkdiag(I3, E): maps (p_dot, rpy_dot) to the object twist (v, w).
// Throws NearSingular when |cos(pitch)| < 1e-6.
Mat6 euler_rate_map(const Vec3& rpy);

// Nearest rotation matrix (Frobenius sense) via polar decomposition.
Rot3 reorthonormalize(const Mat3& R);

// Max deviation from orthonormality / unit determinant, for invariant checks.
double rotation_defect(const Mat3& R);

}  // namespace inhand
