#include "inhand/spatial.hpp"

#include <cmath>

namespace inhand {

Mat3 skew(const Vec3& v) {
  Mat3 m;
  m <<    0.0, -v.z(),  v.y(),
        v.z(),    0.0, -v.x(),
       -v.y(),  v.x(),    0.0;
  return m;
}

Rot3 rot_x(double angle) {
  return Eigen::AngleAxisd(angle, Vec3::UnitX()).toRotationMatrix();
}

Rot3 rot_y(double angle) {
  return Eigen::AngleAxisd(angle, Vec3::UnitY()).toRotationMatrix();
}

Rot3 rot_z(double angle) {
  return Eigen::AngleAxisd(angle, Vec3::UnitZ()).toRotationMatrix();
}

Rot3 rot_from_euler_zyx(const Vec3& zyx) {
  return rot_z(zyx(0)) * rot_y(zyx(1)) * rot_x(zyx(2));
}

Vec3 euler_zyx_from_rot(const Rot3& R) {
  // R(2,0) = -sin(pitch); extraction degenerates when cos(pitch) ~ 0.
  const double sp = -R(2, 0);
  if (std::abs(std::abs(sp) - 1.0) < 1e-12 ||
      std::sqrt(R(0, 0) * R(0, 0) + R(1, 0) * R(1, 0)) < 1e-6) {
    throw GimbalLock("pitch within 1e-6 of +/- pi/2");
  }
  const double pitch = std::asin(sp);
  const double yaw = std::atan2(R(1, 0), R(0, 0));
  const double roll = std::atan2(R(2, 1), R(2, 2));
  return Vec3(yaw, pitch, roll);
}

Mat3 rpy_rate_matrix(const Vec3& rpy) {
  // w = yaw_dot * z + pitch_dot * Rz*y + roll_dot * Rz*Ry*x.
  const double pitch = rpy(1), yaw = rpy(2);
  Mat3 E;
  E.col(0) = rot_z(yaw) * rot_y(pitch) * Vec3::UnitX();
  E.col(1) = rot_z(yaw) * Vec3::UnitY();
  E.col(2) = Vec3::UnitZ();
  return E;
}

Mat6 euler_rate_map(const Vec3& rpy) {
  if (std::abs(std::cos(rpy(1))) < 1e-6) {
    throw NearSingular("euler_rate_map: |cos(pitch)| < 1e-6");
  }
  Mat6 P = Mat6::Identity();
  P.block<3, 3>(3, 3) = rpy_rate_matrix(rpy);
  return P;
}

Rot3 reorthonormalize(const Mat3& R) {
  Eigen::JacobiSVD<Mat3> svd(R, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 Q = svd.matrixU() * svd.matrixV().transpose();
  if (Q.determinant() < 0.0) {
    Mat3 flip = Mat3::Identity();
    flip(2, 2) = -1.0;
    Q = svd.matrixU() * flip * svd.matrixV().transpose();
  }
  return Q;
}

double rotation_defect(const Mat3& R) {
  const double ortho = (R * R.transpose() - Mat3::Identity()).cwiseAbs().maxCoeff();
  const double det = std::abs(R.determinant() - 1.0);
  return std::max(ortho, det);
}

}  // namespace inhand
