#include "inhand/rolling.hpp"

#include <cmath>

namespace inhand {

namespace {

const Mat23 kAngularSelect = [] {
  Mat23 e;
  e << 0.0, -1.0, 0.0,
       1.0,  0.0, 0.0;
  return e;
}();

Mat2 relative_curvature(const GeometricTensors& finger, const GeometricTensors& object,
                        double psi) {
  const Mat2 Rpsi = rotation_psi(psi);
  return finger.K + Rpsi * object.K * Rpsi;
}

void require_invertible(const Mat2& W) {
  Eigen::JacobiSVD<Mat2> svd(W);
  const double smin = svd.singularValues()(1);
  const double smax = svd.singularValues()(0);
  if (smin <= 0.0 || smax / smin > 1e10) {
    throw FlatOnFlat("relative curvature tensor is singular (unsupported contact pair)");
  }
}

}  // namespace

Mat2 rotation_psi(double psi) {
  Mat2 R;
  R << std::cos(psi), -std::sin(psi),
      -std::sin(psi), -std::cos(psi);
  return R;
}

Mat2 rotation_psi_deriv(double psi) {
  Mat2 R;
  R << -std::sin(psi), -std::cos(psi),
       -std::cos(psi),  std::sin(psi);
  return R;
}

HMatrices h_matrices(const GeometricTensors& finger, const GeometricTensors& object,
                     double psi) {
  const Mat2 W = relative_curvature(finger, object, psi);
  require_invertible(W);
  const Mat2 Winv = W.inverse();
  const Mat2 Rpsi = rotation_psi(psi);
  HMatrices h;
  h.H_cf = finger.M.inverse() * Winv * kAngularSelect;
  h.H_co = object.M.inverse() * Rpsi * Winv * kAngularSelect;
  return h;
}

Rot3 contact_frame(const SurfaceChart& chart, const Vec2& xi_cf, const Rot3& R_pf) {
  return (R_pf * gauss_frame(chart, xi_cf)).transpose();
}

ContactRates contact_rates(const ContactState& state, const Vec3& w_f, const Vec3& w_o,
                           const SurfaceChart& finger, const SurfaceChart& object,
                           const Rot3& R_pf) {
  const GeometricTensors gf = tensors(finger, state.xi_cf);
  const GeometricTensors go = tensors(object, state.xi_co);
  const HMatrices h = h_matrices(gf, go, state.psi);
  const Rot3 R_cp = contact_frame(finger, state.xi_cf, R_pf);
  const Vec3 w_rel_c = R_cp * (w_f - w_o);
  ContactRates rates;
  rates.xi_cf_dot = h.H_cf * w_rel_c;
  rates.xi_co_dot = h.H_co * w_rel_c;
  rates.psi_dot = gf.T * gf.M * rates.xi_cf_dot + go.T * go.M * rates.xi_co_dot;
  return rates;
}

ContactAccelTerms contact_accel_terms(const ContactState& state, const Vec3& w_f,
                                      const Vec3& w_o, const SurfaceChart& finger,
                                      const SurfaceChart& object, const Rot3& R_pf) {
  const GeometricTensors gf = tensors(finger, state.xi_cf);
  const GeometricTensors go = tensors(object, state.xi_co);
  const Mat2 Rpsi = rotation_psi(state.psi);
  const Mat2 W = relative_curvature(gf, go, state.psi);
  require_invertible(W);
  const Mat2 Winv = W.inverse();
  const Mat2 Minv = gf.M.inverse();
  const Mat23 H_cf = Minv * Winv * kAngularSelect;

  const Rot3 R_fc = gauss_frame(finger, state.xi_cf);
  const Rot3 R_cp = (R_pf * R_fc).transpose();

  ContactAccelTerms out;
  out.rates.xi_cf_dot = H_cf * (R_cp * (w_f - w_o));
  const Mat23 H_co = go.M.inverse() * Rpsi * Winv * kAngularSelect;
  out.rates.xi_co_dot = H_co * (R_cp * (w_f - w_o));
  out.rates.psi_dot = gf.T * gf.M * out.rates.xi_cf_dot + go.T * go.M * out.rates.xi_co_dot;

  // Chain rule through the tensor fields along the coordinate rates.
  const GeometricTensors gf_da = finger.tensors_da(state.xi_cf);
  const GeometricTensors gf_db = finger.tensors_db(state.xi_cf);
  const GeometricTensors go_da = object.tensors_da(state.xi_co);
  const GeometricTensors go_db = object.tensors_db(state.xi_co);
  const Mat2 M_dot = gf_da.M * out.rates.xi_cf_dot(0) + gf_db.M * out.rates.xi_cf_dot(1);
  const Mat2 Kf_dot = gf_da.K * out.rates.xi_cf_dot(0) + gf_db.K * out.rates.xi_cf_dot(1);
  const Mat2 Ko_dot = go_da.K * out.rates.xi_co_dot(0) + go_db.K * out.rates.xi_co_dot(1);
  const Mat2 Rpsi_dot = rotation_psi_deriv(state.psi) * out.rates.psi_dot;
  const Mat2 W_dot =
      Kf_dot + Rpsi_dot * go.K * Rpsi + Rpsi * Ko_dot * Rpsi + Rpsi * go.K * Rpsi_dot;
  const Mat23 H_dot =
      -Minv * M_dot * Minv * Winv * kAngularSelect - Minv * Winv * W_dot * Winv * kAngularSelect;

  const Mat3 R_fc_dot = gauss_frame_rate(gf, R_fc, out.rates.xi_cf_dot);
  const Mat3 R_cp_dot = R_fc_dot.transpose() * R_pf.transpose() - R_cp * skew(w_f);

  out.drift = (H_dot * R_cp + H_cf * R_cp_dot) * (w_f - w_o);
  out.accel_map = H_cf * R_cp;
  return out;
}

double psi_from_frames(const Rot3& world_frame_f, const Rot3& world_frame_o) {
  const Vec3 t_oa = world_frame_o.col(0);
  return std::atan2(-t_oa.dot(world_frame_f.col(1)), t_oa.dot(world_frame_f.col(0)));
}

}  // namespace inhand
