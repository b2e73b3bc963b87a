#pragma once

#include "inhand/spatial.hpp"
#include "inhand/surface.hpp"

namespace inhand {

// Local coordinates of one rolling contact: fingertip chart, object chart,
// and the relative tangent angle psi between the two Gauss frames.
struct ContactState {
  Vec2 xi_cf = Vec2::Zero();
  Vec2 xi_co = Vec2::Zero();
  double psi = 0.0;
};

struct ContactRates {
  Vec2 xi_cf_dot = Vec2::Zero();
  Vec2 xi_co_dot = Vec2::Zero();
  double psi_dot = 0.0;
};

// The 2x2 relative-orientation matrix of the two tangent frames. Note this
// is a reflection (det = -1): the frames share the normal with opposite
// sign, so the tangent change of basis is orientation-reversing.
Mat2 rotation_psi(double psi);
Mat2 rotation_psi_deriv(double psi);

struct HMatrices {
  Mat23 H_cf;
  Mat23 H_co;
};

// Contact-kinematics coefficient matrices:
//   H_cf = M_cf^-1 (K_cf + R_psi K_co R_psi)^-1 E,
//   H_co = M_co^-1 R_psi (K_cf + R_psi K_co R_psi)^-1 E,
// with E = [0 -1 0; 1 0 0]. Throws FlatOnFlat when the relative curvature
// is numerically singular (e.g. plane on plane).
HMatrices h_matrices(const GeometricTensors& finger, const GeometricTensors& object,
                     double psi);

// R_cp = (R_pf * R_fc)^T: maps inertial vectors into the contact frame whose
// z-axis is the fingertip outward normal.
Rot3 contact_frame(const SurfaceChart& chart, const Vec2& xi_cf, const Rot3& R_pf);

// Coordinate rates under rolling:
//   xi_cf_dot = H_cf R_cp (w_f - w_o),  xi_co_dot = H_co R_cp (w_f - w_o),
//   psi_dot   = T_cf M_cf xi_cf_dot + T_co M_co xi_co_dot,
// with w_f, w_o the inertial angular velocities of fingertip and object.
ContactRates contact_rates(const ContactState& state, const Vec3& w_f, const Vec3& w_o,
                           const SurfaceChart& finger, const SurfaceChart& object,
                           const Rot3& R_pf);

// Split of the fingertip-coordinate acceleration into a velocity drift and a
// linear map on relative angular acceleration:
//   xi_cf_ddot = drift + accel_map * (alpha_f - alpha_o),
// drift = d/dt[H_cf R_cp] (w_f - w_o) with the bracket differentiated through
// the tensor fields and the Gauss frame analytically.
struct ContactAccelTerms {
  Vec2 drift = Vec2::Zero();
  Mat23 accel_map = Mat23::Zero();
  ContactRates rates;
};

ContactAccelTerms contact_accel_terms(const ContactState& state, const Vec3& w_f,
                                      const Vec3& w_o, const SurfaceChart& finger,
                                      const SurfaceChart& object, const Rot3& R_pf);

// Relative tangent angle from the world-frame Gauss frames of the two
// surfaces in contact (z-axes anti-aligned): cos psi = t_oa . t_fa,
// sin psi = -t_oa . t_fb.
double psi_from_frames(const Rot3& world_frame_f, const Rot3& world_frame_o);

}  // namespace inhand
