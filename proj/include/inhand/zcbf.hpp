#pragma once

#include "inhand/spatial.hpp"

namespace inhand {

// Extended class-K function restricted to odd power laws alpha(h) = c * h^p,
// c > 0 and p an odd positive integer: strictly increasing with alpha(0) = 0.
class ClassKappa {
 public:
  ClassKappa() = default;
  ClassKappa(double coeff, int power);

  double operator()(double h) const;
  double deriv(double h) const;

  double coeff() const { return coeff_; }
  int power() const { return power_; }

 private:
  double coeff_ = 1.0;
  int power_ = 3;
};

enum class ConstraintFamily { Slip, Joint, Rolling, Actuator };

const char* family_name(ConstraintFamily family);

// Value-level description of one relative-degree-two constraint h at the
// current state, together with its staggered class-K functions.
struct BarrierSpec {
  double h = 0.0;
  double h_dot = 0.0;
  ClassKappa alpha1;
  ClassKappa alpha2;
};

// B = h_dot + alpha1(h).
double barrier_value(const BarrierSpec& spec);

// Membership in E = {h >= 0}  intersect  {B >= 0}.
bool in_barrier_set(const BarrierSpec& spec);

// One torque-space halfspace row: any u with row . u >= rhs satisfies the
// barrier condition L_f B + L_g B u + alpha2(B) >= 0 at this state.
struct BarrierRow {
  VecX row;
  double rhs = 0.0;
  ConstraintFamily family = ConstraintFamily::Joint;
  bool strict = false;
  double h = 0.0;
  double h_dot = 0.0;
  double B = 0.0;
};

BarrierRow constraint_row(const BarrierSpec& spec, double lf_b, const VecX& lg_b,
                          ConstraintFamily family);

// Convenience for families that supply the second derivative of h split as
// h_ddot = drift + u_row . u: forms L_f B = drift + alpha1'(h) h_dot and
// L_g B = u_row, then delegates to constraint_row.
BarrierRow second_order_row(const BarrierSpec& spec, double h_ddot_drift,
                            const VecX& h_ddot_u_row, ConstraintFamily family);

}  // namespace inhand
