#include "inhand/zcbf.hpp"

#include <cmath>
#include <stdexcept>

namespace inhand {

ClassKappa::ClassKappa(double coeff, int power) : coeff_(coeff), power_(power) {
  if (coeff <= 0.0 || power < 1 || power % 2 == 0) {
    throw std::invalid_argument("ClassKappa requires coeff > 0 and odd power >= 1");
  }
}

double ClassKappa::operator()(double h) const {
  double p = 1.0;
  for (int k = 0; k < power_; ++k) p *= h;
  return coeff_ * p;
}

double ClassKappa::deriv(double h) const {
  double p = 1.0;
  for (int k = 0; k < power_ - 1; ++k) p *= h;
  return coeff_ * power_ * p;
}

const char* family_name(ConstraintFamily family) {
  switch (family) {
    case ConstraintFamily::Slip: return "slip";
    case ConstraintFamily::Joint: return "joint";
    case ConstraintFamily::Rolling: return "rolling";
    case ConstraintFamily::Actuator: return "actuator";
  }
  return "unknown";
}

double barrier_value(const BarrierSpec& spec) {
  return spec.h_dot + spec.alpha1(spec.h);
}

bool in_barrier_set(const BarrierSpec& spec) {
  return spec.h >= 0.0 && barrier_value(spec) >= 0.0;
}

BarrierRow constraint_row(const BarrierSpec& spec, double lf_b, const VecX& lg_b,
                          ConstraintFamily family) {
  BarrierRow out;
  out.row = lg_b;
  const double B = barrier_value(spec);
  out.rhs = -lf_b - spec.alpha2(B);
  out.family = family;
  out.h = spec.h;
  out.h_dot = spec.h_dot;
  out.B = B;
  return out;
}

BarrierRow second_order_row(const BarrierSpec& spec, double h_ddot_drift,
                            const VecX& h_ddot_u_row, ConstraintFamily family) {
  const double lf_b = h_ddot_drift + spec.alpha1.deriv(spec.h) * spec.h_dot;
  return constraint_row(spec, lf_b, h_ddot_u_row, family);
}

}  // namespace inhand
