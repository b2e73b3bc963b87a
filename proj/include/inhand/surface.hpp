#pragma once

#include <memory>
#include <string>

#include "inhand/spatial.hpp"

namespace inhand {

// First/second fundamental-form quantities of an orthogonally parameterized
// surface: metric M (2x2 diagonal), curvature K (2x2), torsion T (1x2).
struct GeometricTensors {
  Mat2 M = Mat2::Zero();
  Mat2 K = Mat2::Zero();
  RowVec2 T = RowVec2::Zero();
};

struct ChartBounds {
  double a_min = 0.0, a_max = 0.0;
  double b_min = 0.0, b_max = 0.0;

  bool contains(const Vec2& xi, double tol = 0.0) const {
    return xi(0) >= a_min - tol && xi(0) <= a_max + tol &&
           xi(1) >= b_min - tol && xi(1) <= b_max + tol;
  }
};

// A parameterized contact surface patch c(xi) in body coordinates, with
// analytic partials. Charts are immutable; every evaluation is re-entrant.
// Convention: the unit normal c_a x c_b / |.| points outward from the body.
class SurfaceChart {
 public:
  virtual ~SurfaceChart() = default;

  virtual Vec3 c(const Vec2& xi) const = 0;
  virtual Vec3 c_a(const Vec2& xi) const = 0;
  virtual Vec3 c_b(const Vec2& xi) const = 0;

  // Analytic M/K/T and their per-coordinate field derivatives.
  virtual GeometricTensors tensors_at(const Vec2& xi) const = 0;
  virtual GeometricTensors tensors_da(const Vec2& xi) const = 0;
  virtual GeometricTensors tensors_db(const Vec2& xi) const = 0;

  virtual const ChartBounds& bounds() const = 0;
  virtual std::string name() const = 0;

  void require_in_bounds(const Vec2& xi) const;
};

// Gauss frame at xi: columns (c_a/|c_a|, c_b/|c_b|, n), n = c_a x c_b / |.|.
// Throws OutOfChart / DegenerateChart.
Rot3 gauss_frame(const SurfaceChart& chart, const Vec2& xi);

// Bounds-checked tensor evaluation (same checks as gauss_frame).
GeometricTensors tensors(const SurfaceChart& chart, const Vec2& xi);

// Time derivative of the Gauss frame columns under coordinate rates xi_dot,
// expressed through M/K/T only (valid for orthogonal charts).
Mat3 gauss_frame_rate(const GeometricTensors& g, const Rot3& frame, const Vec2& xi_dot);

struct ChartReport {
  double max_orthogonality = 0.0;  // max |c_a . c_b| over the sample grid
  double min_norm_a = 0.0;
  double min_norm_b = 0.0;
  bool pass = false;
};

// Samples a midpoint grid over the open chart interior and checks the
// orthogonality assumption and tangent non-degeneracy.
ChartReport validate_chart(const SurfaceChart& chart, int grid_n,
                           double ortho_tol = 1e-9, double norm_tol = 1e-12);

// Hemisphere fingertip patch of radius R:
//   c(a,b) = R * (-cos a cos b, sin a, -cos a sin b),
// covering the dome z >= 0 for a in (-pi/2, pi/2), b in (-pi, 0).
class HemisphereChart final : public SurfaceChart {
 public:
  explicit HemisphereChart(double radius);

  Vec3 c(const Vec2& xi) const override;
  Vec3 c_a(const Vec2& xi) const override;
  Vec3 c_b(const Vec2& xi) const override;
  GeometricTensors tensors_at(const Vec2& xi) const override;
  GeometricTensors tensors_da(const Vec2& xi) const override;
  GeometricTensors tensors_db(const Vec2& xi) const override;
  const ChartBounds& bounds() const override { return bounds_; }
  std::string name() const override { return "hemisphere"; }

  double radius() const { return radius_; }

  // Chart coordinates of a unit direction on the dome (d_z > 0).
  // Throws OutOfChart if the direction lies outside the covered dome.
  Vec2 invert_direction(const Vec3& d) const;

 private:
  double radius_;
  ChartBounds bounds_;
};

// Flat face patch: c(a,b) = origin + a*t1 + b*t2 with unit orthogonal
// tangents; K and T vanish identically. t1 x t2 must be the outward normal.
class PlaneChart final : public SurfaceChart {
 public:
  PlaneChart(const Vec3& origin, const Vec3& t1, const Vec3& t2, const ChartBounds& bounds);

  Vec3 c(const Vec2& xi) const override;
  Vec3 c_a(const Vec2&) const override { return t1_; }
  Vec3 c_b(const Vec2&) const override { return t2_; }
  GeometricTensors tensors_at(const Vec2& xi) const override;
  GeometricTensors tensors_da(const Vec2&) const override { return {}; }
  GeometricTensors tensors_db(const Vec2&) const override { return {}; }
  const ChartBounds& bounds() const override { return bounds_; }
  std::string name() const override { return "plane"; }

  const Vec3& origin() const { return origin_; }
  const Vec3& normal() const { return normal_; }

  // Chart coordinates of a body-frame point projected onto the face plane.
  Vec2 invert_point(const Vec3& p_body) const;

 private:
  Vec3 origin_, t1_, t2_, normal_;
  ChartBounds bounds_;
};

}  // namespace inhand
