#include "inhand/surface.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace inhand {

namespace {
constexpr double kDegenerateNorm = 1e-12;
constexpr double kBoundsTol = 1e-9;
}  // namespace

void SurfaceChart::require_in_bounds(const Vec2& xi) const {
  if (!bounds().contains(xi, kBoundsTol)) {
    throw OutOfChart(name() + ": xi = (" + std::to_string(xi(0)) + ", " +
                     std::to_string(xi(1)) + ") outside chart bounds");
  }
}

Rot3 gauss_frame(const SurfaceChart& chart, const Vec2& xi) {
  chart.require_in_bounds(xi);
  const Vec3 ca = chart.c_a(xi);
  const Vec3 cb = chart.c_b(xi);
  const double na = ca.norm();
  const double nb = cb.norm();
  if (na < kDegenerateNorm || nb < kDegenerateNorm) {
    throw DegenerateChart(chart.name() + ": tangent norm below 1e-12");
  }
  const Vec3 cross = ca.cross(cb);
  const double nc = cross.norm();
  if (nc < kDegenerateNorm) {
    throw DegenerateChart(chart.name() + ": tangents nearly parallel");
  }
  Rot3 R;
  R.col(0) = ca / na;
  R.col(1) = cb / nb;
  R.col(2) = cross / nc;
  return R;
}

GeometricTensors tensors(const SurfaceChart& chart, const Vec2& xi) {
  chart.require_in_bounds(xi);
  const double na = chart.c_a(xi).norm();
  const double nb = chart.c_b(xi).norm();
  if (na < kDegenerateNorm || nb < kDegenerateNorm) {
    throw DegenerateChart(chart.name() + ": tangent norm below 1e-12");
  }
  return chart.tensors_at(xi);
}

Mat3 gauss_frame_rate(const GeometricTensors& g, const Rot3& frame, const Vec2& xi_dot) {
  const Vec3 r1 = frame.col(0), r2 = frame.col(1), n = frame.col(2);
  const double sa = g.M(0, 0) * xi_dot(0);  // |c_a| * a_dot
  const double sb = g.M(1, 1) * xi_dot(1);  // |c_b| * b_dot
  // Column rates follow from the structure equations of the orthogonal frame:
  //   d r1 = |c_a|(T1 r2 - K11 n) da + |c_b|(T2 r2 - K12 n) db, etc.
  Mat3 rate;
  rate.col(0) = (g.T(0) * sa + g.T(1) * sb) * r2 - (g.K(0, 0) * sa + g.K(0, 1) * sb) * n;
  rate.col(1) = -(g.T(0) * sa + g.T(1) * sb) * r1 - (g.K(1, 0) * sa + g.K(1, 1) * sb) * n;
  rate.col(2) = (g.K(0, 0) * sa + g.K(0, 1) * sb) * r1 + (g.K(1, 0) * sa + g.K(1, 1) * sb) * r2;
  return rate;
}

ChartReport validate_chart(const SurfaceChart& chart, int grid_n,
                           double ortho_tol, double norm_tol) {
  ChartReport report;
  if (grid_n < 2) {
    report.pass = false;
    return report;
  }
  const ChartBounds& bb = chart.bounds();
  const double da = (bb.a_max - bb.a_min) / grid_n;
  const double db = (bb.b_max - bb.b_min) / grid_n;
  report.min_norm_a = std::numeric_limits<double>::infinity();
  report.min_norm_b = std::numeric_limits<double>::infinity();
  // Midpoint grid: stays on the open interior where tangents must be regular.
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) {
      const Vec2 xi(bb.a_min + (i + 0.5) * da, bb.b_min + (j + 0.5) * db);
      const Vec3 ca = chart.c_a(xi);
      const Vec3 cb = chart.c_b(xi);
      report.max_orthogonality = std::max(report.max_orthogonality, std::abs(ca.dot(cb)));
      report.min_norm_a = std::min(report.min_norm_a, ca.norm());
      report.min_norm_b = std::min(report.min_norm_b, cb.norm());
    }
  }
  report.pass = report.max_orthogonality <= ortho_tol &&
                report.min_norm_a > norm_tol && report.min_norm_b > norm_tol;
  return report;
}

HemisphereChart::HemisphereChart(double radius) : radius_(radius) {
  constexpr double pi = std::numbers::pi;
  bounds_ = ChartBounds{-pi / 2.0, pi / 2.0, -pi, 0.0};
}

Vec3 HemisphereChart::c(const Vec2& xi) const {
  const double a = xi(0), b = xi(1);
  return radius_ * Vec3(-std::cos(a) * std::cos(b), std::sin(a), -std::cos(a) * std::sin(b));
}

Vec3 HemisphereChart::c_a(const Vec2& xi) const {
  const double a = xi(0), b = xi(1);
  return radius_ * Vec3(std::sin(a) * std::cos(b), std::cos(a), std::sin(a) * std::sin(b));
}

Vec3 HemisphereChart::c_b(const Vec2& xi) const {
  const double a = xi(0), b = xi(1);
  return radius_ * Vec3(std::cos(a) * std::sin(b), 0.0, -std::cos(a) * std::cos(b));
}

GeometricTensors HemisphereChart::tensors_at(const Vec2& xi) const {
  const double a = xi(0);
  GeometricTensors g;
  g.M = Vec2(radius_, radius_ * std::cos(a)).asDiagonal();
  g.K = Mat2::Identity() / radius_;
  g.T = RowVec2(0.0, -std::tan(a) / radius_);
  return g;
}

GeometricTensors HemisphereChart::tensors_da(const Vec2& xi) const {
  const double a = xi(0);
  GeometricTensors g;
  g.M = Vec2(0.0, -radius_ * std::sin(a)).asDiagonal();
  g.K = Mat2::Zero();
  const double sec = 1.0 / std::cos(a);
  g.T = RowVec2(0.0, -sec * sec / radius_);
  return g;
}

GeometricTensors HemisphereChart::tensors_db(const Vec2&) const {
  return {};
}

Vec2 HemisphereChart::invert_direction(const Vec3& d) const {
  if (d.z() <= 0.0) {
    throw OutOfChart("hemisphere: direction outside covered dome (z <= 0)");
  }
  // c/R = (-cos a cos b, sin a, -cos a sin b): a from the y component,
  // b from the x/z pair.
  const double a = std::asin(std::clamp(d.y(), -1.0, 1.0));
  const double b = std::atan2(-d.z(), -d.x());
  const Vec2 xi(a, b);
  require_in_bounds(xi);
  return xi;
}

PlaneChart::PlaneChart(const Vec3& origin, const Vec3& t1, const Vec3& t2,
                       const ChartBounds& bounds)
    : origin_(origin), t1_(t1.normalized()), t2_(t2.normalized()), bounds_(bounds) {
  normal_ = t1_.cross(t2_);
}

Vec3 PlaneChart::c(const Vec2& xi) const {
  return origin_ + xi(0) * t1_ + xi(1) * t2_;
}

GeometricTensors PlaneChart::tensors_at(const Vec2&) const {
  GeometricTensors g;
  g.M = Mat2::Identity();
  return g;
}

Vec2 PlaneChart::invert_point(const Vec3& p_body) const {
  const Vec3 d = p_body - origin_;
  return Vec2(d.dot(t1_), d.dot(t2_));
}

}  // namespace inhand
