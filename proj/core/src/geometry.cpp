#include "tsurf/geometry.hpp"

#include <algorithm>
#include <numbers>

namespace tsurf {

namespace {

bool segments_intersect(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d, double eps) {
  const Vec2 ab = b - a;
  const Vec2 cd = d - c;
  const double d1 = cross(ab, c - a);
  const double d2 = cross(ab, d - a);
  const double d3 = cross(cd, a - c);
  const double d4 = cross(cd, b - c);
  if (((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps)) &&
      ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps))) {
    return true;
  }
  return false;
}

}  // namespace

Vec2 Polygon::side_vector(std::size_t i) const {
  if (i >= verts_.size()) throw InvalidParameter("side index out of range");
  return verts_[(i + 1) % verts_.size()] - verts_[i];
}

double Polygon::interior_angle(std::size_t i) const {
  const std::size_t k = verts_.size();
  const Vec2 in = side_vector((i + k - 1) % k);
  const Vec2 out = side_vector(i % k);
  // Exterior turn in (-pi, pi]; interior = pi - turn.
  const double turn = std::atan2(cross(in, out), dot(in, out));
  return std::numbers::pi - turn;
}

double Polygon::signed_area() const {
  double twice = 0.0;
  for (std::size_t i = 0; i < verts_.size(); ++i) {
    twice += cross(verts_[i], verts_[(i + 1) % verts_.size()]);
  }
  return twice / 2.0;
}

double Polygon::min_side_length() const {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < verts_.size(); ++i) m = std::min(m, side_length(i));
  return m;
}

std::vector<std::string> Polygon::check(const Tolerance& tol) const {
  std::vector<std::string> issues;
  const std::size_t k = verts_.size();
  if (k < 3) {
    issues.push_back("polygon has fewer than 3 vertices");
    return issues;
  }
  double scale = 0.0;
  for (const Vec2& v : verts_) {
    if (!v.finite()) {
      issues.push_back("polygon has a non-finite vertex");
      return issues;
    }
    scale = std::max({scale, std::abs(v.x), std::abs(v.y)});
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (tol.near_zero(side_length(i), scale)) {
      issues.push_back("zero-length side " + std::to_string(i));
    }
  }
  if (!issues.empty()) return issues;

  if (signed_area() <= 0.0) {
    issues.push_back("polygon is not counterclockwise (signed area <= 0)");
  }
  for (std::size_t i = 0; i < k; ++i) {
    const Vec2 in = side_vector((i + k - 1) % k);
    const Vec2 out = side_vector(i);
    // Reversal: consecutive sides antiparallel (interior angle ~0 or ~2pi).
    if (tol.near_zero(cross(in, out), in.norm() * out.norm()) && dot(in, out) < 0.0) {
      issues.push_back("reversal at vertex " + std::to_string(i));
    }
  }
  // Simplicity: no two non-adjacent sides properly cross.
  const double eps = tol.eps_abs * std::max(1.0, scale);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (j == i || (j + 1) % k == i || (i + 1) % k == j) continue;
      if (segments_intersect(verts_[i], verts_[(i + 1) % k], verts_[j], verts_[(j + 1) % k],
                             eps)) {
        issues.push_back("sides " + std::to_string(i) + " and " + std::to_string(j) +
                         " intersect");
      }
    }
  }
  return issues;
}

Polygon regular_polygon(int k, double side) {
  if (k < 3) throw InvalidParameter("regular_polygon requires k >= 3");
  if (!(side > 0.0)) throw InvalidParameter("regular_polygon requires side > 0");
  std::vector<Vec2> verts;
  verts.reserve(static_cast<std::size_t>(k));
  Vec2 p{0.0, 0.0};
  for (int j = 0; j < k; ++j) {
    verts.push_back(p);
    const double theta = 2.0 * std::numbers::pi * j / k;
    p += Vec2{side * std::cos(theta), side * std::sin(theta)};
  }
  return Polygon(std::move(verts));
}

}  // namespace tsurf
