#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsurf {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  Vec2& operator-=(const Vec2& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }

  double norm() const { return std::hypot(x, y); }
  double norm_sq() const { return x * x + y * y; }
  bool finite() const { return std::isfinite(x) && std::isfinite(y); }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }
inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
// Rotate by -90 degrees: for a CCW polygon this turns a side direction into
// the outward normal.
inline Vec2 rot_cw(const Vec2& v) { return {v.y, -v.x}; }
inline Vec2 rot_ccw(const Vec2& v) { return {-v.y, v.x}; }

struct Tolerance {
  double eps_abs = 1e-9;
  double eps_rel = 1e-12;

  bool near(double a, double b) const {
    return std::abs(a - b) <= eps_abs + eps_rel * std::max(std::abs(a), std::abs(b));
  }
  bool near_zero(double a, double scale = 1.0) const {
    return std::abs(a) <= eps_abs + eps_rel * std::abs(scale);
  }
  bool near_vec(const Vec2& a, const Vec2& b) const { return near(a.x, b.x) && near(a.y, b.y); }
};

inline bool approx_eq(double a, double b, const Tolerance& tol = Tolerance{}) {
  return tol.near(a, b);
}

class InvalidParameter : public std::runtime_error {
 public:
  explicit InvalidParameter(const std::string& what) : std::runtime_error(what) {}
};

// A planar polygon given by its CCW vertex cycle. Vertices with interior
// angle exactly pi (subdivision points inserted on a side) are legal; a
// reversal (angle ~0 or ~2pi) is not.
class Polygon {
 public:
  Polygon() = default;
  explicit Polygon(std::vector<Vec2> vertices) : verts_(std::move(vertices)) {}

  std::size_t size() const { return verts_.size(); }
  const Vec2& vertex(std::size_t i) const { return verts_[i % verts_.size()]; }
  const std::vector<Vec2>& vertices() const { return verts_; }

  Vec2 side_vector(std::size_t i) const;
  double side_length(std::size_t i) const { return side_vector(i).norm(); }
  // Interior angle at vertex i, in (0, 2*pi); pi for a straight (subdivision)
  // vertex.
  double interior_angle(std::size_t i) const;
  double signed_area() const;
  double area() const { return signed_area(); }
  double min_side_length() const;

  // Empty when the polygon is usable (>= 3 vertices, finite, CCW, simple, no
  // zero-length sides, no reversals). Messages otherwise.
  std::vector<std::string> check(const Tolerance& tol = Tolerance{}) const;

 private:
  std::vector<Vec2> verts_;
};

Polygon regular_polygon(int k, double side);

}  // namespace tsurf
