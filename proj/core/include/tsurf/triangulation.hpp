#pragma once

#include <array>
#include <map>
#include <vector>

#include "tsurf/surface.hpp"

namespace tsurf {

struct TriEdgeRef {
  int tri = -1;
  int edge = -1;  // edge e spans corners e and e+1 (mod 3)
  bool valid() const { return tri >= 0; }
  bool operator==(const TriEdgeRef& o) const = default;
  bool operator<(const TriEdgeRef& o) const {
    return tri != o.tri ? tri < o.tri : edge < o.edge;
  }
};

struct Triangle {
  int polygon = -1;
  std::array<int, 3> corner{};   // polygon vertex indices, CCW
  std::array<Vec2, 3> pos{};     // polygon-frame coordinates
  std::array<int, 3> cls{};      // cone class per corner
};

// Edge-to-edge triangulation of a translation surface: each polygon is
// ear-clipped from its own vertices (no interior points; subdivision vertices
// on sides are honest corners), every polygon side is exactly one triangle
// edge, and every triangle edge has a partner (interior chord or glued side).
class Triangulation {
 public:
  explicit Triangulation(const TranslationSurface& surface);

  const TranslationSurface& surface() const { return *surface_; }
  const std::vector<Triangle>& triangles() const { return tris_; }
  const Triangle& triangle(int t) const { return tris_[t]; }
  int triangle_count() const { return static_cast<int>(tris_.size()); }

  TriEdgeRef partner(TriEdgeRef e) const { return partner_[e.tri][e.edge]; }
  // The polygon side this edge lies on, or an invalid SideRef for an
  // interior chord.
  SideRef side_of(TriEdgeRef e) const { return on_side_[e.tri][e.edge]; }
  TriEdgeRef edge_of_side(SideRef s) const;

  Vec2 corner_pos(TriEdgeRef e) const { return tris_[e.tri].pos[e.edge]; }
  // Development offset of the partner triangle when crossing edge e of a
  // triangle developed at `offset`.
  Vec2 transition_offset(TriEdgeRef e, const Vec2& offset) const;

 private:
  const TranslationSurface* surface_;
  std::vector<Triangle> tris_;
  std::vector<std::array<TriEdgeRef, 3>> partner_;
  std::vector<std::array<SideRef, 3>> on_side_;
  std::map<SideRef, TriEdgeRef> side_edge_;
};

class TriangulationFailure : public std::runtime_error {
 public:
  explicit TriangulationFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tsurf
