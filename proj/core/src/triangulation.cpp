#include "tsurf/triangulation.hpp"

#include <algorithm>
#include <cmath>

namespace tsurf {

namespace {

bool point_in_triangle_closed(const Vec2& p, const Vec2& a, const Vec2& b, const Vec2& c,
                              double eps) {
  const double d1 = cross(b - a, p - a);
  const double d2 = cross(c - b, p - b);
  const double d3 = cross(a - c, p - c);
  return d1 >= -eps && d2 >= -eps && d3 >= -eps;
}

// Ear clipping over polygon vertex indices. Straight (angle pi) vertices are
// never clipped directly; they are absorbed once their neighbors go.
std::vector<std::array<int, 3>> ear_clip(const Polygon& poly, double eps) {
  const int k = static_cast<int>(poly.size());
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  std::vector<std::array<int, 3>> tris;

  int guard = 0;
  while (idx.size() > 3) {
    if (++guard > 4 * k * k) throw TriangulationFailure("ear clipping did not terminate");
    bool clipped = false;
    const int m = static_cast<int>(idx.size());
    for (int i = 0; i < m; ++i) {
      const int ia = idx[(i + m - 1) % m];
      const int ib = idx[i];
      const int ic = idx[(i + 1) % m];
      const Vec2& a = poly.vertex(ia);
      const Vec2& b = poly.vertex(ib);
      const Vec2& c = poly.vertex(ic);
      if (cross(b - a, c - b) <= eps) continue;  // reflex or straight
      bool blocked = false;
      for (int j = 0; j < m && !blocked; ++j) {
        const int iv = idx[j];
        if (iv == ia || iv == ib || iv == ic) continue;
        if (point_in_triangle_closed(poly.vertex(iv), a, b, c, eps)) blocked = true;
      }
      if (blocked) continue;
      tris.push_back({ia, ib, ic});
      idx.erase(idx.begin() + i);
      clipped = true;
      break;
    }
    if (!clipped) throw TriangulationFailure("no ear found (degenerate polygon)");
  }
  const Vec2& a = poly.vertex(idx[0]);
  const Vec2& b = poly.vertex(idx[1]);
  const Vec2& c = poly.vertex(idx[2]);
  if (cross(b - a, c - b) <= eps) throw TriangulationFailure("degenerate final triangle");
  tris.push_back({idx[0], idx[1], idx[2]});
  return tris;
}

}  // namespace

Triangulation::Triangulation(const TranslationSurface& surface) : surface_(&surface) {
  const ValidationOutcome v = surface.validate();
  if (!v.ok()) throw InconsistentSurface("cannot triangulate an invalid surface");
  surface.vertex_classes();

  for (int p = 0; p < surface.polygon_count(); ++p) {
    const Polygon& poly = surface.polygon(p);
    const int k = static_cast<int>(poly.size());
    double scale = 0.0;
    for (const Vec2& vert : poly.vertices()) scale = std::max({scale, std::abs(vert.x), std::abs(vert.y)});
    const double eps = surface.tolerance().eps_abs * std::max(1.0, scale);

    const auto polytris = ear_clip(poly, eps);
    // chord (u, v) with u < v -> first triangle edge seen
    std::map<std::pair<int, int>, TriEdgeRef> chords;
    for (const auto& t : polytris) {
      Triangle tri;
      tri.polygon = p;
      for (int c = 0; c < 3; ++c) {
        tri.corner[c] = t[c];
        tri.pos[c] = poly.vertex(t[c]);
        tri.cls[c] = surface.cone_class_of({p, t[c]});
      }
      const int ti = static_cast<int>(tris_.size());
      tris_.push_back(tri);
      partner_.push_back({});
      on_side_.push_back({});
      for (int e = 0; e < 3; ++e) {
        const int u = t[e];
        const int w = t[(e + 1) % 3];
        if ((u + 1) % k == w) {
          const SideRef side{p, u};
          on_side_[ti][e] = side;
          side_edge_[side] = TriEdgeRef{ti, e};
        } else {
          const auto key = std::minmax(u, w);
          auto it = chords.find({key.first, key.second});
          if (it == chords.end()) {
            chords[{key.first, key.second}] = TriEdgeRef{ti, e};
          } else {
            partner_[ti][e] = it->second;
            partner_[it->second.tri][it->second.edge] = TriEdgeRef{ti, e};
            chords.erase(it);
          }
        }
      }
    }
    if (!chords.empty()) throw TriangulationFailure("unmatched interior chord");
  }

  // Glue triangle edges across the surface's side pairing.
  for (int p = 0; p < surface.polygon_count(); ++p) {
    for (int s = 0; s < static_cast<int>(surface.polygon(p).size()); ++s) {
      const SideRef here{p, s};
      const SideRef there = surface.pairing().partner(here);
      const TriEdgeRef ea = side_edge_.at(here);
      const TriEdgeRef eb = side_edge_.at(there);
      partner_[ea.tri][ea.edge] = eb;
      partner_[eb.tri][eb.edge] = ea;
    }
  }
}

TriEdgeRef Triangulation::edge_of_side(SideRef s) const {
  auto it = side_edge_.find(s);
  if (it == side_edge_.end()) throw InvalidParameter("side not in triangulation");
  return it->second;
}

Vec2 Triangulation::transition_offset(TriEdgeRef e, const Vec2& offset) const {
  const TriEdgeRef o = partner(e);
  // Gluing is antiparallel: tail of e lands on the head of the partner edge.
  const Vec2 tail_here = tris_[e.tri].pos[e.edge];
  const Vec2 head_there = tris_[o.tri].pos[(o.edge + 1) % 3];
  return tail_here + offset - head_there;
}

}  // namespace tsurf
