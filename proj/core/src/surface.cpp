#include "tsurf/surface.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>

namespace tsurf {

SidePairing::SidePairing(const std::vector<std::size_t>& sides_per_polygon) {
  table_.resize(sides_per_polygon.size());
  for (std::size_t p = 0; p < sides_per_polygon.size(); ++p) {
    table_[p].assign(sides_per_polygon[p], SideRef{});
  }
}

void SidePairing::pair(SideRef a, SideRef b) {
  auto in_range = [&](SideRef s) {
    return s.polygon >= 0 && s.polygon < static_cast<int>(table_.size()) && s.side >= 0 &&
           s.side < static_cast<int>(table_[s.polygon].size());
  };
  if (!in_range(a) || !in_range(b)) throw InvalidParameter("side reference out of range");
  if (a == b) throw InvalidParameter("a side cannot be paired with itself");
  table_[a.polygon][a.side] = b;
  table_[b.polygon][b.side] = a;
}

SideRef SidePairing::partner(SideRef s) const {
  SideRef p = partner_or_null(s);
  if (!p.valid()) throw InvalidParameter("side is not paired");
  return p;
}

SideRef SidePairing::partner_or_null(SideRef s) const {
  if (s.polygon < 0 || s.polygon >= static_cast<int>(table_.size())) return SideRef{};
  if (s.side < 0 || s.side >= static_cast<int>(table_[s.polygon].size())) return SideRef{};
  return table_[s.polygon][s.side];
}

TranslationSurface::TranslationSurface(std::vector<Polygon> polygons, SidePairing pairing,
                                       Tolerance tol)
    : polygons_(std::move(polygons)), pairing_(std::move(pairing)), tol_(tol) {}

ValidationOutcome TranslationSurface::validate() const {
  if (validation_) return *validation_;
  ValidationOutcome out;
  using K = ValidationIssue::Kind;

  for (int p = 0; p < polygon_count(); ++p) {
    for (const std::string& msg : polygons_[p].check(tol_)) {
      out.issues.push_back({K::bad_polygon, "polygon " + std::to_string(p) + ": " + msg});
    }
  }

  if (pairing_.polygon_count() != polygons_.size()) {
    out.issues.push_back({K::unmatched_side, "pairing table does not cover all polygons"});
    validation_ = out;
    return *validation_;
  }

  for (int p = 0; p < polygon_count(); ++p) {
    const std::size_t k = polygons_[p].size();
    if (pairing_.side_count(p) != k) {
      out.issues.push_back(
          {K::unmatched_side, "pairing table size mismatch on polygon " + std::to_string(p)});
      continue;
    }
    for (int s = 0; s < static_cast<int>(k); ++s) {
      const SideRef here{p, s};
      const SideRef there = pairing_.partner_or_null(here);
      if (!there.valid()) {
        out.issues.push_back({K::unmatched_side, "side " + std::to_string(p) + ":" +
                                                     std::to_string(s) + " is unpaired"});
        continue;
      }
      if (there == here) {
        out.issues.push_back({K::self_paired, "side " + std::to_string(p) + ":" +
                                                  std::to_string(s) + " paired with itself"});
        continue;
      }
      if (!(pairing_.partner_or_null(there) == here)) {
        out.issues.push_back({K::non_involution, "pairing not an involution at " +
                                                     std::to_string(p) + ":" +
                                                     std::to_string(s)});
        continue;
      }
      if (there < here) continue;  // report each pair once
      const Vec2 va = side_vector(here);
      const Vec2 vb = side_vector(there);
      const double scale = std::max(va.norm(), vb.norm());
      if (!tol_.near(va.norm(), vb.norm())) {
        out.issues.push_back({K::length_mismatch,
                              "paired sides " + std::to_string(p) + ":" + std::to_string(s) +
                                  " and " + std::to_string(there.polygon) + ":" +
                                  std::to_string(there.side) + " differ in length"});
      } else if (!tol_.near_zero((va + vb).x, scale) || !tol_.near_zero((va + vb).y, scale)) {
        out.issues.push_back({K::not_antiparallel,
                              "paired sides " + std::to_string(p) + ":" + std::to_string(s) +
                                  " and " + std::to_string(there.polygon) + ":" +
                                  std::to_string(there.side) + " are not antiparallel"});
      }
    }
  }

  if (out.issues.empty() && polygon_count() > 0) {
    std::vector<bool> seen(polygons_.size(), false);
    std::queue<int> q;
    q.push(0);
    seen[0] = true;
    int reached = 1;
    while (!q.empty()) {
      const int p = q.front();
      q.pop();
      for (int s = 0; s < static_cast<int>(polygons_[p].size()); ++s) {
        const SideRef there = pairing_.partner_or_null({p, s});
        if (there.valid() && !seen[there.polygon]) {
          seen[there.polygon] = true;
          ++reached;
          q.push(there.polygon);
        }
      }
    }
    if (reached != polygon_count()) {
      out.issues.push_back({K::disconnected, "surface is disconnected"});
    }
  }

  validation_ = out;
  return *validation_;
}

void TranslationSurface::require_valid() const {
  const ValidationOutcome v = validate();
  if (!v.ok()) {
    throw InconsistentSurface("surface fails validation: " + v.issues.front().message);
  }
}

void TranslationSurface::compute_classes() const {
  if (classes_) return;
  require_valid();

  class_of_corner_.assign(polygons_.size(), {});
  for (std::size_t p = 0; p < polygons_.size(); ++p) {
    class_of_corner_[p].assign(polygons_[p].size(), -1);
  }

  // Rotating around a cone point: from corner (p, v) cross the side leaving
  // that corner; the head of the partner side is the next corner.
  auto next = [&](CornerRef c) {
    const SideRef other = pairing_.partner({c.polygon, c.vertex});
    const int k = static_cast<int>(polygons_[other.polygon].size());
    return CornerRef{other.polygon, (other.side + 1) % k};
  };

  std::vector<ConePoint> classes;
  for (int p = 0; p < polygon_count(); ++p) {
    for (int v = 0; v < static_cast<int>(polygons_[p].size()); ++v) {
      if (class_of_corner_[p][v] >= 0) continue;
      ConePoint cp;
      cp.id = static_cast<int>(classes.size());
      CornerRef start{p, v};
      CornerRef cur = start;
      do {
        class_of_corner_[cur.polygon][cur.vertex] = cp.id;
        cp.corners.push_back(cur);
        cp.total_angle += polygons_[cur.polygon].interior_angle(cur.vertex);
        cur = next(cur);
      } while (!(cur == start));
      const double k = cp.total_angle / (2.0 * std::numbers::pi);
      cp.angle_multiple = static_cast<int>(std::lround(k));
      const double tol_angle = tol_.eps_abs * static_cast<double>(cp.corners.size()) + 1e-9;
      if (cp.angle_multiple < 1 ||
          std::abs(cp.total_angle - 2.0 * std::numbers::pi * cp.angle_multiple) > tol_angle) {
        throw InconsistentSurface("cone angle not a positive multiple of 2*pi (got " +
                                  std::to_string(cp.total_angle) + ")");
      }
      cp.kind = cp.angle_multiple >= 2 ? ConeKind::singular : ConeKind::marked;
      classes.push_back(std::move(cp));
    }
  }
  classes_ = std::move(classes);
}

const std::vector<ConePoint>& TranslationSurface::vertex_classes() const {
  compute_classes();
  return *classes_;
}

int TranslationSurface::cone_class_of(CornerRef c) const {
  compute_classes();
  return class_of_corner_[c.polygon][c.vertex];
}

int TranslationSurface::side_pair_count() const {
  int sides = 0;
  for (const Polygon& p : polygons_) sides += static_cast<int>(p.size());
  return sides / 2;
}

int TranslationSurface::euler_characteristic() const {
  const int v = static_cast<int>(vertex_classes().size());
  const int e = side_pair_count();
  const int f = polygon_count();
  return v - e + f;
}

int TranslationSurface::genus() const {
  const int chi = euler_characteristic();
  if ((2 - chi) % 2 != 0) throw InconsistentSurface("odd Euler characteristic");
  const int g = (2 - chi) / 2;
  if (g < 0) throw InconsistentSurface("negative genus");
  return g;
}

double TranslationSurface::area() const {
  require_valid();
  double a = 0.0;
  for (const Polygon& p : polygons_) a += p.area();
  return a;
}

double TranslationSurface::min_side_length() const {
  double m = std::numeric_limits<double>::infinity();
  for (const Polygon& p : polygons_) m = std::min(m, p.min_side_length());
  return m;
}

std::map<int, int> TranslationSurface::cone_spectrum() const {
  std::map<int, int> spec;
  for (const ConePoint& cp : vertex_classes()) spec[cp.angle_multiple]++;
  return spec;
}

bool TranslationSurface::has_singular_point() const {
  for (const ConePoint& cp : vertex_classes()) {
    if (cp.kind == ConeKind::singular) return true;
  }
  return false;
}

std::vector<int> TranslationSurface::eligible_classes() const {
  const bool sing = has_singular_point();
  std::vector<int> out;
  for (const ConePoint& cp : vertex_classes()) {
    if (!sing || cp.kind == ConeKind::singular) out.push_back(cp.id);
  }
  return out;
}

bool TranslationSurface::class_eligible(int class_id) const {
  const auto& classes = vertex_classes();
  if (class_id < 0 || class_id >= static_cast<int>(classes.size())) return false;
  if (!has_singular_point()) return true;
  return classes[class_id].kind == ConeKind::singular;
}

}  // namespace tsurf
