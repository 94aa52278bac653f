#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "tsurf/geometry.hpp"

namespace tsurf {

struct SideRef {
  int polygon = -1;
  int side = -1;

  bool operator==(const SideRef& o) const { return polygon == o.polygon && side == o.side; }
  bool operator<(const SideRef& o) const {
    return polygon != o.polygon ? polygon < o.polygon : side < o.side;
  }
  bool valid() const { return polygon >= 0 && side >= 0; }
};

// Total involution on the sides of a polygon family. A side is never paired
// with itself; gluing a polygon to itself uses two distinct sides.
class SidePairing {
 public:
  SidePairing() = default;
  explicit SidePairing(const std::vector<std::size_t>& sides_per_polygon);

  void pair(SideRef a, SideRef b);
  SideRef partner(SideRef s) const;
  bool is_paired(SideRef s) const { return partner_or_null(s).valid(); }
  SideRef partner_or_null(SideRef s) const;
  std::size_t polygon_count() const { return table_.size(); }
  std::size_t side_count(int polygon) const { return table_[polygon].size(); }

 private:
  std::vector<std::vector<SideRef>> table_;
};

struct CornerRef {
  int polygon = -1;
  int vertex = -1;
  bool operator==(const CornerRef& o) const = default;
  bool operator<(const CornerRef& o) const {
    return polygon != o.polygon ? polygon < o.polygon : vertex < o.vertex;
  }
};

enum class ConeKind { marked, singular };

struct ConePoint {
  int id = -1;
  std::vector<CornerRef> corners;
  double total_angle = 0.0;
  int angle_multiple = 0;  // k with total_angle = 2*pi*k
  ConeKind kind = ConeKind::marked;
};

struct ValidationIssue {
  enum class Kind {
    bad_polygon,
    unmatched_side,
    non_involution,
    self_paired,
    not_antiparallel,
    length_mismatch,
    disconnected,
    non_finite,
  };
  Kind kind;
  std::string message;
};

struct ValidationOutcome {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

class InconsistentSurface : public std::runtime_error {
 public:
  explicit InconsistentSurface(const std::string& what) : std::runtime_error(what) {}
};

// Polygons plus a translation side-pairing. Derived topology (vertex classes,
// Euler characteristic, genus) is computed on demand and cached; instances
// are immutable after construction.
class TranslationSurface {
 public:
  TranslationSurface(std::vector<Polygon> polygons, SidePairing pairing,
                     Tolerance tol = Tolerance{});

  const std::vector<Polygon>& polygons() const { return polygons_; }
  const Polygon& polygon(int i) const { return polygons_[i]; }
  int polygon_count() const { return static_cast<int>(polygons_.size()); }
  const SidePairing& pairing() const { return pairing_; }
  const Tolerance& tolerance() const { return tol_; }

  Vec2 side_vector(SideRef s) const { return polygons_[s.polygon].side_vector(s.side); }

  ValidationOutcome validate() const;

  // Partition of all polygon corners by the walk-around-corner relation.
  // Requires a valid surface.
  const std::vector<ConePoint>& vertex_classes() const;
  int cone_class_of(CornerRef c) const;

  int side_pair_count() const;
  int euler_characteristic() const;
  int genus() const;
  double area() const;
  double min_side_length() const;

  // Multiset {angle multiple k -> number of classes}.
  std::map<int, int> cone_spectrum() const;
  bool has_singular_point() const;
  // Endpoint-eligible classes: singular points when any exist, otherwise all
  // (marked) classes.
  std::vector<int> eligible_classes() const;
  bool class_eligible(int class_id) const;

 private:
  void require_valid() const;
  void compute_classes() const;

  std::vector<Polygon> polygons_;
  SidePairing pairing_;
  Tolerance tol_;

  mutable std::optional<ValidationOutcome> validation_;
  mutable std::optional<std::vector<ConePoint>> classes_;
  mutable std::vector<std::vector<int>> class_of_corner_;
};

}  // namespace tsurf
