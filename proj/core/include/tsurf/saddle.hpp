#pragma once

#include <cstdint>
#include <vector>

#include "tsurf/multigraph.hpp"
#include "tsurf/triangulation.hpp"

namespace tsurf {

struct CrossingRecord {
  int triangle = -1;    // triangle entered
  int entry_edge = -1;  // its edge crossed to enter
  Vec2 offset;          // development offset of that triangle copy
};

// Dedup identity of a geodesic segment: the surface point its midpoint lies
// on. Two discoveries of the same unoriented connection (from either
// endpoint) agree on this key; distinct parallel connections do not.
struct MidPointKey {
  enum class Where : std::uint8_t { vertex, edge, face };
  Where where = Where::face;
  int a = -1;      // vertex: class id; edge: canonical triangle; face: triangle
  int b = -1;      // edge: canonical edge index
  double t = 0.0;  // edge: parameter along canonical edge; face: local x
  double u = 0.0;  // face: local y
};

struct SaddleConnection {
  int start = -1;  // cone class ids, canonical orientation
  int end = -1;
  Vec2 holonomy;   // canonical: lexicographically >= its negation
  double length = 0.0;

  // Development data in the orientation the enumerator walked.
  int seed_triangle = -1;
  int seed_corner = -1;
  Vec2 dev_holonomy;  // equals +-holonomy
  std::vector<CrossingRecord> path;
  MidPointKey midkey;
};

struct EnumerateOptions {
  // Developed-triangle cap per (cone point, corner wedge) seed.
  long long triangle_budget = 10000;
};

struct EnumerateResult {
  std::vector<SaddleConnection> connections;
  bool complete = true;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

class NoConePoints : public std::runtime_error {
 public:
  explicit NoConePoints(const std::string& what) : std::runtime_error(what) {}
};

// All unoriented saddle connections of length <= L*(1+eps_rel), one per
// +-holonomy pair, sorted by (length, holonomy x, holonomy y, start, end).
// complete=false when some wedge hit the triangle budget (partial result).
EnumerateResult enumerate_saddle_connections(const Triangulation& tri, double L,
                                             const EnumerateOptions& opts = {});

struct Systole {
  double length = 0.0;
  std::vector<SaddleConnection> connections;  // the full minimal-length set
};

// Shortest saddle connection length plus every connection in the tolerance
// band around it. Starts at the shortest polygon side and doubles the search
// radius until a connection appears.
Systole systole(const Triangulation& tri, const EnumerateOptions& opts = {});

struct SystolicGraph {
  Multigraph graph;
  std::vector<int> class_of_vertex;  // graph vertex -> cone class id
  std::vector<SaddleConnection> realization;  // edge i realizes graph.edges()[i]
  double systole = 0.0;
};

SystolicGraph systolic_graph(const Triangulation& tri, const EnumerateOptions& opts = {});

// Post-hoc audit: no endpoint-eligible cone point in the open interior of the
// developed segment.
bool interior_clear(const Triangulation& tri, const SaddleConnection& sc);

}  // namespace tsurf
