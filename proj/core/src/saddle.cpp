#include "tsurf/saddle.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>

namespace tsurf {

namespace {

constexpr double kAngEps = 1e-11;

Vec2 unit(const Vec2& v) {
  const double n = v.norm();
  return {v.x / n, v.y / n};
}

// CCW direction interval of width < pi, endpoints unit vectors.
struct DirInterval {
  Vec2 lo, hi;
  bool lo_in = true;
  bool hi_in = true;
};

bool dir_inside(const DirInterval& I, const Vec2& p) {
  const double r = p.norm();
  const double thr = kAngEps * r;
  const double c1 = cross(I.lo, p);
  const double c2 = cross(p, I.hi);
  const bool lo_ok = c1 > thr || (std::abs(c1) <= thr && dot(I.lo, p) > 0.0 && I.lo_in);
  const bool hi_ok = c2 > thr || (std::abs(c2) <= thr && dot(I.hi, p) > 0.0 && I.hi_in);
  return lo_ok && hi_ok;
}

bool same_dir(const Vec2& a, const Vec2& b) {
  return std::abs(cross(a, b)) <= kAngEps && dot(a, b) > 0.0;
}

// Intersection of two CCW intervals assumed to overlap in a set of width
// < pi. Returns false when empty.
bool intersect(const DirInterval& I, const DirInterval& J, DirInterval& out) {
  const double c_lo = cross(I.lo, J.lo);
  if (std::abs(c_lo) <= kAngEps && dot(I.lo, J.lo) > 0.0) {
    out.lo = I.lo;
    out.lo_in = I.lo_in && J.lo_in;
  } else if (c_lo > 0.0) {
    out.lo = J.lo;
    out.lo_in = J.lo_in;
  } else {
    out.lo = I.lo;
    out.lo_in = I.lo_in;
  }
  const double c_hi = cross(I.hi, J.hi);
  if (std::abs(c_hi) <= kAngEps && dot(I.hi, J.hi) > 0.0) {
    out.hi = I.hi;
    out.hi_in = I.hi_in && J.hi_in;
  } else if (c_hi > 0.0) {
    out.hi = I.hi;
    out.hi_in = I.hi_in;
  } else {
    out.hi = J.hi;
    out.hi_in = J.hi_in;
  }
  const double c = cross(out.lo, out.hi);
  if (c > kAngEps) return true;
  if (c >= -kAngEps && dot(out.lo, out.hi) > 0.0) return out.lo_in && out.hi_in;
  return false;
}

// Angular span of segment [U, V] seen from the origin; false when the
// segment is radially degenerate.
bool segment_span(const Vec2& U, const Vec2& V, DirInterval& out) {
  const double ru = U.norm();
  const double rv = V.norm();
  if (ru <= 0.0 || rv <= 0.0) return false;
  const Vec2 du = unit(U);
  const Vec2 dv = unit(V);
  const double c = cross(du, dv);
  if (std::abs(c) <= kAngEps) return false;
  if (c > 0.0) {
    out = DirInterval{du, dv, true, true};
  } else {
    out = DirInterval{dv, du, true, true};
  }
  return true;
}

// Minimum distance from the origin to segment [U, V] restricted to the
// directions in I (used for pruning; conservative on ties).
double min_dist_in_cone(const Vec2& U, const Vec2& V, const DirInterval& I) {
  double best = std::numeric_limits<double>::infinity();
  auto consider = [&](const Vec2& p) {
    if (dir_inside(I, p) || p.norm() == 0.0) best = std::min(best, p.norm());
  };
  consider(U);
  consider(V);
  const Vec2 d = V - U;
  const double len2 = d.norm_sq();
  if (len2 > 0.0) {
    const double tfoot = -dot(U, d) / len2;
    if (tfoot > 0.0 && tfoot < 1.0) consider(U + tfoot * d);
    // Crossings of the cone boundary rays with the segment.
    for (const Vec2& ray : {I.lo, I.hi}) {
      const double denom = cross(ray, d);
      if (std::abs(denom) < 1e-300) continue;
      const double t = cross(ray, -U) / denom;
      if (t >= 0.0 && t <= 1.0) {
        const Vec2 p = U + t * d;
        if (dot(ray, p) > 0.0) best = std::min(best, p.norm());
      }
    }
  }
  return best;
}

struct Node {
  int tri = -1;
  int entry_edge = -1;
  Vec2 offset;
  DirInterval interval;
  int parent = -1;  // index into the per-seed node arena
};

struct Candidate {
  int start_class = -1;
  int end_class = -1;
  Vec2 holonomy;
  int seed_tri = -1;
  int seed_corner = -1;
  int final_node = -1;  // -1: hit inside the seed triangle
  int final_corner = -1;
};

MidPointKey classify_point(const Triangulation& T, int tri, const Vec2& p, double eps) {
  const Triangle& t = T.triangle(tri);
  for (int c = 0; c < 3; ++c) {
    if ((p - t.pos[c]).norm() <= eps) {
      return MidPointKey{MidPointKey::Where::vertex, t.cls[c], -1, 0.0, 0.0};
    }
  }
  for (int e = 0; e < 3; ++e) {
    const Vec2 A = t.pos[e];
    const Vec2 B = t.pos[(e + 1) % 3];
    const Vec2 d = B - A;
    const double len = d.norm();
    const double h = std::abs(cross(d, p - A)) / len;
    const double proj = dot(p - A, d) / (len * len);
    if (h <= eps && proj >= 0.0 && proj <= 1.0) {
      const TriEdgeRef me{tri, e};
      const TriEdgeRef other = T.partner(me);
      double tt = proj;
      TriEdgeRef canon = me;
      if (other < me) {
        canon = other;
        tt = 1.0 - proj;
      }
      return MidPointKey{MidPointKey::Where::edge, canon.tri, canon.edge, tt, 0.0};
    }
  }
  return MidPointKey{MidPointKey::Where::face, tri, -1, p.x, p.y};
}

bool midkey_equal(const MidPointKey& a, const MidPointKey& b, double eps) {
  if (a.where != b.where || a.a != b.a || a.b != b.b) return false;
  switch (a.where) {
    case MidPointKey::Where::vertex:
      return true;
    case MidPointKey::Where::edge:
      return std::abs(a.t - b.t) <= 1e-7;
    case MidPointKey::Where::face:
      return std::abs(a.t - b.t) <= eps && std::abs(a.u - b.u) <= eps;
  }
  return false;
}

bool point_in_triangle(const Vec2& p, const Triangle& t, const Vec2& offset, double eps) {
  for (int e = 0; e < 3; ++e) {
    const Vec2 A = t.pos[e] + offset;
    const Vec2 B = t.pos[(e + 1) % 3] + offset;
    if (cross(B - A, p - A) < -eps) return false;
  }
  return true;
}

class Enumerator {
 public:
  Enumerator(const Triangulation& T, double L, const EnumerateOptions& opts)
      : T_(T), surf_(T.surface()), opts_(opts) {
    const Tolerance& tol = surf_.tolerance();
    L_hi_ = L * (1.0 + tol.eps_rel) + tol.eps_abs;
    eps_ = tol.eps_abs;
    eligible_.assign(surf_.vertex_classes().size(), false);
    for (int c : surf_.eligible_classes()) eligible_[c] = true;
  }

  EnumerateResult run() {
    EnumerateResult result;
    for (int t = 0; t < T_.triangle_count(); ++t) {
      for (int c = 0; c < 3; ++c) {
        if (eligible_[T_.triangle(t).cls[c]]) run_seed(t, c);
      }
    }
    result.complete = complete_;
    result.connections = finalize();
    return result;
  }

 private:
  void run_seed(int seed_tri, int seed_corner) {
    nodes_.clear();
    seed_tri_ = seed_tri;
    seed_corner_ = seed_corner;
    const Triangle& t = T_.triangle(seed_tri);
    const Vec2 origin = t.pos[seed_corner];
    const Vec2 offset = -origin;
    const int cb = (seed_corner + 1) % 3;
    const int cc = (seed_corner + 2) % 3;
    const Vec2 PB = t.pos[cb] + offset;
    const Vec2 PC = t.pos[cc] + offset;

    // The two wedge-boundary vertices are hits of their own.
    maybe_record(t.cls[cb], PB, -1, cb);
    maybe_record(t.cls[cc], PC, -1, cc);

    DirInterval I{unit(PB), unit(PC), !eligible_[t.cls[cb]], !eligible_[t.cls[cc]]};
    const double c = cross(I.lo, I.hi);
    if (c <= kAngEps && !(c >= -kAngEps && dot(I.lo, I.hi) > 0.0 && I.lo_in && I.hi_in)) {
      return;
    }

    long long budget = opts_.triangle_budget;
    std::deque<int> queue;
    push_child(TriEdgeRef{seed_tri, cb}, offset, I, -1, PB, PC, queue);
    while (!queue.empty()) {
      if (--budget < 0) {
        complete_ = false;
        return;
      }
      const int ni = queue.front();
      queue.pop_front();
      expand(ni, queue);
    }
  }

  // Cross edge `e` of the triangle developed at `offset`, entering the glued
  // triangle; segment [U, V] is the developed edge. Enqueues the new node.
  void push_child(TriEdgeRef e, const Vec2& offset, const DirInterval& I, int parent,
                  const Vec2& U, const Vec2& V, std::deque<int>& queue) {
    if (min_dist_in_cone(U, V, I) > L_hi_) return;
    const TriEdgeRef o = T_.partner(e);
    const Vec2 noff = T_.transition_offset(e, offset);
    nodes_.push_back(Node{o.tri, o.edge, noff, I, parent});
    queue.push_back(static_cast<int>(nodes_.size()) - 1);
  }

  void expand(int ni, std::deque<int>& queue) {
    const Node node = nodes_[ni];
    const Triangle& t = T_.triangle(node.tri);
    const int ia = node.entry_edge;          // entry edge spans corners ia, ib
    const int ib = (node.entry_edge + 1) % 3;
    const int in = (node.entry_edge + 2) % 3;  // opposite corner
    const Vec2 PA = t.pos[ia] + node.offset;
    const Vec2 PB = t.pos[ib] + node.offset;
    const Vec2 PN = t.pos[in] + node.offset;
    const double rn = PN.norm();

    if (rn > eps_ && rn <= L_hi_ && dir_inside(node.interval, PN)) {
      maybe_record(t.cls[in], PN, ni, in);
    }

    const bool blocked = rn > eps_ && eligible_[t.cls[in]];
    const Vec2 dn = rn > eps_ ? unit(PN) : Vec2{0.0, 0.0};

    // Children: edge ib->in and edge in->ia.
    const struct {
      int edge;
      Vec2 U, V;
    } kids[2] = {{ib, PB, PN}, {in, PN, PA}};
    for (const auto& kid : kids) {
      DirInterval span;
      if (!segment_span(kid.U, kid.V, span)) continue;
      DirInterval J;
      if (!intersect(node.interval, span, J)) continue;
      if (blocked) {
        if (same_dir(J.lo, dn)) J.lo_in = false;
        if (same_dir(J.hi, dn)) J.hi_in = false;
        const double c = cross(J.lo, J.hi);
        if (!(c > kAngEps || (c >= -kAngEps && dot(J.lo, J.hi) > 0.0 && J.lo_in && J.hi_in))) {
          continue;
        }
      }
      push_child(TriEdgeRef{node.tri, kid.edge}, node.offset, J, ni, kid.U, kid.V, queue);
    }
  }

  void maybe_record(int cls, const Vec2& P, int final_node, int final_corner) {
    const double r = P.norm();
    if (r <= eps_ || r > L_hi_) return;
    if (!eligible_[cls]) return;
    Candidate c;
    c.start_class = T_.triangle(seed_tri_).cls[seed_corner_];
    c.end_class = cls;
    c.holonomy = P;
    c.seed_tri = seed_tri_;
    c.seed_corner = seed_corner_;
    c.final_node = final_node;
    c.final_corner = final_corner;
    build_connection(c);
  }

  void build_connection(const Candidate& c) {
    SaddleConnection sc;
    sc.seed_triangle = c.seed_tri;
    sc.seed_corner = c.seed_corner;
    sc.dev_holonomy = c.holonomy;
    sc.length = c.holonomy.norm();

    std::vector<int> chain;
    for (int ni = c.final_node; ni >= 0; ni = nodes_[ni].parent) chain.push_back(ni);
    std::reverse(chain.begin(), chain.end());
    for (int ni : chain) {
      sc.path.push_back(CrossingRecord{nodes_[ni].tri, nodes_[ni].entry_edge, nodes_[ni].offset});
    }

    // Canonical unoriented orientation.
    const Tolerance& tol = surf_.tolerance();
    const double thr = tol.eps_abs + tol.eps_rel * sc.length;
    const bool flip = c.holonomy.x < -thr ||
                      (std::abs(c.holonomy.x) <= thr && c.holonomy.y < 0.0);
    if (flip) {
      sc.holonomy = -c.holonomy;
      sc.start = c.end_class;
      sc.end = c.start_class;
    } else {
      sc.holonomy = c.holonomy;
      sc.start = c.start_class;
      sc.end = c.end_class;
    }

    sc.midkey = locate_midpoint(sc);
    found_.push_back(std::move(sc));
  }

  MidPointKey locate_midpoint(const SaddleConnection& sc) const {
    const Vec2 mid = sc.dev_holonomy * 0.5;
    const double scale = std::max(1.0, sc.length);
    const double eps = eps_ * scale + 1e-12 * scale;
    const Vec2 seed_offset = -T_.triangle(sc.seed_triangle).pos[sc.seed_corner];
    if (point_in_triangle(mid, T_.triangle(sc.seed_triangle), seed_offset, eps)) {
      return classify_point(T_, sc.seed_triangle, mid - seed_offset, eps);
    }
    for (const CrossingRecord& cr : sc.path) {
      if (point_in_triangle(mid, T_.triangle(cr.triangle), cr.offset, eps)) {
        return classify_point(T_, cr.triangle, mid - cr.offset, eps);
      }
    }
    // Numerical fallback: take the chain element whose triangle is closest.
    return classify_point(T_, sc.seed_triangle, mid - seed_offset, eps);
  }

  std::vector<SaddleConnection> finalize() {
    auto exact_less = [](const SaddleConnection& a, const SaddleConnection& b) {
      if (a.length != b.length) return a.length < b.length;
      if (a.holonomy.x != b.holonomy.x) return a.holonomy.x < b.holonomy.x;
      if (a.holonomy.y != b.holonomy.y) return a.holonomy.y < b.holonomy.y;
      if (a.start != b.start) return a.start < b.start;
      if (a.end != b.end) return a.end < b.end;
      if (a.seed_triangle != b.seed_triangle) return a.seed_triangle < b.seed_triangle;
      return a.seed_corner < b.seed_corner;
    };
    std::sort(found_.begin(), found_.end(), exact_less);

    const Tolerance& tol = surf_.tolerance();
    std::vector<SaddleConnection> out;
    std::size_t i = 0;
    while (i < found_.size()) {
      // Band of near-equal lengths; duplicates can only live inside it.
      std::size_t j = i;
      const double len0 = found_[i].length;
      while (j < found_.size() &&
             found_[j].length <= len0 + tol.eps_abs + tol.eps_rel * len0 + 1e-12) {
        ++j;
      }
      std::vector<bool> dup(j - i, false);
      for (std::size_t a = i; a < j; ++a) {
        if (dup[a - i]) continue;
        for (std::size_t b = a + 1; b < j; ++b) {
          if (dup[b - i]) continue;
          const SaddleConnection& x = found_[a];
          const SaddleConnection& y = found_[b];
          const double vthr = tol.eps_abs + tol.eps_rel * len0 + 1e-12;
          if (x.start == y.start && x.end == y.end &&
              std::abs(x.holonomy.x - y.holonomy.x) <= vthr &&
              std::abs(x.holonomy.y - y.holonomy.y) <= vthr &&
              midkey_equal(x.midkey, y.midkey, 10.0 * vthr)) {
            dup[b - i] = true;
          }
        }
      }
      for (std::size_t a = i; a < j; ++a) {
        if (!dup[a - i]) out.push_back(std::move(found_[a]));
      }
      i = j;
    }
    return out;
  }

  const Triangulation& T_;
  const TranslationSurface& surf_;
  EnumerateOptions opts_;
  double L_hi_ = 0.0;
  double eps_ = 1e-9;
  std::vector<bool> eligible_;
  std::vector<Node> nodes_;
  std::vector<SaddleConnection> found_;
  int seed_tri_ = -1;
  int seed_corner_ = -1;
  bool complete_ = true;
};

}  // namespace

EnumerateResult enumerate_saddle_connections(const Triangulation& tri, double L,
                                             const EnumerateOptions& opts) {
  if (!(L > 0.0)) throw InvalidParameter("enumeration radius must be positive");
  Enumerator e(tri, L, opts);
  return e.run();
}

Systole systole(const Triangulation& tri, const EnumerateOptions& opts) {
  const TranslationSurface& s = tri.surface();
  if (s.eligible_classes().empty()) throw NoConePoints("surface has no cone points");
  double L = s.min_side_length();
  for (int round = 0; round < 64; ++round) {
    EnumerateResult res = enumerate_saddle_connections(tri, L, opts);
    if (!res.complete) {
      throw BudgetExceeded("development budget exceeded during systole search");
    }
    if (!res.connections.empty()) {
      Systole out;
      out.length = res.connections.front().length;
      const Tolerance& tol = s.tolerance();
      const double band = out.length + tol.eps_abs + tol.eps_rel * out.length;
      for (SaddleConnection& sc : res.connections) {
        if (sc.length <= band) out.connections.push_back(std::move(sc));
      }
      return out;
    }
    L *= 2.0;
  }
  throw InconsistentSurface("no saddle connection found within the search cap");
}

SystolicGraph systolic_graph(const Triangulation& tri, const EnumerateOptions& opts) {
  Systole sys = systole(tri, opts);
  const std::vector<int> eligible = tri.surface().eligible_classes();
  std::vector<int> vertex_of_class(tri.surface().vertex_classes().size(), -1);
  for (std::size_t i = 0; i < eligible.size(); ++i) vertex_of_class[eligible[i]] = static_cast<int>(i);

  SystolicGraph out{Multigraph(static_cast<int>(eligible.size())), eligible, {}, sys.length};
  for (SaddleConnection& sc : sys.connections) {
    out.graph.add_edge(vertex_of_class[sc.start], vertex_of_class[sc.end]);
    out.realization.push_back(std::move(sc));
  }
  return out;
}

bool interior_clear(const Triangulation& tri, const SaddleConnection& sc) {
  const TranslationSurface& s = tri.surface();
  const Tolerance& tol = s.tolerance();
  const double eps = tol.eps_abs * std::max(1.0, sc.length);
  const Vec2 h = sc.dev_holonomy;

  auto check_triangle = [&](int t, const Vec2& offset) {
    const Triangle& T = tri.triangle(t);
    for (int c = 0; c < 3; ++c) {
      if (!s.class_eligible(T.cls[c])) continue;
      const Vec2 p = T.pos[c] + offset;
      const double proj = dot(p, h) / h.norm_sq();
      if (proj <= eps || proj >= 1.0 - eps) continue;
      const double d = std::abs(cross(h, p)) / h.norm();
      if (d <= eps) return false;
    }
    return true;
  };

  const Vec2 seed_offset = -tri.triangle(sc.seed_triangle).pos[sc.seed_corner];
  if (!check_triangle(sc.seed_triangle, seed_offset)) return false;
  for (const CrossingRecord& cr : sc.path) {
    if (!check_triangle(cr.triangle, cr.offset)) return false;
  }
  return true;
}

}  // namespace tsurf
