#include "tsurf/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tsurf {

Multigraph::Multigraph(int n_vertices, std::vector<std::pair<int, int>> edges) : Multigraph(n_vertices) {
  for (auto [u, v] : edges) add_edge(u, v);
}

void Multigraph::add_edge(int u, int v) {
  if (!has_vertex(u) || !has_vertex(v)) throw InvalidParameter("edge endpoint out of range");
  if (u > v) std::swap(u, v);
  edges_.emplace_back(u, v);
}

int Multigraph::degree(int v) const {
  int d = 0;
  for (auto [a, b] : edges_) {
    if (a == v) ++d;
    if (b == v) ++d;  // loop counts twice
  }
  return d;
}

int Multigraph::loop_count(int v) const {
  int d = 0;
  for (auto [a, b] : edges_) {
    if (a == v && b == v) ++d;
  }
  return d;
}

int Multigraph::multiplicity(int u, int v) const {
  if (u > v) std::swap(u, v);
  int d = 0;
  for (auto [a, b] : edges_) {
    if (a == u && b == v) ++d;
  }
  return d;
}

std::vector<int> Multigraph::isolated_vertices() const {
  std::vector<int> out;
  for (int v = 0; v < n_; ++v) {
    if (degree(v) == 0) out.push_back(v);
  }
  return out;
}

Multigraph Multigraph::without_isolated_vertices() const {
  std::vector<int> remap(n_, -1);
  int next = 0;
  for (int v = 0; v < n_; ++v) {
    if (degree(v) > 0) remap[v] = next++;
  }
  Multigraph g(std::max(next, 1));
  for (auto [u, v] : edges_) g.add_edge(remap[u], remap[v]);
  return g;
}

Multigraph complete_graph(int n) {
  if (n < 1) throw InvalidParameter("complete_graph requires n >= 1");
  Multigraph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  }
  return g;
}

Multigraph wedge_graph(int n) {
  if (n < 1) throw InvalidParameter("wedge_graph requires n >= 1");
  Multigraph g(1);
  for (int i = 0; i < n; ++i) g.add_edge(0, 0);
  return g;
}

Multigraph family_p_graph(int n, int m) {
  if (n < 2 || m < 1) throw InvalidParameter("family P requires n >= 2, m >= 1");
  Multigraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < 2 * m; ++j) g.add_edge(i, (i + 1) % n);
  }
  return g;
}

Multigraph family_q_graph(int n, int m) {
  if (n < 2 || m < 1) throw InvalidParameter("family Q requires n >= 2, m >= 1");
  Multigraph g(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) {
      g.add_edge(i, i);
      g.add_edge(i, (i + 1) % n);
    }
  }
  return g;
}

Multigraph delete_edges(const Multigraph& g, const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::pair<int, int>> pool = g.edges();
  for (auto [u, v] : edges) {
    if (u > v) std::swap(u, v);
    auto it = std::find(pool.begin(), pool.end(), std::make_pair(u, v));
    if (it == pool.end()) {
      throw InvalidParameter("delete_edges: edge (" + std::to_string(u) + "," +
                             std::to_string(v) + ") not present");
    }
    pool.erase(it);
  }
  return Multigraph(g.vertex_count(), std::move(pool));
}

namespace {

// Per-vertex invariant: degree, loop count, sorted multiset of incident
// multiplicities, then iterated neighbor-class refinement.
std::vector<int> refine_classes(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<long long>> sig(n);
  for (int v = 0; v < n; ++v) {
    std::vector<long long> s{g.degree(v), g.loop_count(v)};
    std::vector<int> mults;
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      const int m = g.multiplicity(u, v);
      if (m > 0) mults.push_back(m);
    }
    std::sort(mults.begin(), mults.end());
    for (int m : mults) s.push_back(m);
    sig[v] = std::move(s);
  }
  auto classes_of = [&](const std::vector<std::vector<long long>>& s) {
    std::map<std::vector<long long>, int> ids;
    std::vector<int> cls(n);
    for (int v = 0; v < n; ++v) cls[v] = ids.emplace(s[v], static_cast<int>(ids.size())).first->second;
    return cls;
  };
  std::vector<int> cls = classes_of(sig);
  for (int round = 0; round < n; ++round) {
    std::vector<std::vector<long long>> next(n);
    for (int v = 0; v < n; ++v) {
      std::vector<long long> s{cls[v]};
      std::vector<std::pair<long long, long long>> nb;
      for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        const int m = g.multiplicity(u, v);
        if (m > 0) nb.emplace_back(cls[u], m);
      }
      std::sort(nb.begin(), nb.end());
      for (auto [c, m] : nb) {
        s.push_back(c);
        s.push_back(m);
      }
      next[v] = std::move(s);
    }
    std::vector<int> ncls = classes_of(next);
    if (ncls == cls) break;
    cls = std::move(ncls);
  }
  return cls;
}

bool extend(const Multigraph& a, const Multigraph& b, const std::vector<int>& ca,
            const std::vector<int>& cb, std::vector<int>& image, std::vector<bool>& used,
            int v) {
  const int n = a.vertex_count();
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if (used[w] || ca[v] != cb[w]) continue;
    if (a.loop_count(v) != b.loop_count(w)) continue;
    bool ok = true;
    for (int u = 0; u < v && ok; ++u) {
      if (a.multiplicity(u, v) != b.multiplicity(image[u], w)) ok = false;
    }
    if (!ok) continue;
    image[v] = w;
    used[w] = true;
    if (extend(a, b, ca, cb, image, used, v + 1)) return true;
    used[w] = false;
    image[v] = -1;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
    return std::nullopt;
  }
  const std::vector<int> ca = refine_classes(a);
  const std::vector<int> cb = refine_classes(b);
  std::vector<int> ha(ca), hb(cb);
  std::sort(ha.begin(), ha.end());
  std::sort(hb.begin(), hb.end());
  // Class ids are assigned by signature insertion order, which can differ
  // between the two graphs; compare class size histograms instead.
  std::map<int, int> sa, sb;
  for (int c : ca) sa[c]++;
  for (int c : cb) sb[c]++;
  std::vector<int> la, lb;
  for (auto [c, k] : sa) la.push_back(k);
  for (auto [c, k] : sb) lb.push_back(k);
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  if (la != lb) return std::nullopt;

  // Recompute classes jointly so ids are comparable across the two graphs.
  // Cheap trick: refine the disjoint union and split the classes back.
  const int n = a.vertex_count();
  Multigraph uni(2 * n);
  for (auto [u, v] : a.edges()) uni.add_edge(u, v);
  for (auto [u, v] : b.edges()) uni.add_edge(n + u, n + v);
  const std::vector<int> cu = refine_classes(uni);
  std::vector<int> cca(cu.begin(), cu.begin() + n);
  std::vector<int> ccb(cu.begin() + n, cu.end());

  std::vector<int> image(n, -1);
  std::vector<bool> used(n, false);
  if (extend(a, b, cca, ccb, image, used, 0)) return image;
  return std::nullopt;
}

WaleckiDecomposition walecki(int n) {
  if (n < 5 || n % 2 == 0) throw InvalidParameter("walecki requires odd n >= 5");
  WaleckiDecomposition dec;
  const int half = (n - 1) / 2;
  auto reduce = [&](int t) {
    // Nonzero labels live in {1..n-1}; 0 is reserved for the hub vertex.
    int r = t % (n - 1);
    if (r <= 0) r += n - 1;
    return r;
  };
  for (int l = 1; l <= half; ++l) {
    std::vector<int> cyc{0, reduce(l)};
    for (int t = 1; t <= half - 1; ++t) {
      cyc.push_back(reduce(l + t));
      cyc.push_back(reduce(l - t));
    }
    cyc.push_back(reduce(l + half));
    std::vector<int> perm(n);
    for (std::size_t i = 0; i < cyc.size(); ++i) perm[cyc[i]] = cyc[(i + 1) % cyc.size()];
    dec.cycles.push_back(std::move(cyc));
    dec.permutations.push_back(std::move(perm));
  }
  return dec;
}

}  // namespace tsurf
