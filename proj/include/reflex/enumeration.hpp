#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "reflex/canonical.hpp"
#include "reflex/constructions.hpp"
#include "reflex/errors.hpp"
#include "reflex/fano.hpp"
#include "reflex/polytope.hpp"

namespace reflex {

/// One unimodular class of reflexive polygons.
struct PolygonClass {
  LatticePolytope representative;  // the normal-form polygon
  IntMatrix key;                   // its normal-form matrix
  std::size_t vertex_count = 0;
  bool smooth = false;
  NuKind nu_kind = NuKind::zero;
};

namespace detail {

using Pt = std::array<std::int64_t, 2>;

inline std::int64_t cross(const Pt& o, const Pt& a, const Pt& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

/// Strict convex hull, counterclockwise; collinear points are dropped.
inline std::vector<Pt> hull_2d(std::vector<Pt> pts) {
  std::sort(pts.begin(), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Pt> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  return h;
}

class PolygonSearch {
 public:
  explicit PolygonSearch(std::int64_t box) {
    for (std::int64_t x = -box; x <= box; ++x)
      for (std::int64_t y = -box; y <= box; ++y)
        if (x != 0 || y != 0) cand_.push_back({x, y});
  }

  /// Vertex sets of every lattice polygon in the box whose only interior
  /// lattice point is the origin.
  std::vector<std::vector<Pt>> run() {
    std::vector<Pt> current;
    extend(current, 0);
    return found_;
  }

 private:
  // Interior lattice points by Pick's theorem, on a strict convex hull.
  static std::int64_t interior_count(const std::vector<Pt>& h) {
    if (h.size() < 3) return 0;
    std::int64_t twice_area = 0, boundary = 0;
    for (std::size_t i = 0; i < h.size(); ++i) {
      const Pt& a = h[i];
      const Pt& b = h[(i + 1) % h.size()];
      twice_area += a[0] * b[1] - a[1] * b[0];
      boundary += std::gcd(b[0] - a[0], b[1] - a[1]);
    }
    return (twice_area - boundary + 2) / 2;
  }

  static bool origin_strictly_inside(const std::vector<Pt>& h) {
    if (h.size() < 3) return false;
    const Pt o{0, 0};
    for (std::size_t i = 0; i < h.size(); ++i)
      if (cross(h[i], h[(i + 1) % h.size()], o) <= 0) return false;
    return true;
  }

  void extend(std::vector<Pt>& current, std::size_t from) {
    for (std::size_t i = from; i < cand_.size(); ++i) {
      current.push_back(cand_[i]);
      const auto h = hull_2d(current);
      // Every chosen point must stay a vertex; growing the hull only adds
      // interior points, so both failures prune the whole subtree.
      const bool convex = h.size() == current.size();
      const std::int64_t inner = convex ? interior_count(h) : 2;
      const bool origin = inner == 1 && origin_strictly_inside(h);
      if (convex && (inner == 0 || origin)) {
        if (origin) found_.push_back(h);
        extend(current, i + 1);
      }
      current.pop_back();
    }
  }

  std::vector<Pt> cand_;
  std::vector<std::vector<Pt>> found_;
};

}  // namespace detail

/// Reflexive polygons up to unimodular equivalence, from all vertex sets in
/// the box [-box, box]^2. A polygon is reflexive iff the origin is its only
/// interior lattice point. Classes are ordered by (vertex count, key).
inline std::vector<PolygonClass> enumerate_reflexive_polygons_in_box(long box) {
  if (box < 1) throw DomainError("enumerate: box must be positive");
  const auto sets = detail::PolygonSearch(box).run();
  std::map<std::pair<std::size_t, IntMatrix>, LatticePolytope> classes;
  for (const auto& s : sets) {
    std::vector<IntVector> verts;
    for (const auto& p : s) verts.push_back(make_vector({static_cast<long>(p[0]), static_cast<long>(p[1])}));
    LatticePolytope poly(std::move(verts));
    NormalForm nf = normal_form(poly);
    auto key = std::make_pair(poly.num_vertices(), nf.matrix);
    if (!classes.count(key)) classes.emplace(key, LatticePolytope(nf.vertices()));
  }
  std::vector<PolygonClass> out;
  for (auto& [key, rep] : classes) {
    if (!is_reflexive(rep)) throw EnumerationError("enumerate: representative is not reflexive");
    PolygonClass c{rep, key.second, rep.num_vertices(), is_smooth_fano(rep), nu_kind(rep)};
    out.push_back(std::move(c));
  }
  return out;
}

/// The 16 classes of reflexive polygons, found in the box [-3, 3]^2.
inline std::vector<PolygonClass> enumerate_reflexive_polygons() {
  auto out = enumerate_reflexive_polygons_in_box(3);
  if (out.size() != 16)
    throw EnumerationError("enumerate: found " + std::to_string(out.size()) + " classes of reflexive polygons, expected 16");
  return out;
}

/// Names the three 5-vertex classes: TV2 is the smooth one; of the others,
/// E2 has nu = 0 and E1 has nu on the boundary but not a vertex.
inline std::map<Named, PolygonClass> five_vertex_taxonomy(const std::vector<PolygonClass>& classes) {
  std::vector<const PolygonClass*> five;
  for (const auto& c : classes)
    if (c.vertex_count == 5) five.push_back(&c);
  if (five.size() != 3) throw TaxonomyError("taxonomy: expected 3 classes with 5 vertices");
  std::map<Named, PolygonClass> out;
  for (const PolygonClass* c : five) {
    Named n;
    if (c->smooth)
      n = Named::tv2;
    else if (c->nu_kind == NuKind::zero)
      n = Named::e2;
    else if (c->nu_kind == NuKind::boundary_nonvertex)
      n = Named::e1;
    else
      throw TaxonomyError("taxonomy: non-smooth 5-vertex class with nu of kind " + std::string(to_string(c->nu_kind)));
    if (!out.emplace(n, *c).second) throw TaxonomyError(std::string("taxonomy: two classes qualify as ") + to_string(n));
  }
  return out;
}

inline std::map<Named, PolygonClass> five_vertex_taxonomy() { return five_vertex_taxonomy(enumerate_reflexive_polygons()); }

}  // namespace reflex
