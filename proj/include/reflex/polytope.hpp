#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "reflex/errors.hpp"
#include "reflex/lattice.hpp"
#include "reflex/numeric.hpp"

namespace reflex {

/// Facet of a lattice polytope: <normal, x> <= offset holds on the polytope
/// and is tight exactly on vertex_indices. The normal is primitive and
/// offset > 0 because the origin is interior.
struct Facet {
  std::vector<std::size_t> vertex_indices;  // ascending
  IntVector normal;
  Integer offset;

  bool contains_vertex(std::size_t i) const {
    return std::binary_search(vertex_indices.begin(), vertex_indices.end(), i);
  }
  friend bool operator==(const Facet&, const Facet&) = default;
};

namespace detail {

struct Hyperplane {
  IntVector normal;
  Integer offset;
  std::vector<std::size_t> tight;
};

/// Advances idx to the next k-combination of {0..n-1}; false when exhausted.
inline bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (idx[i] != i + n - k) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

/// Every supporting hyperplane spanned by d of the given points, found by
/// enumerating d-subsets and solving for the normal by cofactors.
template <class T>
std::vector<Hyperplane> supporting_hyperplanes(const std::vector<IntVector>& points, std::size_t d) {
  const std::size_t n = points.size();
  std::vector<std::vector<T>> pts(n, std::vector<T>(d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < d; ++j) pts[i][j] = convert<T>(points[i][j]);

  std::set<std::vector<T>> seen;  // normal followed by offset
  std::vector<Hyperplane> out;
  if (n < d) return out;

  std::vector<std::size_t> idx(d);
  for (std::size_t i = 0; i < d; ++i) idx[i] = i;
  std::vector<T> minor(d * d);
  std::vector<T> kernel(d + 1);
  std::vector<T> side(n);
  do {
    // Kernel of the d x (d+1) matrix with rows (p_i, 1).
    bool nonzero = false;
    for (std::size_t skip = 0; skip <= d; ++skip) {
      for (std::size_t r = 0; r < d; ++r) {
        std::size_t cc = 0;
        for (std::size_t col = 0; col <= d; ++col) {
          if (col == skip) continue;
          minor[r * d + cc++] = col < d ? pts[idx[r]][col] : T(1);
        }
      }
      T m = bareiss_det(minor, d);
      kernel[skip] = (skip % 2 == 0) ? m : -m;
      if (m != 0) nonzero = true;
    }
    if (!nonzero) continue;
    bool normal_zero = true;
    for (std::size_t j = 0; j < d; ++j) normal_zero = normal_zero && kernel[j] == 0;
    if (normal_zero) continue;

    // <a, p> + k_d = 0 on the subset, so the offset is -k_d.
    std::vector<T> key(kernel.begin(), kernel.begin() + static_cast<std::ptrdiff_t>(d));
    T offset = -kernel[d];
    T g = 0;
    for (std::size_t j = 0; j < d; ++j) {
      T x = abs_value(key[j]);
      while (x != 0) {
        T t = g % x;
        g = x;
        x = t;
      }
    }
    for (std::size_t j = 0; j < d; ++j) key[j] = key[j] / g;
    offset = offset / g;

    bool above = false, below = false;
    for (std::size_t i = 0; i < n; ++i) {
      T s = 0;
      for (std::size_t j = 0; j < d; ++j) s += key[j] * pts[i][j];
      side[i] = s - offset;
      if (side[i] > 0) above = true;
      if (side[i] < 0) below = true;
      if (above && below) break;
    }
    if (above && below) continue;
    if (above) {
      for (auto& x : key) x = -x;
      offset = -offset;
    }
    key.push_back(offset);
    if (!seen.insert(key).second) continue;

    Hyperplane h;
    for (std::size_t j = 0; j < d; ++j) h.normal.push_back(to_integer(key[j]));
    h.offset = to_integer(offset);
    for (std::size_t i = 0; i < n; ++i)
      if (side[i] == 0) h.tight.push_back(i);
    out.push_back(std::move(h));
  } while (next_combination(idx, n));
  return out;
}

inline bool lex_less(const IntVector& a, const IntVector& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace detail

/// Full-dimensional lattice polytope with the origin in its interior, given
/// by an irredundant vertex list. Facets are computed once at construction;
/// the object is immutable afterwards.
class LatticePolytope {
 public:
  explicit LatticePolytope(std::vector<IntVector> vertices) : vertices_(std::move(vertices)) {
    validate_shape();
    auto planes = detail::with_fast_path(
        [&]<class T>() { return detail::supporting_hyperplanes<T>(vertices_, dim_); });
    adopt(std::move(planes));
  }

  /// Builds a polytope whose facets are already known. The facet list is
  /// verified: each facet must support the vertex set with exactly the
  /// stated tight set, all facets must be simplices and every ridge must
  /// lie in exactly two of them, which forces the list to be complete.
  static LatticePolytope with_simplicial_facets(std::vector<IntVector> vertices, std::vector<Facet> facets) {
    LatticePolytope p(std::move(vertices), Unchecked{});
    p.validate_shape();
    std::vector<detail::Hyperplane> planes;
    std::map<std::vector<std::size_t>, int> ridges;
    for (auto& f : facets) {
      detail::Hyperplane h{f.normal, f.offset, {}};
      for (std::size_t i = 0; i < p.vertices_.size(); ++i) {
        Integer s = dot(h.normal, p.vertices_[i]);
        if (s > h.offset) throw InternalError("with_simplicial_facets: facet does not support the vertex set");
        if (s == h.offset) h.tight.push_back(i);
      }
      if (h.tight != f.vertex_indices || h.tight.size() != p.dim_)
        throw InternalError("with_simplicial_facets: tight set mismatch");
      for (std::size_t skip = 0; skip < h.tight.size(); ++skip) {
        std::vector<std::size_t> ridge;
        for (std::size_t k = 0; k < h.tight.size(); ++k)
          if (k != skip) ridge.push_back(h.tight[k]);
        ++ridges[ridge];
      }
      planes.push_back(std::move(h));
    }
    for (const auto& [ridge, count] : ridges)
      if (count != 2) throw InternalError("with_simplicial_facets: facet list is not a closed sphere");
    p.adopt(std::move(planes));
    return p;
  }

  /// Builds a polytope from its vertices and a complete list of facet
  /// inequalities <normal, x> <= offset. Each inequality must support the
  /// vertex set; tight sets are computed. Completeness is the caller's
  /// responsibility, as for free sums and products with known facets.
  static LatticePolytope with_known_facets(std::vector<IntVector> vertices,
                                           std::vector<std::pair<IntVector, Integer>> inequalities) {
    LatticePolytope p(std::move(vertices), Unchecked{});
    p.validate_shape();
    std::vector<detail::Hyperplane> planes;
    std::set<std::pair<IntVector, Integer>> seen;
    for (auto& [normal, offset] : inequalities) {
      if (normal.size() != p.dim_) throw DimensionError("with_known_facets: normal dimension mismatch");
      const Integer g = gcd_of(normal);
      if (g == 0) throw DomainError("with_known_facets: zero normal");
      if (offset % g != 0) throw InternalError("with_known_facets: inequality does not define a facet");
      detail::Hyperplane h;
      for (const auto& a : normal) h.normal.push_back(a / g);
      h.offset = offset / g;
      if (!seen.emplace(h.normal, h.offset).second) continue;
      for (std::size_t i = 0; i < p.vertices_.size(); ++i) {
        Integer s = dot(h.normal, p.vertices_[i]);
        if (s > h.offset) throw InternalError("with_known_facets: inequality cuts off a vertex");
        if (s == h.offset) h.tight.push_back(i);
      }
      if (h.tight.size() < p.dim_) throw InternalError("with_known_facets: inequality does not define a facet");
      planes.push_back(std::move(h));
    }
    p.adopt(std::move(planes));
    return p;
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  const std::vector<IntVector>& vertices() const noexcept { return vertices_; }
  const IntVector& vertex(std::size_t i) const { return vertices_.at(i); }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  const Facet& facet(std::size_t k) const { return facets_.at(k); }

  std::optional<std::size_t> index_of(const IntVector& v) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
      if (vertices_[i] == v) return i;
    return std::nullopt;
  }

  /// The same polytope with vertex i of the result being vertex order[i] of
  /// this one. Facets are carried along.
  LatticePolytope permuted(const std::vector<std::size_t>& order) const {
    if (order.size() != vertices_.size()) throw DimensionError("permuted: order has wrong length");
    std::vector<std::size_t> inverse(order.size(), order.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      if (order[i] >= order.size() || inverse[order[i]] != order.size())
        throw DomainError("permuted: not a permutation");
      inverse[order[i]] = i;
    }
    LatticePolytope q({}, Unchecked{});
    q.dim_ = dim_;
    for (std::size_t i : order) q.vertices_.push_back(vertices_[i]);
    for (const auto& f : facets_) {
      Facet g{{}, f.normal, f.offset};
      for (std::size_t i : f.vertex_indices) g.vertex_indices.push_back(inverse[i]);
      std::sort(g.vertex_indices.begin(), g.vertex_indices.end());
      q.facets_.push_back(std::move(g));
    }
    return q;
  }

  /// Image under a unimodular map u. Normals transform by the inverse
  /// transpose, so no hull is recomputed.
  LatticePolytope unimodular_image(const IntMatrix& u) const {
    if (!u.is_square() || u.rows() != dim_) throw DimensionError("unimodular_image: matrix shape mismatch");
    const Integer dt = det(u);
    if (dt != 1 && dt != -1) throw DomainError("unimodular_image: matrix is not unimodular");
    // The HNF of a unimodular matrix is the identity, so its transform is u^{-1}.
    const IntMatrix inv_t = hermite_normal_form(u).u.transposed();
    LatticePolytope q({}, Unchecked{});
    q.dim_ = dim_;
    for (const auto& v : vertices_) q.vertices_.push_back(u * v);
    for (const auto& f : facets_) q.facets_.push_back(Facet{f.vertex_indices, inv_t * f.normal, f.offset});
    std::sort(q.facets_.begin(), q.facets_.end(),
              [](const Facet& a, const Facet& b) { return detail::lex_less(a.normal, b.normal); });
    return q;
  }

  std::vector<IntVector> facet_vertices(std::size_t k) const {
    std::vector<IntVector> out;
    for (std::size_t i : facets_.at(k).vertex_indices) out.push_back(vertices_[i]);
    return out;
  }

 private:
  struct Unchecked {};
  LatticePolytope(std::vector<IntVector> vertices, Unchecked) : vertices_(std::move(vertices)) {}

  void validate_shape() {
    if (vertices_.empty()) throw DimensionError("polytope: no vertices");
    dim_ = vertices_.front().size();
    if (dim_ == 0) throw DimensionError("polytope: dimension must be at least 1");
    for (const auto& v : vertices_)
      if (v.size() != dim_) throw DimensionError("polytope: vertices of mixed dimension");
    std::set<IntVector> unique(vertices_.begin(), vertices_.end());
    if (unique.size() != vertices_.size()) throw DegeneracyError("degenerate: duplicate vertex");
    if (vertices_.size() < dim_ + 1) throw DegeneracyError("degenerate: vertices are not full-dimensional");
    std::vector<IntVector> diffs;
    for (std::size_t i = 1; i < vertices_.size(); ++i) diffs.push_back(vertices_[i] - vertices_[0]);
    if (rank(IntMatrix::from_rows(diffs)) != dim_)
      throw DegeneracyError("degenerate: vertices are not full-dimensional");
  }

  void adopt(std::vector<detail::Hyperplane> planes) {
    for (const auto& h : planes)
      if (h.offset <= 0) throw DomainError("origin not in interior");
    // A point is a vertex iff the normals of its tight facets span rank d.
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      std::vector<IntVector> normals;
      for (const auto& h : planes)
        if (std::binary_search(h.tight.begin(), h.tight.end(), i)) normals.push_back(h.normal);
      if (normals.size() < dim_ || rank(IntMatrix::from_rows(normals)) != dim_)
        throw DegeneracyError("redundant vertex: point " + std::to_string(i) + " is not a vertex");
    }
    facets_.clear();
    for (auto& h : planes) facets_.push_back(Facet{std::move(h.tight), std::move(h.normal), std::move(h.offset)});
    std::sort(facets_.begin(), facets_.end(),
              [](const Facet& a, const Facet& b) { return detail::lex_less(a.normal, b.normal); });
  }

  std::vector<IntVector> vertices_;
  std::size_t dim_ = 0;
  std::vector<Facet> facets_;
};

inline const std::vector<Facet>& hull_facets(const LatticePolytope& p) { return p.facets(); }

/// Polytope with rational vertices, full-dimensional with the origin inside.
class RationalPolytope {
 public:
  RationalPolytope(std::size_t dim, std::vector<RatVector> vertices) : dim_(dim), vertices_(std::move(vertices)) {
    for (const auto& v : vertices_)
      if (v.size() != dim_) throw DimensionError("rational polytope: vertices of mixed dimension");
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  const std::vector<RatVector>& vertices() const noexcept { return vertices_; }

  bool is_lattice() const {
    return std::all_of(vertices_.begin(), vertices_.end(), [](const RatVector& v) { return to_integral(v).has_value(); });
  }

  /// The same polytope as a LatticePolytope, when every vertex is integral.
  std::optional<LatticePolytope> lattice_polytope() const {
    std::vector<IntVector> verts;
    for (const auto& v : vertices_) {
      auto iv = to_integral(v);
      if (!iv) return std::nullopt;
      verts.push_back(std::move(*iv));
    }
    return LatticePolytope(std::move(verts));
  }

  /// Smallest positive L with L * vertices integral.
  Integer common_denominator() const {
    Integer l = 1;
    for (const auto& v : vertices_)
      for (const auto& x : v) l = boost::multiprecision::lcm(l, Integer(denominator(x)));
    return l;
  }

 private:
  std::size_t dim_;
  std::vector<RatVector> vertices_;
};

/// P* = {x : <x, y> <= 1 for y in P}; its vertices are normal/offset of the
/// facets of P, in facet order.
inline RationalPolytope dual(const LatticePolytope& p) {
  std::vector<RatVector> verts;
  for (const auto& f : p.facets()) {
    RatVector u;
    for (const auto& a : f.normal) u.emplace_back(a, f.offset);
    verts.push_back(std::move(u));
  }
  return RationalPolytope(p.dim(), std::move(verts));
}

/// Dual of a rational polytope, computed on the integral dilation L*Q.
inline RationalPolytope dual(const RationalPolytope& q) {
  const Integer l = q.common_denominator();
  std::vector<IntVector> scaled;
  for (const auto& v : q.vertices()) {
    IntVector s;
    for (const auto& x : v) s.push_back(numerator(x) * (l / denominator(x)));
    scaled.push_back(std::move(s));
  }
  LatticePolytope big(std::move(scaled));
  std::vector<RatVector> verts;
  for (const auto& f : big.facets()) {
    RatVector u;
    for (const auto& a : f.normal) u.emplace_back(a * l, f.offset);
    verts.push_back(std::move(u));
  }
  return RationalPolytope(q.dim(), std::move(verts));
}

inline bool is_reflexive(const LatticePolytope& p) {
  return std::all_of(p.facets().begin(), p.facets().end(), [](const Facet& f) { return f.offset == 1; });
}

inline bool is_simplicial(const LatticePolytope& p) {
  return std::all_of(p.facets().begin(), p.facets().end(),
                     [&](const Facet& f) { return f.vertex_indices.size() == p.dim(); });
}

inline bool is_smooth_fano(const LatticePolytope& p) {
  if (!is_simplicial(p) || !is_reflexive(p)) return false;
  for (std::size_t k = 0; k < p.facets().size(); ++k)
    if (!is_lattice_basis(p.facet_vertices(k))) return false;
  return true;
}

/// |V(P)| - d, the Picard number of the associated toric variety.
inline std::size_t picard_number(const LatticePolytope& p) {
  if (!is_simplicial(p) || !is_reflexive(p)) throw DomainError("picard_number: polytope is not simplicial reflexive");
  return p.num_vertices() - p.dim();
}

struct LatticePoints {
  std::vector<IntVector> interior;
  std::vector<IntVector> boundary;
};

/// All lattice points of p, by scanning the vertex bounding box.
inline LatticePoints lattice_points(const LatticePolytope& p) {
  const std::size_t d = p.dim();
  IntVector lo = p.vertex(0), hi = p.vertex(0);
  for (const auto& v : p.vertices())
    for (std::size_t j = 0; j < d; ++j) {
      if (v[j] < lo[j]) lo[j] = v[j];
      if (v[j] > hi[j]) hi[j] = v[j];
    }
  LatticePoints out;
  IntVector x = lo;
  for (;;) {
    bool inside = true, strict = true;
    for (const auto& f : p.facets()) {
      Integer s = dot(f.normal, x);
      if (s > f.offset) {
        inside = false;
        break;
      }
      if (s == f.offset) strict = false;
    }
    if (inside) (strict ? out.interior : out.boundary).push_back(x);
    std::size_t j = 0;
    while (j < d && x[j] == hi[j]) x[j] = lo[j], ++j;
    if (j == d) break;
    ++x[j];
  }
  return out;
}

enum class Location { interior, boundary, outside };

struct PointLocation {
  Location location;
  std::vector<std::size_t> tight_facets;  // facet indices, when on the boundary
};

inline PointLocation contains(const LatticePolytope& p, const RatVector& x) {
  if (x.size() != p.dim()) throw DimensionError("contains: point dimension mismatch");
  PointLocation loc{Location::interior, {}};
  for (std::size_t k = 0; k < p.facets().size(); ++k) {
    Rational s = dot(x, p.facet(k).normal);
    if (s > p.facet(k).offset) return PointLocation{Location::outside, {}};
    if (s == p.facet(k).offset) loc.tight_facets.push_back(k);
  }
  if (!loc.tight_facets.empty()) loc.location = Location::boundary;
  return loc;
}

inline PointLocation contains(const LatticePolytope& p, const IntVector& x) {
  if (x.size() != p.dim()) throw DimensionError("contains: point dimension mismatch");
  PointLocation loc{Location::interior, {}};
  for (std::size_t k = 0; k < p.facets().size(); ++k) {
    Integer s = dot(p.facet(k).normal, x);
    if (s > p.facet(k).offset) return PointLocation{Location::outside, {}};
    if (s == p.facet(k).offset) loc.tight_facets.push_back(k);
  }
  if (!loc.tight_facets.empty()) loc.location = Location::boundary;
  return loc;
}

/// x ~ y: both points lie on a common facet.
inline bool share_a_facet(const LatticePolytope& p, const IntVector& x, const IntVector& y) {
  for (const auto& f : p.facets())
    if (dot(f.normal, x) == f.offset && dot(f.normal, y) == f.offset) return true;
  return false;
}

/// Image of p under the linear map x -> m x.
inline LatticePolytope linear_image(const LatticePolytope& p, const IntMatrix& m) {
  if (m.is_square() && m.rows() == p.dim()) {
    const Integer dt = det(m);
    if (dt == 1 || dt == -1) return p.unimodular_image(m);
  }
  std::vector<IntVector> verts;
  for (const auto& v : p.vertices()) verts.push_back(m * v);
  return LatticePolytope(std::move(verts));
}

inline bool is_centrally_symmetric(const LatticePolytope& p) {
  return std::all_of(p.vertices().begin(), p.vertices().end(),
                     [&](const IntVector& v) { return p.index_of(-v).has_value(); });
}

}  // namespace reflex
