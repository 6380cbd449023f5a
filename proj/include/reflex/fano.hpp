#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "reflex/errors.hpp"
#include "reflex/lattice.hpp"
#include "reflex/numeric.hpp"
#include "reflex/polytope.hpp"

namespace reflex {

/// nu_P, the sum of all vertices.
inline IntVector vertex_sum(const LatticePolytope& p) {
  IntVector s = zero_vector(p.dim());
  for (const auto& v : p.vertices()) s = s + v;
  return s;
}

/// Where nu_P sits. Reflexive polytopes never give interior_nonzero, and
/// outside only occurs for polytopes that are not reflexive.
enum class NuKind { zero, vertex, boundary_nonvertex, interior_nonzero, outside };

inline const char* to_string(NuKind k) {
  switch (k) {
    case NuKind::zero: return "zero";
    case NuKind::vertex: return "vertex";
    case NuKind::boundary_nonvertex: return "boundary-nonvertex";
    case NuKind::interior_nonzero: return "interior-nonzero";
    case NuKind::outside: return "outside";
  }
  return "?";
}

inline NuKind nu_kind(const LatticePolytope& p) {
  const IntVector nu = vertex_sum(p);
  if (is_zero(nu)) return NuKind::zero;
  if (p.index_of(nu)) return NuKind::vertex;
  switch (contains(p, nu).location) {
    case Location::interior: return NuKind::interior_nonzero;
    case Location::boundary: return NuKind::boundary_nonvertex;
    case Location::outside: break;
  }
  return NuKind::outside;
}

namespace detail {

inline void require_simplicial_reflexive(const LatticePolytope& p, const char* op) {
  if (!is_simplicial(p) || !is_reflexive(p))
    throw DomainError(std::string(op) + ": polytope is not simplicial reflexive");
}

/// Dual basis of a simplex facet in integral form: u^{v_j} = adj[j] / denom
/// with denom = |det| > 0.
struct IntegralFrame {
  std::vector<IntVector> adj;
  Integer denom;
};

inline IntegralFrame integral_frame(const std::vector<IntVector>& facet_vertices) {
  const std::size_t d = facet_vertices.size();
  const IntMatrix a = IntMatrix::from_rows(facet_vertices);
  const Integer dt = det(a);
  if (dt == 0) throw InternalError("facet frame: singular vertex matrix");
  IntegralFrame fr;
  fr.denom = abs_value(dt);
  if (fr.denom == 1) {
    // The HNF of a unimodular matrix is the identity, so its transform is the inverse.
    const IntMatrix inv = hermite_normal_form(a).u;
    for (std::size_t j = 0; j < d; ++j) fr.adj.push_back(inv.column(j));
    return fr;
  }
  for (std::size_t j = 0; j < d; ++j) {
    RatVector col = solve_rational(a, unit_vector(d, j));
    IntVector w;
    for (const auto& x : col) {
      Rational y = x * fr.denom;
      if (denominator(y) != 1) throw InternalError("facet frame: adjugate is not integral");
      w.push_back(numerator(y));
    }
    fr.adj.push_back(std::move(w));
  }
  return fr;
}

/// Per-polytope tables shared by the analysis routines: facet levels of
/// every vertex, neighboring facets and vertices, and integral dual bases.
class Analysis {
 public:
  explicit Analysis(const LatticePolytope& p) : p_(p), d_(p.dim()), n_(p.num_vertices()), m_(p.facets().size()) {
    level_.assign(m_, std::vector<Integer>(n_));
    for (std::size_t k = 0; k < m_; ++k)
      for (std::size_t x = 0; x < n_; ++x) level_[k][x] = dot(p.facet(k).normal, p.vertex(x));

    std::map<std::vector<std::size_t>, std::vector<std::pair<std::size_t, std::size_t>>> ridges;
    for (std::size_t k = 0; k < m_; ++k) {
      const auto& vs = p.facet(k).vertex_indices;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        std::vector<std::size_t> r;
        for (std::size_t j = 0; j < vs.size(); ++j)
          if (j != i) r.push_back(vs[j]);
        ridges[r].emplace_back(k, i);
      }
    }
    nbr_facet_.assign(m_, std::vector<std::size_t>(d_));
    nbr_vertex_.assign(m_, std::vector<std::size_t>(d_));
    for (const auto& [r, owners] : ridges) {
      if (owners.size() != 2) throw InternalError("analysis: ridge not shared by exactly two facets");
      for (int s = 0; s < 2; ++s) {
        auto [k, i] = owners[s];
        auto [k2, i2] = owners[1 - s];
        nbr_facet_[k][i] = k2;
        nbr_vertex_[k][i] = p.facet(k2).vertex_indices[i2];
      }
    }
    frames_.resize(m_);
  }

  const LatticePolytope& polytope() const { return p_; }
  std::size_t dim() const { return d_; }
  std::size_t num_vertices() const { return n_; }
  std::size_t num_facets() const { return m_; }

  /// <u_F, x> for facet k and vertex x.
  const Integer& level(std::size_t k, std::size_t x) const { return level_[k][x]; }
  /// Neighboring facet / vertex across the i-th vertex of facet k.
  std::size_t nbr_facet(std::size_t k, std::size_t i) const { return nbr_facet_[k][i]; }
  std::size_t nbr_vertex(std::size_t k, std::size_t i) const { return nbr_vertex_[k][i]; }

  const IntegralFrame& frame(std::size_t k) {
    if (!frames_[k]) frames_[k] = integral_frame(p_.facet_vertices(k));
    return *frames_[k];
  }
  /// denom * <u_F^{v_i}, x> for the i-th vertex of facet k.
  Integer scaled_coordinate(std::size_t k, std::size_t i, const IntVector& x) { return dot(frame(k).adj[i], x); }

 private:
  const LatticePolytope& p_;
  std::size_t d_, n_, m_;
  std::vector<std::vector<Integer>> level_;
  std::vector<std::vector<std::size_t>> nbr_facet_, nbr_vertex_;
  std::vector<std::optional<IntegralFrame>> frames_;
};

inline std::size_t position_in_facet(const LatticePolytope& p, std::size_t facet, std::size_t vertex) {
  const auto& vs = p.facet(facet).vertex_indices;
  auto it = std::lower_bound(vs.begin(), vs.end(), vertex);
  if (it == vs.end() || *it != vertex) throw DomainError("vertex does not lie on the facet");
  return static_cast<std::size_t>(it - vs.begin());
}

}  // namespace detail

/// Indices of the facets F with nu_P in the cone R_{>=0} F.
inline std::vector<std::size_t> special_facet_indices(const LatticePolytope& p) {
  detail::require_simplicial_reflexive(p, "special_facets");
  const IntVector nu = vertex_sum(p);
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < p.facets().size(); ++k) {
    if (is_zero(nu)) {
      out.push_back(k);
      continue;
    }
    RatVector lambda = solve_rational(IntMatrix::from_columns(p.facet_vertices(k)), nu);
    if (std::all_of(lambda.begin(), lambda.end(), [](const Rational& x) { return x >= 0; })) out.push_back(k);
  }
  if (out.empty()) throw InternalError("special_facets: no special facet");
  return out;
}

inline std::vector<Facet> special_facets(const LatticePolytope& p) {
  std::vector<Facet> out;
  for (std::size_t k : special_facet_indices(p)) out.push_back(p.facet(k));
  return out;
}

/// Number of vertices on each level <u_F, x> = i of a facet.
struct SliceDistribution {
  std::map<Integer, std::size_t> counts;
  Integer nu_level;

  std::size_t count(long level) const {
    auto it = counts.find(Integer(level));
    return it == counts.end() ? 0 : it->second;
  }
};

inline SliceDistribution hyperplane_distribution(const LatticePolytope& p, std::size_t facet) {
  if (!is_reflexive(p)) throw DomainError("hyperplane_distribution: polytope is not reflexive");
  const Facet& f = p.facet(facet);
  SliceDistribution s;
  for (const auto& v : p.vertices()) ++s.counts[dot(f.normal, v)];
  s.nu_level = dot(f.normal, vertex_sum(p));
  return s;
}

enum class Case { A, B, C };

inline const char* to_string(Case c) {
  switch (c) {
    case Case::A: return "A";
    case Case::B: return "B";
    case Case::C: return "C";
  }
  return "?";
}

/// Distribution of the 3d-1 vertices along a special facet.
///   A: levels 1, 0, -1, -2 hold d, d, d-2, 1 vertices and <u_F, nu> = 0
///   B: levels 1, 0, -1 hold d, d-1, d and <u_F, nu> = 0
///   C: levels 1, 0, -1 hold d, d, d-1 and <u_F, nu> = 1
inline Case classify_case(const LatticePolytope& p, std::size_t facet) {
  detail::require_simplicial_reflexive(p, "classify_case");
  const std::size_t d = p.dim();
  if (p.num_vertices() != 3 * d - 1) throw DomainError("classify_case: polytope does not have 3d-1 vertices");
  const auto special = special_facet_indices(p);
  if (!std::binary_search(special.begin(), special.end(), facet))
    throw DomainError("classify_case: facet is not special");
  const SliceDistribution s = hyperplane_distribution(p, facet);
  auto matches = [&](std::vector<std::pair<long, std::size_t>> row) {
    std::size_t listed = 0;
    for (auto [level, count] : row) {
      if (s.count(level) != count) return false;
      listed += count;
    }
    return listed == p.num_vertices();
  };
  std::vector<Case> hits;
  if (matches({{1, d}, {0, d}, {-1, d - 2}, {-2, 1}})) hits.push_back(Case::A);
  if (matches({{1, d}, {0, d - 1}, {-1, d}})) hits.push_back(Case::B);
  if (matches({{1, d}, {0, d}, {-1, d - 1}})) hits.push_back(Case::C);
  if (hits.size() != 1) throw ClassificationError("classify_case: distribution matches no case of the table");
  const Integer expected = hits.front() == Case::C ? 1 : 0;
  if (s.nu_level != expected)
    throw ClassificationError(std::string("classify_case: <u_F, nu> = ") + s.nu_level.str() + " contradicts case " +
                              to_string(hits.front()));
  return hits.front();
}

/// The facet sharing every vertex of `facet` except `vertex`.
inline std::size_t neighboring_facet(const LatticePolytope& p, std::size_t facet, std::size_t vertex) {
  if (!is_simplicial(p)) throw DomainError("neighboring_facet: polytope is not simplicial");
  detail::position_in_facet(p, facet, vertex);
  const auto& vs = p.facet(facet).vertex_indices;
  for (std::size_t k = 0; k < p.facets().size(); ++k) {
    if (k == facet) continue;
    bool all = true;
    for (std::size_t x : vs)
      if (x != vertex && !p.facet(k).contains_vertex(x)) {
        all = false;
        break;
      }
    if (all) return k;
  }
  throw InternalError("neighboring_facet: no facet across the ridge");
}

/// The vertex of the neighboring facet that is not on `facet`.
inline std::size_t neighboring_vertex(const LatticePolytope& p, std::size_t facet, std::size_t vertex) {
  const std::size_t k = neighboring_facet(p, facet, vertex);
  for (std::size_t x : p.facet(k).vertex_indices)
    if (!p.facet(facet).contains_vertex(x)) return x;
  throw InternalError("neighboring_vertex: neighboring facet adds no vertex");
}

/// Dual basis u_F^v of a simplicial facet of a reflexive polytope.
struct FacetFrame {
  std::size_t facet_index = 0;
  Facet facet;
  std::map<std::size_t, RatVector> dual_basis;  // keyed by vertex index
  IntVector normal;                             // u_F
};

inline FacetFrame facet_frame(const LatticePolytope& p, std::size_t facet) {
  detail::require_simplicial_reflexive(p, "facet_frame");
  const auto fr = detail::integral_frame(p.facet_vertices(facet));
  FacetFrame out{facet, p.facet(facet), {}, p.facet(facet).normal};
  const auto& vs = out.facet.vertex_indices;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    RatVector u;
    for (const auto& a : fr.adj[i]) u.emplace_back(a, fr.denom);
    out.dual_basis.emplace(vs[i], std::move(u));
  }
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = 0; j < vs.size(); ++j)
      if (dot(out.dual_basis.at(vs[i]), p.vertex(vs[j])) != (i == j ? 1 : 0))
        throw InternalError("facet_frame: dual basis identity fails");
  return out;
}

/// Lattice points of a simplex facet. A point sum(l_i v_i) with sum(l_i) = 1
/// is either a vertex or has every l_i in [0, 1), so the candidates are the
/// coset representatives of Z^d modulo the lattice spanned by the vertices,
/// reduced into the half-open parallelepiped.
inline std::vector<IntVector> facet_lattice_points(const LatticePolytope& p, std::size_t facet) {
  const auto verts = p.facet_vertices(facet);
  const std::size_t d = p.dim();
  if (verts.size() != d) throw DomainError("facet_lattice_points: facet is not a simplex");
  std::vector<IntVector> out = verts;
  const IntMatrix a = IntMatrix::from_columns(verts);
  if (detail::abs_value(det(a)) == 1) return out;
  const SmithForm s = smith_decomposition(a);
  const IntVector diag = s.diagonal();
  Integer volume = 1;
  for (const auto& x : diag) volume *= x;
  if (volume == 1) return out;
  const IntMatrix u_inv = hermite_normal_form(s.u).u;
  IntVector y = zero_vector(d);
  for (;;) {
    const IntVector x = u_inv * y;
    RatVector lambda = solve_rational(a, x);
    Rational height = 0;
    IntVector point = zero_vector(d);
    bool fractional = false;
    for (std::size_t i = 0; i < d; ++i) {
      Rational frac = lambda[i] - Rational(floor_div(numerator(lambda[i]), denominator(lambda[i])));
      if (frac != 0) fractional = true;
      height += frac;
      lambda[i] = frac;
    }
    if (fractional && height == 1) {
      RatVector r(d, Rational(0));
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) r[j] += lambda[i] * verts[i][j];
      auto integral = to_integral(r);
      if (!integral) throw InternalError("facet_lattice_points: coset representative is not integral");
      out.push_back(std::move(*integral));
    }
    std::size_t j = 0;
    while (j < d && y[j] + 1 >= diag[j]) y[j] = 0, ++j;
    if (j == d) break;
    ++y[j];
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

/// Boundary lattice points of a simplicial polytope, gathered facet by facet.
inline std::vector<IntVector> boundary_lattice_points(const LatticePolytope& p) {
  if (!is_simplicial(p)) return lattice_points(p).boundary;
  std::set<IntVector> all;
  for (std::size_t k = 0; k < p.facets().size(); ++k)
    for (auto& x : facet_lattice_points(p, k)) all.insert(std::move(x));
  return {all.begin(), all.end()};
}

/// v + w when v + w != 0 and v, w share no facet; nothing otherwise.
inline std::optional<IntVector> partial_add(const LatticePolytope& p, const IntVector& v, const IntVector& w) {
  if (!is_reflexive(p)) throw DomainError("partial_add: polytope is not reflexive");
  if (v.size() != p.dim() || w.size() != p.dim()) throw DimensionError("partial_add: point dimension mismatch");
  if (contains(p, v).location != Location::boundary || contains(p, w).location != Location::boundary)
    throw DomainError("partial_add: arguments must be boundary lattice points");
  IntVector sum = v + w;
  if (is_zero(sum) || share_a_facet(p, v, w)) return std::nullopt;
  if (contains(p, sum).location != Location::boundary)
    throw InternalError("partial_add: sum of unrelated boundary points left the boundary");
  return sum;
}

/// P intersected with lin(v, w, w'), in a basis of the rank-2 lattice N
/// intersected with that plane.
inline LatticePolytope section_2d(const LatticePolytope& p, const IntVector& v, const IntVector& w, const IntVector& w2) {
  const std::size_t d = p.dim();
  if (v.size() != d || w.size() != d || w2.size() != d) throw DimensionError("section_2d: point dimension mismatch");
  const IntMatrix span = IntMatrix::from_rows({v, w, w2});
  if (rank(span) != 2) throw DomainError("section_2d: points do not span a plane");
  // span = U^{-1} D V^{-1}: the first two rows of V^{-1} are a basis of the
  // saturated plane lattice, and x V gives coordinates in that basis.
  const SmithForm s = smith_decomposition(span);
  const IntMatrix v_inv = hermite_normal_form(s.v).u;
  const IntVector b1 = v_inv.row(0), b2 = v_inv.row(1);

  // The section's polar is the hull of the projected facet normals scaled by
  // 1/offset; each polar edge gives a section vertex.
  using Point = std::pair<Rational, Rational>;
  std::vector<Point> q;
  for (const auto& f : p.facets()) q.emplace_back(Rational(dot(f.normal, b1), f.offset), Rational(dot(f.normal, b2), f.offset));
  std::sort(q.begin(), q.end());
  q.erase(std::unique(q.begin(), q.end()), q.end());
  auto cross = [](const Point& o, const Point& a, const Point& b) {
    return (a.first - o.first) * (b.second - o.second) - (a.second - o.second) * (b.first - o.first);
  };
  std::vector<Point> hull(2 * q.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], q[i]) <= 0) --k;
    hull[k++] = q[i];
  }
  for (std::size_t i = q.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross(hull[k - 2], hull[k - 1], q[i]) <= 0) --k;
    hull[k++] = q[i];
  }
  hull.resize(k - 1);
  if (hull.size() < 3) throw InternalError("section_2d: section is unbounded");

  std::vector<IntVector> verts;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point& a = hull[i];
    const Point& b = hull[(i + 1) % hull.size()];
    // Solve a.x = 1, b.x = 1.
    const Rational det2 = a.first * b.second - a.second * b.first;
    if (det2 == 0) throw InternalError("section_2d: origin is not interior to the section");
    const Rational x = (b.second - a.second) / det2;
    const Rational y = (a.first - b.first) / det2;
    if (denominator(x) != 1 || denominator(y) != 1)
      throw InternalError("section_2d: section vertex is not a lattice point");
    verts.push_back({numerator(x), numerator(y)});
  }
  return LatticePolytope(std::move(verts));
}

/// Result of the determinant descent towards a unimodular facet.
struct BasisDescent {
  std::size_t facet_index = 0;
  std::vector<Integer> dets;  // |det| of every visited facet, strictly decreasing
};

/// Walks across neighboring facets while |det| drops until it reaches a
/// facet whose vertices form a lattice basis. Every visited facet that is not
/// a basis must have at least d-1 neighboring vertices on level 0; otherwise
/// DomainError.
inline BasisDescent find_basis_facet(const LatticePolytope& p) {
  detail::require_simplicial_reflexive(p, "find_basis_facet");
  detail::Analysis an(p);
  const std::size_t d = p.dim();
  BasisDescent out;
  std::size_t k = 0;
  for (;;) {
    const auto& fr = an.frame(k);
    out.dets.push_back(fr.denom);
    if (out.dets.size() > 1 && !(out.dets.back() < out.dets[out.dets.size() - 2]))
      throw InternalError("find_basis_facet: determinant did not decrease");
    if (fr.denom == 1) {
      out.facet_index = k;
      return out;
    }
    std::size_t level0 = 0;
    std::optional<std::size_t> step;
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t y = an.nbr_vertex(k, i);
      if (an.level(k, y) != 0) continue;
      ++level0;
      if (!step && an.scaled_coordinate(k, i, p.vertex(y)) != -fr.denom) step = i;
    }
    if (level0 + 1 < d) throw DomainError("find_basis_facet: facet " + std::to_string(k) + " has fewer than d-1 neighbors on level 0");
    if (!step) throw InternalError("find_basis_facet: no facet to descend to");
    k = an.nbr_facet(k, *step);
  }
}

/// A failed lemma conclusion: which statement, on which facet, and the
/// vertex indices that instantiate it.
struct Violation {
  std::string lemma;
  std::size_t facet = 0;
  std::vector<std::size_t> witness;
  IntVector point;  // lattice point involved when it is not a vertex

  friend bool operator==(const Violation&, const Violation&) = default;
};

struct LemmaReport {
  std::vector<Violation> violations;            // sorted by lemma id, then facet
  std::map<std::string, std::size_t> checked;   // instantiations meeting the hypothesis
  std::map<std::string, std::size_t> vacuous;   // instantiations failing the hypothesis

  bool ok() const { return violations.empty(); }

  /// One line per violation: LEMMA <id> FACET <k> WITNESS <indices>.
  std::string text() const {
    std::string s;
    for (const auto& v : violations) {
      s += "LEMMA " + v.lemma + " FACET " + std::to_string(v.facet) + " WITNESS";
      for (std::size_t i : v.witness) s += " " + std::to_string(i);
      if (!v.point.empty()) s += " POINT " + to_string(v.point, ",");
      s += "\n";
    }
    return s;
  }
};

/// Lemma ids used by check_lemmas:
///   transform-identity  <u_F',x> = <u_F,x> + (<u_F',v>-1)<u_F^v,x>, with <u_F',v>-1 <= -1
///   lower-bound         <u_F,x>-1 <= <u_F^v,x>, equality only on the neighboring facet
///   basis-minus-one     level-0 neighbor of a basis facet has dual coordinate -1
///   level0-neighbor     boundary lattice points on level 0 lie on a neighboring facet
///   level0-sign         a level-0 vertex is N(F,w) iff <u_F^w, v> < 0
///   level0-sum          v on exactly one neighboring facet N(F,w): v, w unrelated and v+w in F
///   basis-criterion     d-1 level-0 neighbors with dual coordinate -1 force a basis
///   opposite-exclusion  no level -1 vertex with two such dual coordinates -1
///   level0-structure    level 0 is {-y + z_y} and F is a basis, when F has only vertices
///   level-1-negation    level -1 vertices are negated facet vertices, same hypothesis
inline LemmaReport check_lemmas(const LatticePolytope& p) {
  detail::require_simplicial_reflexive(p, "check_lemmas");
  detail::Analysis an(p);
  const std::size_t d = p.dim(), n = p.num_vertices();
  LemmaReport rep;
  auto hit = [&](const char* id, bool hypothesis) { ++(hypothesis ? rep.checked : rep.vacuous)[id]; };
  auto fail = [&](const char* id, std::size_t k, std::vector<std::size_t> witness, IntVector point = {}) {
    rep.violations.push_back(Violation{id, k, std::move(witness), std::move(point)});
  };
  std::vector<std::vector<IntVector>> on_facet(an.num_facets());
  std::set<IntVector> boundary_set;
  for (std::size_t k = 0; k < an.num_facets(); ++k) {
    on_facet[k] = facet_lattice_points(p, k);
    boundary_set.insert(on_facet[k].begin(), on_facet[k].end());
  }
  const std::vector<IntVector> boundary(boundary_set.begin(), boundary_set.end());
  std::vector<std::optional<std::size_t>> vertex_of(boundary.size());
  for (std::size_t b = 0; b < boundary.size(); ++b) vertex_of[b] = p.index_of(boundary[b]);

  for (std::size_t k = 0; k < an.num_facets(); ++k) {
    const Facet& f = p.facet(k);
    const auto& fr = an.frame(k);
    const Integer& den = fr.denom;
    // scaled[i][x] = den * <u_F^{v_i}, x>
    std::vector<std::vector<Integer>> scaled(d, std::vector<Integer>(n));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t x = 0; x < n; ++x) scaled[i][x] = an.scaled_coordinate(k, i, p.vertex(x));
    std::vector<std::size_t> level0, level_m1;
    for (std::size_t x = 0; x < n; ++x) {
      if (an.level(k, x) == 0) level0.push_back(x);
      if (an.level(k, x) == -1) level_m1.push_back(x);
    }
    const bool basis = den == 1;

    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t v = f.vertex_indices[i];
      const std::size_t k2 = an.nbr_facet(k, i);
      const std::size_t v2 = an.nbr_vertex(k, i);
      const Integer coeff = an.level(k2, v) - 1;

      hit("transform-identity", true);
      if (coeff > -1) fail("transform-identity", k, {v});
      for (std::size_t x = 0; x < n; ++x)
        if (den * an.level(k2, x) != den * an.level(k, x) + coeff * scaled[i][x]) fail("transform-identity", k, {v, x});

      hit("lower-bound", true);
      for (std::size_t x = 0; x < n; ++x) {
        const Integer lhs = den * (an.level(k, x) - 1);
        if (lhs > scaled[i][x]) fail("lower-bound", k, {v, x});
        if (lhs == scaled[i][x] && an.level(k2, x) != 1) fail("lower-bound", k, {v, x});
      }

      const bool hyp3 = basis && an.level(k, v2) == 0;
      hit("basis-minus-one", hyp3);
      if (hyp3 && scaled[i][v2] != -den) fail("basis-minus-one", k, {v, v2});
    }

    // Boundary lattice points on level 0 lie on some neighboring facet.
    for (std::size_t b = 0; b < boundary.size(); ++b) {
      if (dot(f.normal, boundary[b]) != 0) continue;
      hit("level0-neighbor", true);
      bool on = false;
      for (std::size_t i = 0; i < d && !on; ++i) on = dot(p.facet(an.nbr_facet(k, i)).normal, boundary[b]) == 1;
      if (!on) {
        if (vertex_of[b])
          fail("level0-neighbor", k, {*vertex_of[b]});
        else
          fail("level0-neighbor", k, {}, boundary[b]);
      }
    }
    if (level0.size() > d) fail("level0-neighbor", k, level0);

    for (std::size_t x : level0) {
      std::size_t on_count = 0, last = 0;
      for (std::size_t i = 0; i < d; ++i) {
        const std::size_t w = f.vertex_indices[i];
        hit("level0-sign", true);
        const bool is_nbr = an.nbr_vertex(k, i) == x;
        if (is_nbr != (scaled[i][x] < 0)) fail("level0-sign", k, {x, w});
        if (an.level(an.nbr_facet(k, i), x) == 1) ++on_count, last = i;
      }
      hit("level0-sum", on_count == 1);
      if (on_count != 1) continue;
      const std::size_t w = f.vertex_indices[last];
      const IntVector sum = p.vertex(x) + p.vertex(w);
      if (share_a_facet(p, p.vertex(x), p.vertex(w)) || dot(f.normal, sum) != 1 ||
          contains(p, sum).location != Location::boundary)
        fail("level0-sum", k, {x, w});
    }

    std::vector<std::size_t> minus_one;  // positions i with N(F,v_i) on level 0 and coordinate -1
    for (std::size_t i = 0; i < d; ++i) {
      const std::size_t y = an.nbr_vertex(k, i);
      if (an.level(k, y) == 0 && scaled[i][y] == -den) minus_one.push_back(i);
    }
    hit("basis-criterion", minus_one.size() + 1 >= d);
    if (minus_one.size() + 1 >= d && !basis) fail("basis-criterion", k, f.vertex_indices);

    for (std::size_t a = 0; a < minus_one.size(); ++a)
      for (std::size_t b = a + 1; b < minus_one.size(); ++b) {
        const std::size_t i1 = minus_one[a], i2 = minus_one[b];
        const std::size_t y1 = an.nbr_vertex(k, i1), y2 = an.nbr_vertex(k, i2);
        hit("opposite-exclusion", y1 != y2);
        if (y1 == y2) continue;
        for (std::size_t x : level_m1)
          if (scaled[i1][x] == -den && scaled[i2][x] == -den)
            fail("opposite-exclusion", k, {f.vertex_indices[i1], f.vertex_indices[i2], x});
      }

    const bool only_vertices = on_facet[k].size() == d;
    const bool hyp_old = only_vertices && level0.size() == d;
    hit("level0-structure", hyp_old);
    hit("level-1-negation", hyp_old);
    if (!hyp_old) continue;
    if (!basis) fail("level0-structure", k, f.vertex_indices);
    // Perfect matching y -> x in level 0 with x + y a vertex of F.
    std::vector<std::vector<std::size_t>> edges(d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < level0.size(); ++j) {
        auto z = p.index_of(p.vertex(level0[j]) + p.vertex(f.vertex_indices[i]));
        if (z && f.contains_vertex(*z)) edges[i].push_back(j);
      }
    std::vector<std::size_t> match(level0.size(), d);
    std::size_t matched = 0;
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<char> seen(level0.size(), 0);
      auto augment = [&](auto&& self, std::size_t u) -> bool {
        for (std::size_t j : edges[u]) {
          if (seen[j]) continue;
          seen[j] = 1;
          if (match[j] == d || self(self, match[j])) {
            match[j] = u;
            return true;
          }
        }
        return false;
      };
      if (augment(augment, i)) ++matched;
    }
    if (matched != d) fail("level0-structure", k, level0);
    for (std::size_t x : level_m1) {
      auto z = p.index_of(-p.vertex(x));
      if (!z || !f.contains_vertex(*z)) fail("level-1-negation", k, {x});
    }
  }

  std::stable_sort(rep.violations.begin(), rep.violations.end(), [](const Violation& a, const Violation& b) {
    return std::tie(a.lemma, a.facet) < std::tie(b.lemma, b.facet);
  });
  return rep;
}

}  // namespace reflex
