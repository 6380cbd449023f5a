#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reflex/errors.hpp"
#include "reflex/fano.hpp"
#include "reflex/numeric.hpp"
#include "reflex/polytope.hpp"

namespace reflex {

/// conv(P x {0} and {0} x Q) in N1 + N2. Facets are the joins of a facet of
/// each summand, so no hull is computed.
inline LatticePolytope free_sum(const LatticePolytope& p, const LatticePolytope& q) {
  const std::size_t d1 = p.dim(), d2 = q.dim();
  std::vector<IntVector> verts;
  for (const auto& v : p.vertices()) {
    IntVector x = zero_vector(d1 + d2);
    std::copy(v.begin(), v.end(), x.begin());
    verts.push_back(std::move(x));
  }
  for (const auto& w : q.vertices()) {
    IntVector x = zero_vector(d1 + d2);
    std::copy(w.begin(), w.end(), x.begin() + static_cast<std::ptrdiff_t>(d1));
    verts.push_back(std::move(x));
  }
  std::vector<std::pair<IntVector, Integer>> ineqs;
  for (const auto& f : p.facets())
    for (const auto& g : q.facets()) {
      // <a,x>/c + <b,y>/e <= 1, cleared of denominators.
      const Integer l = boost::multiprecision::lcm(f.offset, g.offset);
      IntVector n;
      for (const auto& a : f.normal) n.push_back(a * (l / f.offset));
      for (const auto& b : g.normal) n.push_back(b * (l / g.offset));
      ineqs.emplace_back(std::move(n), l);
    }
  return LatticePolytope::with_known_facets(std::move(verts), std::move(ineqs));
}

/// P x Q; its facets are F x Q and P x G.
inline LatticePolytope cartesian_product(const LatticePolytope& p, const LatticePolytope& q) {
  const std::size_t d1 = p.dim(), d2 = q.dim();
  std::vector<IntVector> verts;
  for (const auto& v : p.vertices())
    for (const auto& w : q.vertices()) {
      IntVector x = v;
      x.insert(x.end(), w.begin(), w.end());
      verts.push_back(std::move(x));
    }
  std::vector<std::pair<IntVector, Integer>> ineqs;
  for (const auto& f : p.facets()) {
    IntVector n = f.normal;
    n.resize(d1 + d2, Integer(0));
    ineqs.emplace_back(std::move(n), f.offset);
  }
  for (const auto& g : q.facets()) {
    IntVector n = zero_vector(d1);
    n.insert(n.end(), g.normal.begin(), g.normal.end());
    ineqs.emplace_back(std::move(n), g.offset);
  }
  return LatticePolytope::with_known_facets(std::move(verts), std::move(ineqs));
}

enum class Named { seg, v2, tv2, e1, e2, q3, q3p };

inline const char* to_string(Named n) {
  switch (n) {
    case Named::seg: return "seg";
    case Named::v2: return "v2";
    case Named::tv2: return "tv2";
    case Named::e1: return "e1";
    case Named::e2: return "e2";
    case Named::q3: return "q3";
    case Named::q3p: return "q3p";
  }
  return "?";
}

inline std::optional<Named> parse_named(std::string_view s) {
  for (Named n : {Named::seg, Named::v2, Named::tv2, Named::e1, Named::e2, Named::q3, Named::q3p})
    if (s == to_string(n)) return n;
  return std::nullopt;
}

/// Position of nu_P forced for each exceptional factor of the classification.
inline NuKind expected_nu_kind(Named n) {
  switch (n) {
    case Named::tv2:
    case Named::q3p: return NuKind::vertex;
    case Named::e1: return NuKind::boundary_nonvertex;
    default: return NuKind::zero;
  }
}

namespace detail {

inline LatticePolytope from_rows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<IntVector> verts;
  for (auto r : rows) verts.push_back(make_vector(r));
  return LatticePolytope(std::move(verts));
}

inline std::vector<IntVector> hexagon() {
  return {make_vector({1, 0}), make_vector({1, 1}), make_vector({0, 1}),
          make_vector({-1, 0}), make_vector({-1, -1}), make_vector({0, -1})};
}

/// conv(hexagon x {0}, e3, w - e3).
inline LatticePolytope q3_with_apexes(const IntVector& w) {
  std::vector<IntVector> verts;
  for (const auto& h : hexagon()) verts.push_back({h[0], h[1], 0});
  verts.push_back(make_vector({0, 0, 1}));
  verts.push_back({w[0], w[1], -1});
  return LatticePolytope(std::move(verts));
}

/// The two vertices off the hexagon plane add up to a hexagon vertex.
inline bool apexes_sum_to_vertex(const LatticePolytope& p) {
  std::vector<IntVector> apexes;
  for (const auto& v : p.vertices())
    if (v[2] != 0) apexes.push_back(v);
  if (apexes.size() != 2) return false;
  const IntVector s = apexes[0] + apexes[1];
  return s[2] == 0 && p.index_of(s).has_value();
}

struct Battery {
  std::size_t dim;
  std::size_t vertices;
  bool smooth;
  NuKind nu;
};

inline Battery battery_for(Named n) {
  switch (n) {
    case Named::seg: return {1, 2, true, NuKind::zero};
    case Named::v2: return {2, 6, true, NuKind::zero};
    case Named::tv2: return {2, 5, true, NuKind::vertex};
    case Named::e1: return {2, 5, false, NuKind::boundary_nonvertex};
    case Named::e2: return {2, 5, false, NuKind::zero};
    case Named::q3: return {3, 8, true, NuKind::zero};
    case Named::q3p: return {3, 8, true, NuKind::vertex};
  }
  throw InternalError("battery_for: unknown name");
}

/// Empty string when p passes every check expected of the named polytope,
/// otherwise the first failed check.
inline std::string battery_failure(Named n, const LatticePolytope& p) {
  const Battery b = battery_for(n);
  if (p.dim() != b.dim) return "dimension";
  if (p.num_vertices() != b.vertices) return "vertex count";
  if (!is_reflexive(p)) return "reflexive";
  if (!is_simplicial(p)) return "simplicial";
  if (is_smooth_fano(p) != b.smooth) return "smoothness";
  if (nu_kind(p) != b.nu) return "vertex sum";
  if (n == Named::q3 && !is_centrally_symmetric(p)) return "central symmetry";
  if (n == Named::q3p && !apexes_sum_to_vertex(p)) return "apex relation";
  return {};
}

}  // namespace detail

/// Fixed representative of a named polytope, checked against its defining
/// properties before it is returned.
inline LatticePolytope construct(Named n) {
  auto checked = [n](LatticePolytope p) {
    const std::string bad = detail::battery_failure(n, p);
    if (!bad.empty()) throw ConstructionError(std::string("construct ") + to_string(n) + ": fails " + bad);
    return p;
  };
  switch (n) {
    case Named::seg: return checked(detail::from_rows({{1}, {-1}}));
    case Named::v2: return checked(LatticePolytope(detail::hexagon()));
    case Named::tv2: return checked(detail::from_rows({{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}}));
    case Named::e1: return checked(detail::from_rows({{1, 0}, {0, 1}, {-1, 1}, {-1, -1}, {0, -1}}));
    case Named::e2: return checked(detail::from_rows({{1, 0}, {0, 1}, {-1, 1}, {-1, -1}, {1, -1}}));
    case Named::q3: return checked(free_sum(construct(Named::v2), construct(Named::seg)));
    case Named::q3p: {
      LatticePolytope first = detail::q3_with_apexes(make_vector({1, 0}));
      if (detail::battery_failure(n, first).empty()) return first;
      for (const auto& w : detail::hexagon()) {
        LatticePolytope p = detail::q3_with_apexes(w);
        if (detail::battery_failure(n, p).empty()) return p;
      }
      throw ConstructionError("construct q3p: no apex pair passes");
    }
  }
  throw ConstructionError("construct: unknown name");
}

inline LatticePolytope construct(std::string_view name) {
  auto n = parse_named(name);
  if (!n) throw DomainError("construct: unknown name '" + std::string(name) + "'");
  return construct(*n);
}

/// A member of the list: an exceptional factor free-summed with copies of V2.
struct ClassificationEntry {
  Named exceptional;
  std::size_t v2_copies = 0;
  LatticePolytope polytope;

  std::string name() const {
    std::string s = to_string(exceptional);
    for (auto& c : s) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    if (v2_copies) s += "+" + std::to_string(v2_copies) + "V2";
    return s;
  }
};

/// Simplicial reflexive d-polytopes with 3d-1 vertices: TV2, E1, E2 for
/// even d and Q3, Q3P for odd d, each with enough copies of V2 to reach d.
/// d = 2 gives the three 5-vertex polygons.
inline std::vector<ClassificationEntry> classification_entries(std::size_t d) {
  if (d < 2) throw DomainError("classification_list: dimension must be at least 2");
  const bool even = d % 2 == 0;
  const std::size_t copies = even ? (d - 2) / 2 : (d - 3) / 2;
  std::vector<Named> heads = even ? std::vector<Named>{Named::tv2, Named::e1, Named::e2}
                                  : std::vector<Named>{Named::q3, Named::q3p};
  const LatticePolytope v2 = construct(Named::v2);
  std::vector<ClassificationEntry> out;
  for (Named h : heads) {
    LatticePolytope p = construct(h);
    for (std::size_t i = 0; i < copies; ++i) p = free_sum(p, v2);
    out.push_back(ClassificationEntry{h, copies, std::move(p)});
  }
  return out;
}

inline std::vector<LatticePolytope> classification_list(std::size_t d) {
  std::vector<LatticePolytope> out;
  for (auto& e : classification_entries(d)) out.push_back(std::move(e.polytope));
  return out;
}

/// Free sum of d/2 copies of V2, the polytope with the most vertices.
inline LatticePolytope casagrande_extremal(std::size_t d) {
  if (d == 0 || d % 2 != 0) throw DomainError("casagrande_extremal: dimension must be even and positive");
  const LatticePolytope v2 = construct(Named::v2);
  LatticePolytope p = v2;
  for (std::size_t i = 1; i < d / 2; ++i) p = free_sum(p, v2);
  return p;
}

}  // namespace reflex
