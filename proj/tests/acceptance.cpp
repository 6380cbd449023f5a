// Acceptance suite: one PASS/FAIL line per criterion, each with its runtime
// against its limit. Exit status is 0 only when every criterion passes.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "oracles.hpp"

using namespace reflex;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::vector<LatticePolytope> polygons() {
  std::vector<LatticePolytope> out;
  for (const auto& c : enumerate_reflexive_polygons()) out.push_back(c.representative);
  return out;
}

/// The 16 polygons and every member of the classification list for
/// 3 <= d <= 6, which includes Q3 and Q3'.
std::vector<std::pair<std::string, LatticePolytope>> corpus() {
  std::vector<std::pair<std::string, LatticePolytope>> out;
  const auto polys = polygons();
  for (std::size_t i = 0; i < polys.size(); ++i) out.emplace_back("polygon-" + std::to_string(i + 1), polys[i]);
  for (std::size_t d = 3; d <= 6; ++d)
    for (auto& e : classification_entries(d)) out.emplace_back(e.name(), std::move(e.polytope));
  return out;
}

LatticePolytope random_image(const LatticePolytope& p, std::mt19937_64& rng) {
  return p.unimodular_image(oracle::random_unimodular(p.dim(), rng)).permuted(oracle::random_order(p.num_vertices(), rng));
}

Outcome polygon_landscape() {
  Outcome o;
  const auto classes = enumerate_reflexive_polygons_in_box(3);
  std::map<std::size_t, std::size_t> hist;
  for (const auto& c : classes) ++hist[c.vertex_count];
  o.require(classes.size() == 16, std::to_string(classes.size()) + " classes");
  o.require(hist[5] == 3, std::to_string(hist[5]) + " classes with 5 vertices");
  o.require(hist[6] == 1, std::to_string(hist[6]) + " classes with 6 vertices");
  for (const auto& c : classes)
    if (c.vertex_count == 6) {
      o.require(c.smooth, "6-vertex class is not smooth");
      o.require(is_isomorphic(c.representative, construct(Named::v2)), "6-vertex class is not V2");
      o.require(oracle::isomorphic(c.representative, construct(Named::v2)), "oracle: 6-vertex class is not V2");
    }
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      o.require(!oracle::isomorphic(classes[i].representative, classes[j].representative), "oracle: duplicate class");
  if (o.ok) o.detail = "16 classes, 3 with 5 vertices, 1 with 6 (smooth, V2)";
  return o;
}

Outcome five_vertex_taxonomy_check() {
  Outcome o;
  std::vector<PolygonClass> five;
  for (auto& c : enumerate_reflexive_polygons())
    if (c.vertex_count == 5) five.push_back(std::move(c));
  std::size_t smooth = 0, nu_zero = 0, nu_boundary_nonvertex = 0;
  for (const auto& c : five) {
    if (c.smooth) {
      ++smooth;
      continue;
    }
    const IntVector nu = vertex_sum(c.representative);
    if (is_zero(nu))
      ++nu_zero;
    else if (!c.representative.index_of(nu) && contains(c.representative, nu).location == Location::boundary)
      ++nu_boundary_nonvertex;
  }
  o.require(five.size() == 3, "expected three 5-vertex classes");
  o.require(smooth == 1, std::to_string(smooth) + " smooth");
  o.require(nu_zero == 1, std::to_string(nu_zero) + " non-smooth with nu = 0");
  o.require(nu_boundary_nonvertex == 1, std::to_string(nu_boundary_nonvertex) + " non-smooth with nu on the boundary");
  const auto tax = five_vertex_taxonomy(enumerate_reflexive_polygons());
  for (const auto& [name, c] : tax)
    o.require(is_isomorphic(c.representative, construct(name)), std::string("taxonomy disagrees on ") + to_string(name));
  if (o.ok) o.detail = "TV2 smooth, E2 nu=0, E1 nu on boundary";
  return o;
}

Outcome three_folds() {
  Outcome o;
  const auto q3 = construct(Named::q3), q3p = construct(Named::q3p);
  for (const auto* p : {&q3, &q3p}) {
    o.require(is_simplicial(*p), "not simplicial");
    o.require(is_reflexive(*p), "not reflexive");
    o.require(is_smooth_fano(*p), "not smooth");
    o.require(p->num_vertices() == 8, "vertex count");
  }
  o.require(!is_isomorphic(q3, q3p), "Q3 and Q3' isomorphic");
  o.require(!oracle::isomorphic(q3, q3p), "oracle: Q3 and Q3' isomorphic");
  o.require(is_centrally_symmetric(q3), "Q3 not centrally symmetric");
  // v + v' = w for the two vertices off the hexagon plane.
  std::vector<IntVector> apexes;
  std::set<IntVector> hexagon;
  for (const auto& v : q3p.vertices()) (v[2] == 0 ? (void)hexagon.insert(v) : apexes.push_back(v));
  o.require(hexagon.size() == 6 && apexes.size() == 2, "Q3' does not have the hexagon shape");
  if (apexes.size() == 2) o.require(hexagon.count(apexes[0] + apexes[1]) == 1, "v + v' is not a hexagon vertex");
  if (hexagon.size() == 6) {
    std::vector<IntVector> h;
    for (const auto& x : hexagon) h.push_back({x[0], x[1]});
    o.require(is_isomorphic(LatticePolytope(h), construct(Named::v2)), "hexagon of Q3' is not V2");
  }
  if (o.ok) o.detail = "Q3, Q3' smooth with 8 vertices, distinct";
  return o;
}

Outcome theorem() {
  Outcome o;
  std::ostringstream summary;
  for (std::size_t d = 3; d <= 7; ++d) {
    const auto r = verify_theorem(d);
    o.require(r.passed(), "verify_theorem(" + std::to_string(d) + ") failed");
    const auto list = classification_list(d);
    o.require(list.size() == (d % 2 ? 2u : 3u), "member count");
    std::size_t smooth = 0;
    for (const auto& p : list) {
      o.require(is_simplicial(p) && is_reflexive(p), "member not simplicial reflexive");
      o.require(p.num_vertices() == 3 * d - 1, "member vertex count");
      o.require(picard_number(p) == 2 * d - 1, "member Picard number");
      smooth += is_smooth_fano(p);
    }
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t j = i + 1; j < list.size(); ++j) o.require(!is_isomorphic(list[i], list[j]), "isomorphic members");
    if (d % 2 == 0) o.require(smooth == 1, "d even: smooth members " + std::to_string(smooth));
    if (d % 2 == 1) o.require(smooth == list.size(), "d odd: smooth members " + std::to_string(smooth));
    summary << (d > 3 ? " " : "") << "d=" << d << ":" << list.size();
  }
  if (o.ok) o.detail = summary.str();
  return o;
}

Outcome casagrande() {
  Outcome o;
  for (std::size_t d : {2u, 4u, 6u, 8u}) {
    const auto r = verify_casagrande(d);
    o.require(r.passed(), "verify_casagrande(" + std::to_string(d) + ") failed");
    const auto p = casagrande_extremal(d);
    o.require(p.num_vertices() == 3 * d, "vertex count at d=" + std::to_string(d));
    o.require(picard_number(p) == 2 * d, "Picard number at d=" + std::to_string(d));
  }
  if (o.ok) o.detail = "3d vertices and Picard number 2d for d = 2, 4, 6, 8";
  return o;
}

Outcome case_table() {
  Outcome o;
  std::size_t facets = 0;
  for (std::size_t d = 3; d <= 6; ++d)
    for (const auto& e : classification_entries(d)) {
      const auto& p = e.polytope;
      const IntVector nu = vertex_sum(p);
      for (std::size_t k : special_facet_indices(p)) {
        ++facets;
        const IntVector& u = p.facet(k).normal;
        std::map<long, std::size_t> slices;
        for (const auto& v : p.vertices()) ++slices[static_cast<long>(dot(u, v))];
        const std::map<long, std::size_t> a{{1, d}, {0, d}, {-1, d - 2}, {-2, 1}};
        const std::map<long, std::size_t> b{{1, d}, {0, d - 1}, {-1, d}};
        const std::map<long, std::size_t> c{{1, d}, {0, d}, {-1, d - 1}};
        const int matches = (slices == a) + (slices == b) + (slices == c);
        o.require(matches == 1, e.name() + ": facet " + std::to_string(k) + " matches " + std::to_string(matches) + " rows");
        if (matches != 1) continue;
        const Case expected = slices == a ? Case::A : slices == b ? Case::B : Case::C;
        o.require(classify_case(p, k) == expected, e.name() + ": classify_case disagrees");
        const Integer level = dot(u, nu);
        o.require(level == (expected == Case::C ? 1 : 0), e.name() + ": <u_F, nu> = " + level.str());
        if (expected == Case::C)
          o.require(!is_zero(nu) && level == p.facet(k).offset, e.name() + ": case C but nu not on the facet");
        else
          o.require(is_zero(nu), e.name() + ": case A/B but nu != 0");
      }
    }
  if (o.ok) o.detail = std::to_string(facets) + " special facets";
  return o;
}

Outcome lemma_suite() {
  Outcome o;
  std::mt19937_64 rng(7);
  std::size_t runs = 0, instances = 0;
  for (const auto& [name, p] : corpus()) {
    for (int t = 0; t <= 100; ++t) {
      const LatticePolytope q = t == 0 ? p : random_image(p, rng);
      const auto r = check_lemmas(q);
      ++runs;
      for (const auto& [id, c] : r.checked) instances += c;
      o.require(r.ok(), name + ": " + r.text());
    }
  }
  if (o.ok) o.detail = std::to_string(runs) + " polytopes, " + std::to_string(instances) + " lemma instances, 0 violations";
  return o;
}

Outcome partial_addition_and_sections() {
  Outcome o;
  std::set<IntMatrix> keys;
  for (const auto& c : enumerate_reflexive_polygons()) keys.insert(c.key);
  std::size_t pairs = 0, sections = 0;
  for (const auto& [name, p] : corpus()) {
    const auto bd = lattice_points(p).boundary;
    o.require(std::set<IntVector>(bd.begin(), bd.end()) ==
                  [&] {
                    const auto b = boundary_lattice_points(p);
                    return std::set<IntVector>(b.begin(), b.end());
                  }(),
              name + ": boundary lattice points disagree");
    const std::set<IntVector> on_boundary(bd.begin(), bd.end());
    for (const auto& v : bd)
      for (const auto& w : bd) {
        ++pairs;
        const IntVector s = v + w;
        const bool lhs = !is_zero(s) && !share_a_facet(p, v, w);
        const bool rhs = on_boundary.count(s) > 0;
        o.require(lhs == rhs, name + ": partial addition fails for " + to_string(v, ",") + " + " + to_string(w, ","));
        const auto got = partial_add(p, v, w);
        o.require(got.has_value() == lhs && (!got || *got == s), name + ": partial_add disagrees");
      }
    const auto& vs = p.vertices();
    const std::size_t n = vs.size();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = b + 1; c < n; ++c) {
          if (a == b || a == c) continue;
          const IntVector& v = vs[a];
          if (vs[b] == -v || vs[c] == -v) continue;
          if (share_a_facet(p, v, vs[b]) || share_a_facet(p, v, vs[c])) continue;
          ++sections;
          const bool plane = rank(IntMatrix::from_rows({v, vs[b], vs[c]})) == 2;
          o.require(plane, name + ": vertices " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                               " span more than a plane");
          if (!plane) continue;
          const LatticePolytope s = section_2d(p, v, vs[b], vs[c]);
          o.require(is_reflexive(s), name + ": section is not reflexive");
          o.require(s.num_vertices() >= 5, name + ": section has " + std::to_string(s.num_vertices()) + " vertices");
          o.require(keys.count(normal_form(s).matrix) == 1, name + ": section is not one of the 16 polygons");
        }
  }
  if (o.ok)
    o.detail = std::to_string(pairs) + " boundary pairs, " + std::to_string(sections) + " sections";
  return o;
}

Outcome normal_form_stability() {
  Outcome o;
  std::mt19937_64 rng(9);
  std::size_t transforms = 0;
  for (const auto& [name, p] : corpus()) {
    o.require(oracle::facets_of(p) == oracle::facets(p.vertices()), name + ": hull differs from subset oracle");
    const IntMatrix key = normal_form(p).matrix;
    for (int t = 0; t < 1000; ++t) {
      const LatticePolytope q = random_image(p, rng);
      if (t < 5) {
        // Spot-check the transported facets against a fresh hull.
        const LatticePolytope fresh(q.vertices());
        o.require(fresh.facets() == q.facets(), name + ": transported facets differ from hull");
      }
      ++transforms;
      o.require(normal_form(q).matrix == key, name + ": normal form changed under transform " + std::to_string(t));
    }
  }
  if (o.ok) o.detail = std::to_string(transforms) + " transforms, hulls match oracle";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "polygon-landscape", 30, polygon_landscape},
      {2, "five-vertex-taxonomy", 1, five_vertex_taxonomy_check},
      {3, "three-dimensional-classification", 5, three_folds},
      {4, "theorem-d3-d7", 60, theorem},
      {5, "casagrande-equality", 10, casagrande},
      {6, "case-table", 60, case_table},
      {7, "lemma-suite", 300, lemma_suite},
      {8, "partial-addition-and-sections", 300, partial_addition_and_sections},
      {9, "normal-form-stability", 300, normal_form_stability},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.ok && secs > c.limit) {
      o.ok = false;
      o.detail = "over time limit";
    }
    if (!o.ok) ++failed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "(%.2fs / %.0fs)", secs, c.limit);
    std::cout << "CRITERION " << c.id << " " << (o.ok ? "PASS" : "FAIL") << " " << c.name << " " << timing << " "
              << o.detail << std::endl;
  }
  std::cout << (failed ? "ACCEPTANCE: FAIL" : "ACCEPTANCE: PASS") << " (" << criteria.size() - failed << "/"
            << criteria.size() << ")" << std::endl;
  return failed ? 1 : 0;
}
