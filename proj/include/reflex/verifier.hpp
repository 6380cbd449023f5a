#pragma once

#include <map>
#include <string>
#include <vector>

#include "reflex/canonical.hpp"
#include "reflex/constructions.hpp"
#include "reflex/enumeration.hpp"
#include "reflex/errors.hpp"
#include "reflex/fano.hpp"
#include "reflex/polytope.hpp"

namespace reflex {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct PolytopeSummary {
  std::string name;
  std::size_t vertices = 0;
  std::size_t picard = 0;
  bool smooth = false;
  NuKind nu = NuKind::zero;
  std::map<std::string, std::size_t> cases;  // case label -> number of special facets
};

struct VerificationReport {
  std::string title;
  std::size_t dimension = 0;
  std::vector<PolytopeSummary> polytopes;
  std::vector<std::vector<bool>> isomorphic;  // pairwise, over polytopes
  std::vector<Violation> lemma_violations;
  std::size_t lemma_instances = 0;
  std::size_t lemma_vacuous = 0;
  std::vector<Check> checks;
  std::vector<std::string> notes;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.passed) return false;
    return !checks.empty();
  }

  std::string text() const {
    std::string s = title + "\n";
    for (const auto& p : polytopes) {
      s += "POLYTOPE " + p.name + " vertices=" + std::to_string(p.vertices) + " picard=" + std::to_string(p.picard) +
           " smooth=" + (p.smooth ? "yes" : "no") + " nu=" + to_string(p.nu);
      if (!p.cases.empty()) {
        s += " cases=";
        bool first = true;
        for (const auto& [label, count] : p.cases) {
          if (!first) s += ",";
          s += label + ":" + std::to_string(count);
          first = false;
        }
      }
      s += "\n";
    }
    for (std::size_t i = 0; i < isomorphic.size(); ++i) {
      s += "ISO";
      for (bool b : isomorphic[i]) s += b ? " 1" : " 0";
      s += "\n";
    }
    if (lemma_instances || lemma_vacuous || !lemma_violations.empty())
      s += "LEMMAS instances=" + std::to_string(lemma_instances) + " vacuous=" + std::to_string(lemma_vacuous) +
           " violations=" + std::to_string(lemma_violations.size()) + "\n";
    LemmaReport r;
    r.violations = lemma_violations;
    s += r.text();
    for (const auto& c : checks) {
      s += "CHECK " + c.name + (c.passed ? " PASS" : " FAIL");
      if (!c.detail.empty()) s += " " + c.detail;
      s += "\n";
    }
    for (const auto& n : notes) s += "NOTE " + n + "\n";
    s += passed() ? "VERDICT: PASS\n" : "VERDICT: FAIL\n";
    return s;
  }
};

namespace detail {

inline void add_check(VerificationReport& r, std::string name, bool ok, std::string detail = {}) {
  r.checks.push_back(Check{std::move(name), ok, std::move(detail)});
}

/// Runs fn and turns a library exception into a failed check.
template <class Fn>
bool guarded(VerificationReport& r, const std::string& name, Fn&& fn) {
  try {
    fn();
    return true;
  } catch (const Error& e) {
    add_check(r, name, false, e.what());
    return false;
  }
}

}  // namespace detail

/// Checks the list of simplicial reflexive d-polytopes with 3d-1 vertices,
/// 3 <= d <= 7: shape, Picard number, pairwise distinctness, position of
/// nu, the case of every special facet, and every lemma.
inline VerificationReport verify_theorem(std::size_t d) {
  if (d < 3 || d > 7) throw DomainError("verify_theorem: dimension must be between 3 and 7");
  VerificationReport r;
  r.title = "verify theorem d=" + std::to_string(d);
  r.dimension = d;
  std::vector<ClassificationEntry> entries;
  if (!detail::guarded(r, "construct", [&] { entries = classification_entries(d); })) return r;

  const std::size_t expected_members = d % 2 == 0 ? 3 : 2;
  detail::add_check(r, "member-count", entries.size() == expected_members,
                    std::to_string(entries.size()) + " of " + std::to_string(expected_members));

  std::size_t smooth_count = 0;
  for (const auto& e : entries) {
    const LatticePolytope& p = e.polytope;
    const std::string name = e.name();
    PolytopeSummary s;
    s.name = name;
    s.vertices = p.num_vertices();
    const bool simplicial = is_simplicial(p), reflexive = is_reflexive(p);
    detail::add_check(r, name + ":simplicial", simplicial);
    detail::add_check(r, name + ":reflexive", reflexive);
    detail::add_check(r, name + ":vertices", p.num_vertices() == 3 * d - 1, std::to_string(p.num_vertices()));
    if (!simplicial || !reflexive) {
      r.polytopes.push_back(s);
      continue;
    }
    s.picard = picard_number(p);
    detail::add_check(r, name + ":picard", s.picard == 2 * d - 1, std::to_string(s.picard));
    s.smooth = is_smooth_fano(p);
    if (s.smooth) ++smooth_count;
    s.nu = nu_kind(p);
    detail::add_check(r, name + ":nu", s.nu == expected_nu_kind(e.exceptional),
                      std::string(to_string(s.nu)) + ", expected " + to_string(expected_nu_kind(e.exceptional)));

    detail::guarded(r, name + ":cases", [&] {
      bool consistent = true;
      for (std::size_t k : special_facet_indices(p)) {
        const Case c = classify_case(p, k);
        ++s.cases[to_string(c)];
        // A and B put nu at the origin, C puts it on the special facet.
        const bool nu_zero = s.nu == NuKind::zero;
        if (nu_zero != (c != Case::C)) consistent = false;
      }
      detail::add_check(r, name + ":cases", consistent);
    });

    detail::guarded(r, name + ":lemmas", [&] {
      const LemmaReport lr = check_lemmas(p);
      for (const auto& [id, c] : lr.checked) r.lemma_instances += c;
      for (const auto& [id, c] : lr.vacuous) r.lemma_vacuous += c;
      r.lemma_violations.insert(r.lemma_violations.end(), lr.violations.begin(), lr.violations.end());
      detail::add_check(r, name + ":lemmas", lr.ok(), std::to_string(lr.violations.size()) + " violations");
    });
    r.polytopes.push_back(s);
  }

  r.isomorphic.assign(entries.size(), std::vector<bool>(entries.size(), false));
  bool distinct = true;
  for (std::size_t i = 0; i < entries.size(); ++i)
    for (std::size_t j = 0; j < entries.size(); ++j) {
      r.isomorphic[i][j] = i == j || (j < i ? r.isomorphic[j][i] : is_isomorphic(entries[i].polytope, entries[j].polytope));
      if (i != j && r.isomorphic[i][j]) distinct = false;
    }
  detail::add_check(r, "pairwise-non-isomorphic", distinct);
  if (d % 2 == 0)
    detail::add_check(r, "exactly-one-smooth", smooth_count == 1, std::to_string(smooth_count));
  else
    detail::add_check(r, "all-smooth", smooth_count == entries.size(), std::to_string(smooth_count));
  r.notes.push_back("completeness (no other simplicial reflexive polytope with 3d-1 vertices) is not checked");
  return r;
}

/// The free sum of d/2 hexagons reaches 3d vertices and Picard number 2d,
/// and no polytope of dimension d in the corpus exceeds 3d vertices.
inline VerificationReport verify_casagrande(std::size_t d) {
  if (d < 2 || d > 8 || d % 2 != 0) throw DomainError("verify_casagrande: dimension must be even, between 2 and 8");
  VerificationReport r;
  r.title = "verify casagrande d=" + std::to_string(d);
  r.dimension = d;
  detail::guarded(r, "extremal", [&] {
    const LatticePolytope p = casagrande_extremal(d);
    PolytopeSummary s;
    s.name = std::to_string(d / 2) + "V2";
    s.vertices = p.num_vertices();
    detail::add_check(r, "extremal:simplicial", is_simplicial(p));
    detail::add_check(r, "extremal:reflexive", is_reflexive(p));
    detail::add_check(r, "extremal:vertices", p.num_vertices() == 3 * d, std::to_string(p.num_vertices()));
    s.picard = picard_number(p);
    detail::add_check(r, "extremal:picard", s.picard == 2 * d, std::to_string(s.picard));
    s.smooth = is_smooth_fano(p);
    detail::add_check(r, "extremal:smooth", s.smooth);
    s.nu = nu_kind(p);
    r.polytopes.push_back(s);
  });
  detail::guarded(r, "corpus-bound", [&] {
    std::vector<LatticePolytope> corpus = classification_list(d);
    if (d == 2)
      for (const auto& c : enumerate_reflexive_polygons()) corpus.push_back(c.representative);
    std::size_t worst = 0;
    for (const auto& p : corpus) worst = std::max(worst, p.num_vertices());
    detail::add_check(r, "corpus-bound", worst <= 3 * d,
                      std::to_string(corpus.size()) + " polytopes, at most " + std::to_string(worst) + " vertices");
  });
  return r;
}

/// Enumerates the reflexive polygons and checks the counts, the naming of
/// the 5-vertex classes, and the named constructions against them.
inline VerificationReport verify_polygon_landscape() {
  VerificationReport r;
  r.title = "verify polygons";
  r.dimension = 2;
  std::vector<PolygonClass> classes;
  if (!detail::guarded(r, "enumerate", [&] { classes = enumerate_reflexive_polygons_in_box(3); })) return r;
  std::map<std::size_t, std::size_t> histogram;
  for (const auto& c : classes) ++histogram[c.vertex_count];
  detail::add_check(r, "classes", classes.size() == 16, std::to_string(classes.size()));
  detail::add_check(r, "five-vertex-classes", histogram[5] == 3, std::to_string(histogram[5]));
  detail::add_check(r, "six-vertex-classes", histogram[6] == 1, std::to_string(histogram[6]));
  std::string hist;
  for (const auto& [n, c] : histogram) hist += (hist.empty() ? "" : " ") + std::to_string(n) + ":" + std::to_string(c);
  r.notes.push_back("vertex histogram " + hist);

  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& c = classes[i];
    PolytopeSummary s;
    s.name = "polygon-" + std::to_string(i + 1);
    s.vertices = c.vertex_count;
    s.picard = c.vertex_count - 2;
    s.smooth = c.smooth;
    s.nu = c.nu_kind;
    r.polytopes.push_back(s);
    if (c.vertex_count == 6) {
      detail::add_check(r, "six-vertex-smooth", c.smooth);
      detail::add_check(r, "six-vertex-is-v2", is_isomorphic(c.representative, construct(Named::v2)));
    }
  }
  detail::guarded(r, "taxonomy", [&] {
    const auto tax = five_vertex_taxonomy(classes);
    detail::add_check(r, "taxonomy", tax.size() == 3);
    for (const auto& [name, c] : tax)
      detail::add_check(r, std::string("construct-") + to_string(name),
                        is_isomorphic(c.representative, construct(name)));
  });
  return r;
}

}  // namespace reflex
