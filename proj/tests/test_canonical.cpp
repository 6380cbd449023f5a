#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"

using namespace reflex;
using oracle::poly;

namespace {

LatticePolytope random_image(const LatticePolytope& p, std::mt19937_64& rng) {
  return p.unimodular_image(oracle::random_unimodular(p.dim(), rng)).permuted(oracle::random_order(p.num_vertices(), rng));
}

std::vector<LatticePolytope> small_corpus() {
  std::vector<LatticePolytope> out;
  for (Named n : {Named::v2, Named::tv2, Named::e1, Named::e2, Named::q3, Named::q3p}) out.push_back(construct(n));
  out.push_back(poly({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}));
  out.push_back(poly({{2, -1}, {-1, 2}, {-1, -1}}));
  out.push_back(poly({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}));
  out.push_back(poly({{2, 0}, {-2, 0}, {0, 1}, {0, -1}}));
  out.push_back(poly({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}));
  return out;
}

}  // namespace

TEST(NormalForm, InvariantUnderRandomTransforms) {
  std::mt19937_64 rng(31);
  for (const auto& p : small_corpus()) {
    const NormalForm nf = normal_form(p);
    EXPECT_EQ(nf.matrix.rows(), p.dim());
    EXPECT_EQ(nf.matrix.cols(), p.num_vertices());
    for (int t = 0; t < 40; ++t) EXPECT_EQ(normal_form(random_image(p, rng)).matrix, nf.matrix);
  }
}

TEST(NormalForm, InvariantForNonSpanningVertexSets) {
  // Vertices spanning an index-2 sublattice exercise the full search.
  std::mt19937_64 rng(32);
  const auto p = poly({{2, 0}, {1, 1}, {-1, 1}, {-2, 0}, {-1, -1}, {1, -1}});
  ASSERT_FALSE(detail::vertices_span_lattice(p));
  const NormalForm nf = normal_form(p);
  for (int t = 0; t < 40; ++t) EXPECT_EQ(normal_form(random_image(p, rng)).matrix, nf.matrix);
}

TEST(NormalForm, KeyIsAnEquivalentPolytope) {
  for (const auto& p : small_corpus()) {
    const LatticePolytope q(normal_form(p).vertices());
    EXPECT_TRUE(oracle::isomorphic(p, q));
    EXPECT_EQ(normal_form(q).matrix, normal_form(p).matrix);
  }
}

TEST(NormalForm, HexagonIsSelfDual) {
  const auto v2 = construct(Named::v2);
  const auto d = dual(v2).lattice_polytope();
  ASSERT_TRUE(d);
  EXPECT_EQ(normal_form(v2).matrix, normal_form(*d).matrix);
  EXPECT_EQ(detail::pairing_profile(v2), detail::pairing_profile(*d));
}

TEST(NormalForm, SeparatesTheThreeFolds) {
  EXPECT_NE(normal_form(construct(Named::q3)).matrix, normal_form(construct(Named::q3p)).matrix);
}

TEST(Isomorphic, Examples) {
  std::mt19937_64 rng(33);
  const auto e1 = construct(Named::e1), e2 = construct(Named::e2);
  EXPECT_TRUE(is_isomorphic(e1, e1.permuted(oracle::random_order(5, rng))));
  EXPECT_FALSE(is_isomorphic(poly({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}), poly({{1, 0}, {-1, 0}, {0, 1}, {0, -1}})));
  EXPECT_FALSE(is_isomorphic(e1, e2));
  EXPECT_FALSE(oracle::isomorphic(e1, e2));
  EXPECT_FALSE(is_isomorphic(construct(Named::v2), construct(Named::q3)));
}

TEST(Isomorphic, AgreesWithTupleOracle) {
  // All pairs from a pool of polytopes and their images, in d = 2 and 3.
  std::mt19937_64 rng(34);
  std::vector<LatticePolytope> pool;
  for (const auto& p : small_corpus()) {
    if (p.dim() > 3) continue;
    pool.push_back(p);
    pool.push_back(random_image(p, rng));
  }
  pool.push_back(poly({{1, 0}, {0, 1}, {-1, -1}}));
  pool.push_back(poly({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
  pool.push_back(poly({{1, 0}, {1, 1}, {-1, 0}, {-1, -1}}));
  pool.push_back(poly({{1, 0}, {0, 1}, {-1, 0}, {-1, -1}}));
  for (std::size_t i = 0; i < pool.size(); ++i)
    for (std::size_t j = i; j < pool.size(); ++j)
      EXPECT_EQ(is_isomorphic(pool[i], pool[j]), oracle::isomorphic(pool[i], pool[j])) << i << " vs " << j;
}

TEST(Isomorphic, ReflexivePolygonsAgreeWithOracle) {
  const auto classes = enumerate_reflexive_polygons();
  std::mt19937_64 rng(35);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto img = random_image(classes[i].representative, rng);
    for (std::size_t j = 0; j < classes.size(); ++j) {
      const bool expected = oracle::isomorphic(img, classes[j].representative);
      EXPECT_EQ(expected, i == j);
      EXPECT_EQ(is_isomorphic(img, classes[j].representative), expected);
    }
  }
}

TEST(Dedupe, Examples) {
  std::mt19937_64 rng(36);
  const auto v2 = construct(Named::v2);
  const auto out = dedupe({v2, random_image(v2, rng)});
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].vertices(), v2.vertices());
  EXPECT_TRUE(dedupe({}).empty());

  std::vector<LatticePolytope> doubled;
  for (const auto& c : enumerate_reflexive_polygons()) {
    doubled.push_back(c.representative);
    doubled.push_back(random_image(c.representative, rng));
  }
  EXPECT_EQ(dedupe(doubled).size(), 16u);
}

TEST(NormalForm, SymmetryPruningKeepsMaximizingOrders) {
  // For spanning vertex sets the maximizing orders are one orbit of the
  // lattice automorphisms; pruning returns a nonempty part of that orbit.
  for (const auto& p : small_corpus()) {
    if (!detail::vertices_span_lattice(p)) continue;
    const auto full = detail::maximizing_orders(p, true);
    const auto pruned = detail::maximizing_orders(p, false);
    ASSERT_FALSE(pruned.empty());
    for (const auto& o : pruned) EXPECT_NE(std::find(full.begin(), full.end(), o), full.end());
    std::vector<std::int16_t> m;
    for (const auto& x : detail::pairing_matrix(p)) m.push_back(static_cast<std::int16_t>(x));
    EXPECT_EQ(detail::vertex_automorphisms(p, m, 100000).size(), full.size());
  }
}
