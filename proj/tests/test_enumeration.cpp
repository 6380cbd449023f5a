#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace reflex;

TEST(Enumeration, Counts) {
  const auto classes = enumerate_reflexive_polygons();
  ASSERT_EQ(classes.size(), 16u);
  std::map<std::size_t, std::size_t> hist;
  for (const auto& c : classes) ++hist[c.vertex_count];
  EXPECT_EQ(hist, (std::map<std::size_t, std::size_t>{{3, 5}, {4, 7}, {5, 3}, {6, 1}}));
  for (const auto& c : classes) {
    if (c.vertex_count != 6) continue;
    EXPECT_TRUE(c.smooth);
    EXPECT_TRUE(is_isomorphic(c.representative, construct(Named::v2)));
  }
}

TEST(Enumeration, RepresentativesAreReflexiveAndDistinct) {
  const auto classes = enumerate_reflexive_polygons();
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const auto& p = classes[i].representative;
    EXPECT_TRUE(is_reflexive(p));
    const auto pts = oracle::lattice_points(p.vertices());
    EXPECT_EQ(pts.first, std::vector<IntVector>{make_vector({0, 0})});
    EXPECT_EQ(normal_form(p).matrix, classes[i].key);
    for (std::size_t j = i + 1; j < classes.size(); ++j) EXPECT_FALSE(oracle::isomorphic(p, classes[j].representative));
  }
}

TEST(Enumeration, SmoothClassesAreTheFive) {
  std::size_t smooth = 0;
  for (const auto& c : enumerate_reflexive_polygons()) smooth += c.smooth;
  EXPECT_EQ(smooth, 5u);
}

TEST(Enumeration, LargerBoxFindsNothingNew) {
  const auto small = enumerate_reflexive_polygons();
  const auto large = enumerate_reflexive_polygons_in_box(4);
  ASSERT_EQ(large.size(), small.size());
  for (std::size_t i = 0; i < small.size(); ++i) EXPECT_EQ(large[i].key, small[i].key);
}

TEST(Enumeration, Deterministic) {
  const auto a = enumerate_reflexive_polygons(), b = enumerate_reflexive_polygons();
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].key, b[i].key);
  EXPECT_THROW(enumerate_reflexive_polygons_in_box(0), DomainError);
}

TEST(Taxonomy, FiveVertexClasses) {
  const auto tax = five_vertex_taxonomy();
  ASSERT_EQ(tax.size(), 3u);
  EXPECT_TRUE(tax.at(Named::tv2).smooth);
  EXPECT_TRUE(is_isomorphic(tax.at(Named::tv2).representative, construct(Named::tv2)));
  EXPECT_TRUE(is_zero(vertex_sum(tax.at(Named::e2).representative)));
  const auto& e1 = tax.at(Named::e1).representative;
  const IntVector nu = vertex_sum(e1);
  EXPECT_FALSE(is_zero(nu));
  EXPECT_FALSE(e1.index_of(nu));
  EXPECT_EQ(contains(e1, nu).location, Location::boundary);
}

TEST(Taxonomy, Errors) {
  auto classes = enumerate_reflexive_polygons();
  auto missing = classes;
  missing.erase(std::remove_if(missing.begin(), missing.end(), [](const PolygonClass& c) { return c.vertex_count == 5; }),
                missing.end());
  EXPECT_THROW(five_vertex_taxonomy(missing), TaxonomyError);
  auto twice = classes;
  for (auto& c : twice)
    if (c.vertex_count == 5 && !c.smooth) c.smooth = true;
  EXPECT_THROW(five_vertex_taxonomy(twice), TaxonomyError);
}
