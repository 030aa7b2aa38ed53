#include <gtest/gtest.h>

#include "jetdet/error.hpp"
#include "jetdet/shelling.hpp"

using namespace jetdet;

namespace {

Facet tagged(FacetFamily f, VertexSet v) { return Facet{v, FamilyTag{f, {0, 0, 0}}}; }

}  // namespace

TEST(StarCompare, FamilyRankFirst) {
  Facet f = tagged(FacetFamily::kF, VertexSet::of({0, 1}));
  Facet a = tagged(FacetFamily::kA, VertexSet::of({5}));
  EXPECT_TRUE(star_compare(f, a) < 0);
  EXPECT_TRUE(star_compare(a, f) > 0);
  EXPECT_TRUE(star_compare(a, a) == 0);
}

TEST(StarCompare, ContainingTheFirstDifferingVertexIsGreater) {
  Facet p = tagged(FacetFamily::kC, VertexSet::of({0, 4, 7}));
  Facet q = tagged(FacetFamily::kC, VertexSet::of({1, 4, 7}));
  EXPECT_TRUE(star_compare(p, q) > 0);
}

TEST(StarCompare, UntaggedIsUsageError) {
  EXPECT_THROW(star_compare(Facet{VertexSet::of({1}), std::nullopt}, tagged(FacetFamily::kA, {})), UsageError);
}

TEST(VerifyShelling, StarOrderIsAShelling) {
  for (int n = 2; n <= 5; ++n) {
    ShellingVerdict v = verify_shelling(ShellingOrder::star(enumerate_facets_families(n)));
    EXPECT_TRUE(v.valid) << "n=" << n << " " << v.reason;
  }
}

TEST(VerifyShelling, DisjointFacetsFail) {
  std::vector<VertexSet> two{VertexSet::of({1, 2}), VertexSet::of({3, 4})};
  ShellingVerdict v = verify_shelling(ShellingOrder::of(two));
  EXPECT_FALSE(v.valid);
  ASSERT_TRUE(v.witness);
  EXPECT_EQ(*v.witness, (std::pair<std::size_t, std::size_t>{0, 1}));
  std::swap(two[0], two[1]);
  EXPECT_FALSE(verify_shelling(ShellingOrder::of(two)).valid);
}

TEST(VerifyShelling, SingleFacetIsValid) {
  std::vector<VertexSet> one{VertexSet::of({0, 1, 2})};
  EXPECT_TRUE(verify_shelling(ShellingOrder::of(one)).valid);
}

TEST(VerifyShelling, ImpureIsInvalid) {
  std::vector<VertexSet> mixed{VertexSet::of({0, 1}), VertexSet::of({1, 2, 3})};
  ShellingVerdict v = verify_shelling(ShellingOrder::of(mixed));
  EXPECT_FALSE(v.valid);
  EXPECT_EQ(v.reason.rfind("impure", 0), 0u);
}

TEST(HVector, TotalAtTwoAndFourColumns) {
  EXPECT_EQ(h_vector(ShellingOrder::star(enumerate_facets_families(2))).h, (std::vector<std::int64_t>{1, 3, 3, 1}));
  EXPECT_EQ(h_vector(ShellingOrder::star(enumerate_facets_families(4))).h, (std::vector<std::int64_t>{1, 9, 27, 27}));
}

TEST(HVector, FirstFacetHasEmptyRestriction) {
  HVector h = h_vector(ShellingOrder::star(enumerate_facets_families(3)));
  EXPECT_TRUE(h.restriction.front().empty());
  for (std::size_t t = 0; t < h.restriction.size(); ++t) EXPECT_LE(h.restriction[t].size(), 3u);
}

TEST(HVector, RejectsNonShelling) {
  std::vector<VertexSet> two{VertexSet::of({1, 2}), VertexSet::of({3, 4})};
  EXPECT_THROW(h_vector(ShellingOrder::of(two)), UsageError);
}

TEST(HByFamily, SelectedValues) {
  for (int n = 2; n <= 5; ++n) {
    FamilyHTable t = h_by_family(ShellingOrder::star(enumerate_facets_families(n)));
    EXPECT_EQ(t.at(FacetFamily::kA)[1], 0) << n;
    EXPECT_EQ(t.at(FacetFamily::kC)[1], n) << n;
  }
  FamilyHTable t4 = h_by_family(ShellingOrder::star(enumerate_facets_families(4)));
  EXPECT_EQ(t4.at(FacetFamily::kF)[2], 1);
}

TEST(HByFamily, ColumnsSumToTotal) {
  ShellingOrder o = ShellingOrder::star(enumerate_facets_families(4));
  HVector h = h_vector(o);
  FamilyHTable t = h_by_family(o);
  for (std::size_t j = 0; j < h.h.size(); ++j) {
    std::int64_t s = 0;
    for (const auto& [fam, row] : t) s += row[j];
    EXPECT_EQ(s, h.h[j]);
  }
}

TEST(HByFamily, EmptyFamilyStillHasARow) {
  FamilyHTable t = h_by_family(ShellingOrder::star(enumerate_facets_families(2)));
  EXPECT_EQ(t.at(FacetFamily::kF), (std::vector<std::int64_t>{0, 0, 0, 0}));
}
