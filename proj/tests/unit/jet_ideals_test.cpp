#include <gtest/gtest.h>

#include "jetdet/error.hpp"
#include "jetdet/jet_ideals.hpp"

using namespace jetdet;

TEST(JetIdealSpec, Validation) {
  EXPECT_NO_THROW((JetIdealSpec{2, 3, 2, 1}.validate()));
  EXPECT_THROW((JetIdealSpec{3, 2, 2, 1}.validate()), UsageError);
  EXPECT_THROW((JetIdealSpec{2, 3, 3, 1}.validate()), UsageError);
  EXPECT_THROW((JetIdealSpec{2, 3, 0, 1}.validate()), UsageError);
  EXPECT_THROW((JetIdealSpec{2, 3, 2, -1}.validate()), UsageError);
}

TEST(JetGenerators, CountIsMinorsTimesOrders) {
  EXPECT_EQ(jet_generators(JetIdealSpec{2, 4, 2, 2}).size(), 18u);
  EXPECT_EQ(jet_generators(JetIdealSpec{3, 4, 2, 1}).size(), 3u * 6u * 2u);
  EXPECT_EQ(jet_generators(JetIdealSpec{3, 3, 3, 0}).size(), 1u);
  EXPECT_EQ(jet_generators(JetIdealSpec{2, 2, 1, 3}).size(), 16u);
}

TEST(JetGenerators, OrderAndTags) {
  auto gens = jet_generators_tagged(JetIdealSpec{2, 3, 2, 1});
  ASSERT_EQ(gens.size(), 6u);
  EXPECT_EQ(gens[0].family, "f0");
  EXPECT_EQ(gens[1].family, "f1");
  EXPECT_EQ(gens[0].index, (std::vector<int>{1, 2, 1, 2}));
  EXPECT_EQ(gens[2].index, (std::vector<int>{1, 2, 1, 3}));
  EXPECT_EQ(gens[5].index, (std::vector<int>{1, 2, 2, 3}));
}

TEST(JetGenerators, SecondJetsAreTheABCFamilies) {
  const int n = 4;
  auto gens = jet_generators_tagged(JetIdealSpec{2, n, 2, 2});
  TablePtr t = VariableTable::jet(2, n, 2);
  std::size_t at = 0;
  for (const auto& pq : gamma_indices('a', n)) {
    EXPECT_EQ(gens[at++].poly, gamma_polynomial('a', pq, t));
    EXPECT_EQ(gens[at++].poly, gamma_polynomial('b', pq, t));
    EXPECT_EQ(gens[at++].poly, gamma_polynomial('c', pq, t));
  }
}

TEST(JetGenerators, OrderZeroIsClassicalMinors) {
  auto gens = jet_generators(JetIdealSpec{2, 2, 2, 0});
  ASSERT_EQ(gens.size(), 1u);
  TablePtr t = gens.table();
  EXPECT_EQ(t->size(), 4u);
  EXPECT_EQ(gens[0], parse_polynomial("x[1,1]*x[2,2]-x[1,2]*x[2,1]", t));
}

TEST(JetGenerators, ThreeByThreeDeterminantHasSixTerms) {
  auto gens = jet_generators(JetIdealSpec{3, 3, 3, 0});
  EXPECT_EQ(gens[0].size(), 6u);
  EXPECT_EQ(gens[0].degree(), 3u);
}

TEST(TruncatedSeries, ProductDropsHighOrders) {
  TablePtr t = VariableTable::jet(1, 2, 1);
  auto a = TruncatedSeries::jet_entry(t, 1, 1, 1);
  auto b = TruncatedSeries::jet_entry(t, 1, 1, 2);
  auto p = a * b;
  EXPECT_EQ(p.order(), 1);
  EXPECT_EQ(p.coeff(0), parse_polynomial("x[1,1]*x[1,2]", t));
  EXPECT_EQ(p.coeff(1), parse_polynomial("y[1,1]*x[1,2]+x[1,1]*y[1,2]", t));
}

TEST(GammaBasis, MemberCounts) {
  EXPECT_EQ(gamma_basis(2).members.size(), 3u);
  EXPECT_EQ(gamma_basis(3).members.size(), 12u);
  GammaBasis g4 = gamma_basis(4);
  EXPECT_EQ(g4.members.size(), 32u);
  EXPECT_EQ(g4.family('a').size() + g4.family('b').size() + g4.family('c').size(), 18u);
  EXPECT_EQ(g4.family('d').size() + g4.family('e').size(), 8u);
  EXPECT_EQ(g4.family('f').size(), 5u);
  EXPECT_EQ(g4.family('g').size(), 1u);
  EXPECT_TRUE(gamma_basis(3).family('g').empty());
  EXPECT_THROW(gamma_basis(1), UsageError);
}

TEST(GammaBasis, LeadingMonomialOfF) {
  GammaBasis g = gamma_basis(5);
  const VariableTable& t = *g.table;
  for (const auto* m : g.family('f')) {
    int l = m->index[0], p = m->index[1], q = m->index[2], r = m->index[3];
    Monomial want = Monomial::variable(t.index(0, 2, p)) * Monomial::variable(t.index(1, 1, l)) *
                    Monomial::variable(t.index(1, 2, q)) * Monomial::variable(t.index(2, 2, r));
    EXPECT_EQ(m->poly.lm(), want) << "f " << l << p << q << r;
  }
}

TEST(GammaBasis, LeadingMonomialsAreSquareFree) {
  for (const auto& m : gamma_basis(5).members) EXPECT_TRUE(m.poly.lm().is_squarefree()) << m.family;
}

TEST(GammaBasis, IndexRanges) {
  EXPECT_EQ(gamma_indices('f', 4).size(), 5u);
  EXPECT_EQ(gamma_indices('f', 4).front(), (std::vector<int>{1, 1, 2, 3}));
  EXPECT_EQ(gamma_indices('g', 4), (std::vector<std::vector<int>>{{1, 2, 3, 4}}));
  EXPECT_EQ(gamma_indices('d', 4).size(), 4u);
}

TEST(Membership, DIdentityAtFirstTriple) {
  TablePtr t = VariableTable::jet(2, 3, 2);
  std::vector<int> pqr{1, 2, 3};
  EXPECT_EQ(membership_combination('d', pqr, t).sum(t), gamma_polynomial('d', pqr, t));
}

TEST(Membership, AllEIdentitiesAtFiveColumns) {
  MembershipReport rep = verify_membership_identities(5);
  std::size_t e = 0;
  for (const auto& c : rep.checks) {
    if (c.family == 'e') {
      ++e;
      EXPECT_TRUE(c.holds);
    }
  }
  EXPECT_EQ(e, 10u);
  EXPECT_TRUE(rep.all_hold());
}

TEST(Membership, FlippedSignIsDetected) {
  TablePtr t = VariableTable::jet(2, 3, 2);
  std::vector<int> pqr{1, 2, 3};
  Combination c = membership_combination('d', pqr, t);
  c.terms[0].first = -c.terms[0].first;
  EXPECT_FALSE(c.sum(t) == gamma_polynomial('d', pqr, t));
}

TEST(Membership, GAsCombinationOfC) {
  TablePtr t = VariableTable::jet(2, 4, 2);
  std::vector<int> idx{1, 2, 3, 4};
  EXPECT_EQ(membership_combination('g', idx, t).sum(t), gamma_polynomial('g', idx, t));
}

TEST(Membership, NeedsThreeColumns) { EXPECT_THROW(verify_membership_identities(2), UsageError); }
