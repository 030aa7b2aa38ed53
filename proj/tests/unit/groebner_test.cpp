#include <gtest/gtest.h>

#include "jetdet/error.hpp"
#include "jetdet/groebner.hpp"
#include "jetdet/jet_ideals.hpp"

using namespace jetdet;

namespace {

TablePtr xy() { return VariableTable::named({"x", "y"}); }
Polynomial P(const char* text, const TablePtr& t) { return parse_polynomial(text, t); }
GeneratorSet G(const TablePtr& t, std::initializer_list<const char*> polys) {
  GeneratorSet g(t);
  for (const char* p : polys) g.add(P(p, t));
  return g;
}

}  // namespace

TEST(GeneratorSet, RejectsZeroAndForeignPolynomials) {
  TablePtr t = xy();
  GeneratorSet g(t);
  EXPECT_THROW(g.add(Polynomial(t)), UsageError);
  EXPECT_THROW(g.add(P("z", VariableTable::named({"z"}))), UsageError);
}

TEST(NormalForm, GeneratorReducesToZero) {
  TablePtr t = xy();
  auto g = G(t, {"x^2*y-3*y+1"});
  ReductionTrace tr = normal_form(g[0], g);
  EXPECT_TRUE(tr.remainder.is_zero());
  ASSERT_EQ(tr.quotients.size(), 1u);
  EXPECT_EQ(tr.quotients[0].multiplier, P("1", t));
}

TEST(NormalForm, SingleDivisionStep) {
  TablePtr t = xy();
  EXPECT_EQ(normal_form(P("x^2", t), G(t, {"x^2-y"})).remainder, P("y", t));
}

TEST(NormalForm, RemainderHasNoReducibleTerm) {
  TablePtr t = xy();
  auto g = G(t, {"x*y-1", "y^2-x"});
  Polynomial r = normal_form(P("x^3*y^2+x*y^3+y", t), g).remainder;
  for (const auto& term : r.terms()) {
    for (const auto& p : g.polys()) EXPECT_FALSE(p.lm().divides(term.mono));
  }
}

TEST(NormalForm, DOfGammaReducesAgainstBAndC) {
  TablePtr t = VariableTable::jet(2, 3, 2);
  GeneratorSet bc(t);
  for (char fam : {'b', 'c'}) {
    for (const auto& idx : gamma_indices(fam, 3)) bc.add(gamma_polynomial(fam, idx, t));
  }
  std::vector<int> pqr{1, 2, 3};
  Polynomial d = gamma_polynomial('d', pqr, t);
  // d is a combination of b and c with variable coefficients, so the trace
  // must rebuild it, though the remainder need not vanish for a non-basis.
  ReductionTrace tr = normal_form(d, bc);
  Polynomial rebuilt = tr.remainder;
  for (const auto& q : tr.quotients) rebuilt += q.multiplier * bc[q.index];
  EXPECT_EQ(rebuilt, d);
  GeneratorSet gb = buchberger_completion(bc);
  EXPECT_TRUE(reduce(d, gb).is_zero());
}

TEST(SPolynomial, SelfIsZero) {
  TablePtr t = xy();
  Polynomial f = P("x^2*y-y+3", t);
  EXPECT_TRUE(s_polynomial(f, f).is_zero());
}

TEST(SPolynomial, CoprimeLeadingMonomials) {
  TablePtr t = xy();
  Polynomial f = P("x^2-1", t), g = P("y^2-1", t);
  Polynomial s = s_polynomial(f, g);
  EXPECT_EQ(s, P("x^2-y^2", t));
  EXPECT_TRUE(reduce(s, G(t, {"x^2-1", "y^2-1"})).is_zero());
}

TEST(SPolynomial, ZeroInputIsUsageError) {
  TablePtr t = xy();
  EXPECT_THROW(s_polynomial(Polynomial(t), P("x", t)), UsageError);
}

TEST(SPolynomial, GammaPairReducesToZero) {
  GammaBasis gamma = gamma_basis(4);
  std::vector<int> i12{1, 2}, i23{2, 3};
  Polynomial s = s_polynomial(gamma.get('a', i12), gamma.get('a', i23));
  EXPECT_TRUE(reduce(s, gamma.generator_set()).is_zero());
}

TEST(IsGroebnerBasis, GammaAtFourColumns) {
  GroebnerCheck c = is_groebner_basis(gamma_basis(4).generator_set(), true);
  EXPECT_TRUE(c.is_basis);
  EXPECT_EQ(c.pairs_checked + c.pairs_skipped, 32u * 31u / 2u);
}

TEST(IsGroebnerBasis, WitnessForNonBasis) {
  TablePtr t = xy();
  GroebnerCheck c = is_groebner_basis(G(t, {"x^2-y", "x*y-1"}), false);
  ASSERT_FALSE(c.is_basis);
  ASSERT_TRUE(c.witness);
  EXPECT_EQ(c.witness->i, 0u);
  EXPECT_EQ(c.witness->j, 1u);
  EXPECT_EQ(c.witness->remainder.normalized(), P("y^2-x", t));
}

TEST(IsGroebnerBasis, SingletonIsBasis) {
  TablePtr t = xy();
  EXPECT_TRUE(is_groebner_basis(G(t, {"x^3-y+2"}), false).is_basis);
}

TEST(Completion, HandRun) {
  TablePtr t = xy();
  CompletionStats stats;
  GeneratorSet gb = buchberger_completion(G(t, {"x^2-y", "x*y-1"}), {}, &stats);
  ASSERT_EQ(gb.size(), 3u);
  EXPECT_EQ(gb[2], P("y^2-x", t));
  EXPECT_TRUE(is_groebner_basis(gb, false).is_basis);
  MonomialIdeal lead = leading_ideal(gb);
  EXPECT_EQ(lead, MonomialIdeal::minimalized(t, {Monomial{2, 0}, Monomial{1, 1}, Monomial{0, 2}}));
}

TEST(Completion, BasisIsFixedPoint) {
  TablePtr t = xy();
  auto g = G(t, {"x^2-y", "x*y-1", "y^2-x"});
  GeneratorSet gb = buchberger_completion(g);
  EXPECT_EQ(gb.polys(), g.polys());
}

TEST(Completion, Deterministic) {
  auto g = jet_generators(JetIdealSpec{2, 3, 2, 2});
  EXPECT_EQ(buchberger_completion(g).polys(), buchberger_completion(g).polys());
}

TEST(Completion, JetGeneratorsReachGammaLeadingIdeal) {
  GeneratorSet gb = buchberger_completion(jet_generators(JetIdealSpec{2, 4, 2, 2}));
  EXPECT_EQ(leading_ideal(gb), leading_ideal(gamma_basis(4).generator_set()));
  EXPECT_EQ(leading_ideal(gb).size(), 32u);
}

TEST(Completion, CapsRaiseWithPartialState) {
  auto g = jet_generators(JetIdealSpec{2, 4, 2, 2});
  CompletionOptions o;
  o.max_basis_size = 20;
  try {
    buchberger_completion(g, o);
    FAIL() << "expected a cap";
  } catch (const CapExceeded& e) {
    EXPECT_NE(std::string(e.what()).find("basis size"), std::string::npos);
    EXPECT_NE(e.partial_state().find("basis_size="), std::string::npos);
  }
  o = {};
  o.max_degree = 3;
  EXPECT_THROW(buchberger_completion(g, o), CapExceeded);
  o = {};
  o.max_pairs = 5;
  EXPECT_THROW(buchberger_completion(g, o), CapExceeded);
}

TEST(Completion, DegreeBoundNeedsHomogeneousInput) {
  TablePtr t = xy();
  CompletionOptions o;
  o.degree_bound = 4;
  EXPECT_THROW(buchberger_completion(G(t, {"x^2-y"}), o), UsageError);
  EXPECT_THROW(buchberger_completion(GeneratorSet(t)), UsageError);
}

TEST(Completion, DegreeBoundAgreesBelowTheBound) {
  auto g = jet_generators(JetIdealSpec{2, 3, 2, 2});
  GeneratorSet full = buchberger_completion(g);
  CompletionOptions o;
  o.degree_bound = 3;
  CompletionStats stats;
  GeneratorSet cut = buchberger_completion(g, o, &stats);
  MonomialIdeal lf = leading_ideal(full), lc = leading_ideal(cut);
  std::vector<Monomial> a, b;
  for (const auto& m : lf.gens()) {
    if (m.degree() <= 3) a.push_back(m);
  }
  for (const auto& m : lc.gens()) {
    if (m.degree() <= 3) b.push_back(m);
  }
  EXPECT_EQ(a, b);
}

TEST(LeadingIdeal, SinglePolynomial) {
  TablePtr t = xy();
  MonomialIdeal l = leading_ideal(G(t, {"x*y^2+x^2"}));
  ASSERT_EQ(l.size(), 1u);
  EXPECT_EQ(l.gens()[0], (Monomial{1, 2}));
}

TEST(MonomialIdeal, MinimalizedDropsMultiples) {
  TablePtr t = xy();
  MonomialIdeal l = MonomialIdeal::minimalized(t, {Monomial{2, 1}, Monomial{1, 0}, Monomial{1, 0}, Monomial{0, 3}});
  EXPECT_EQ(l.size(), 2u);
  EXPECT_TRUE(l.contains(Monomial{3, 3}));
  EXPECT_FALSE(l.contains(Monomial{0, 2}));
}
