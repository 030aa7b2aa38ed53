#include "generators.hpp"

namespace jetdet::testing {

Monomial random_monomial(Rng& rng, std::size_t nvars, unsigned max_exp, unsigned max_degree) {
  std::uniform_int_distribution<unsigned> e(0, max_exp);
  std::uniform_int_distribution<std::size_t> pick(0, nvars - 1);
  Monomial m;
  unsigned budget = std::uniform_int_distribution<unsigned>(0, max_degree)(rng);
  while (budget > 0) {
    std::size_t v = pick(rng);
    unsigned room = max_exp - m.exponent(v);
    if (room == 0) {
      if (m.degree() >= nvars * max_exp) break;
      continue;
    }
    unsigned add = std::min({e(rng), room, budget});
    if (add == 0) add = 1;
    m.set_exponent(v, m.exponent(v) + add);
    budget -= add;
  }
  return m;
}

Rational random_rational(Rng& rng, int max_num, int max_den) {
  std::uniform_int_distribution<int> num(-max_num, max_num);
  std::uniform_int_distribution<int> den(1, max_den);
  int a = 0;
  while (a == 0) a = num(rng);
  Rational q(a, den(rng));
  q.canonicalize();
  return q;
}

Polynomial random_polynomial(Rng& rng, const TablePtr& table, std::size_t max_terms, unsigned max_degree,
                             bool integral) {
  std::size_t count = std::uniform_int_distribution<std::size_t>(1, max_terms)(rng);
  std::vector<Term> terms;
  for (std::size_t i = 0; i < count; ++i) {
    Rational c = integral ? Rational(random_rational(rng, 5, 1)) : random_rational(rng);
    terms.push_back(Term{c, random_monomial(rng, table->size(), 3, max_degree)});
  }
  return Polynomial::from_terms(table, std::move(terms));
}

Polynomial random_homogeneous(Rng& rng, const TablePtr& table, std::size_t max_terms, unsigned degree) {
  std::size_t count = std::uniform_int_distribution<std::size_t>(1, max_terms)(rng);
  std::uniform_int_distribution<std::size_t> pick(0, table->size() - 1);
  std::vector<Term> terms;
  for (std::size_t i = 0; i < count; ++i) {
    Monomial m;
    for (unsigned d = 0; d < degree; ++d) {
      std::size_t v = pick(rng);
      m.set_exponent(v, m.exponent(v) + 1);
    }
    terms.push_back(Term{Rational(random_rational(rng, 4, 1)), m});
  }
  return Polynomial::from_terms(table, std::move(terms));
}

std::vector<VertexSet> random_hypergraph(Rng& rng, std::size_t vertices, std::size_t edges, std::size_t max_edge) {
  std::uniform_int_distribution<std::size_t> size(1, max_edge);
  std::uniform_int_distribution<std::size_t> pick(0, vertices - 1);
  std::vector<VertexSet> out;
  for (std::size_t i = 0; i < edges; ++i) {
    VertexSet e;
    std::size_t want = std::min(size(rng), vertices);
    while (e.size() < want) e.insert(pick(rng));
    out.push_back(e);
  }
  return out;
}

}  // namespace jetdet::testing
