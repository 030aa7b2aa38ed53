#include "jetdet/groebner.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <queue>
#include <sstream>
#include <unordered_set>

#include "jetdet/error.hpp"
#include "jetdet/parallel.hpp"

namespace jetdet {

GeneratorSet::GeneratorSet(TablePtr table, std::vector<Polynomial> polys) : table_(std::move(table)) {
  polys_.reserve(polys.size());
  for (auto& p : polys) add(std::move(p));
}

void GeneratorSet::add(Polynomial p) {
  if (p.is_zero()) throw UsageError("generator sets may not contain the zero polynomial");
  if (!same_table(p.table(), table_)) throw UsageError("generator from a different ring");
  polys_.push_back(std::move(p));
}

MonomialIdeal MonomialIdeal::minimalized(TablePtr table, std::vector<Monomial> gens) {
  // Ascending degree first so every divisor is seen before its multiples.
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) { return grevlex(a, b) < 0; });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  MonomialIdeal ideal(std::move(table));
  for (const auto& m : gens) {
    if (!ideal.contains(m)) ideal.gens_.push_back(m);
  }
  std::reverse(ideal.gens_.begin(), ideal.gens_.end());
  return ideal;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

namespace {

std::optional<std::size_t> find_divisor(const Monomial& m, const GeneratorSet& g, DivisorChoice choice) {
  if (choice == DivisorChoice::kSmallestIndex) {
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i].lm().divides(m)) return i;
    }
  } else {
    for (std::size_t i = g.size(); i-- > 0;) {
      if (g[i].lm().divides(m)) return i;
    }
  }
  return std::nullopt;
}

template <bool kTrace>
ReductionTrace reduce_impl(const Polynomial& f, const GeneratorSet& g, DivisorChoice choice) {
  if (!same_table(f.table(), g.table())) throw UsageError("normal_form: polynomial and generators differ in ring");
  std::vector<std::vector<Term>> quotient_terms(kTrace ? g.size() : 0);
  std::vector<Term> remainder;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term& lt = p.leading_term();
    if (auto i = find_divisor(lt.mono, g, choice)) {
      const Polynomial& gi = g[*i];
      Rational c = lt.coeff / gi.lc();
      Monomial m = lt.mono / gi.lm();
      p = p.sub_mul(c, m, gi);
      if constexpr (kTrace) quotient_terms[*i].push_back({std::move(c), m});
    } else {
      remainder.push_back(lt);
      p = p.tail();
    }
  }
  ReductionTrace trace{{}, Polynomial::from_descending(f.table(), std::move(remainder))};
  if constexpr (kTrace) {
    for (std::size_t i = 0; i < quotient_terms.size(); ++i) {
      if (quotient_terms[i].empty()) continue;
      trace.quotients.push_back({i, Polynomial::from_descending(f.table(), std::move(quotient_terms[i]))});
    }
  }
  return trace;
}

}  // namespace

ReductionTrace normal_form(const Polynomial& f, const GeneratorSet& g, DivisorChoice choice) {
  return reduce_impl<true>(f, g, choice);
}

Polynomial reduce(const Polynomial& f, const GeneratorSet& g) {
  return reduce_impl<false>(f, g, DivisorChoice::kSmallestIndex).remainder;
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() || g.is_zero()) throw UsageError("s_polynomial of a zero polynomial");
  if (!same_table(f.table(), g.table())) throw UsageError("s_polynomial: operands differ in ring");
  const Monomial t = f.lm().gcd(g.lm());
  return f.mul_term(g.lc(), g.lm() / t).sub_mul(f.lc(), f.lm() / t, g);
}

GroebnerCheck is_groebner_basis(const GeneratorSet& g, bool skip_coprime, unsigned jobs) {
  GroebnerCheck result;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < g.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (skip_coprime && g[i].lm().coprime(g[j].lm())) {
        ++result.pairs_skipped;
      } else {
        pairs.emplace_back(i, j);
      }
    }
  }
  std::sort(pairs.begin(), pairs.end());

  std::vector<std::optional<Polynomial>> failures(pairs.size());
  std::atomic<std::size_t> first_failure{std::numeric_limits<std::size_t>::max()};
  std::atomic<std::size_t> checked{0};
  parallel_for(pairs.size(), jobs, [&](std::size_t k) {
    if (k > first_failure.load()) return;
    const auto [i, j] = pairs[k];
    Polynomial r = reduce(s_polynomial(g[i], g[j]), g);
    checked.fetch_add(1);
    if (!r.is_zero()) {
      failures[k] = std::move(r);
      std::size_t cur = first_failure.load();
      while (k < cur && !first_failure.compare_exchange_weak(cur, k)) {
      }
    }
  });

  const std::size_t k = first_failure.load();
  // Count only pairs up to the first failure so the tally is job-independent.
  result.pairs_checked = k == std::numeric_limits<std::size_t>::max() ? pairs.size() : k + 1;
  if (k != std::numeric_limits<std::size_t>::max()) {
    result.is_basis = false;
    result.witness = GroebnerCheck::Witness{pairs[k].first, pairs[k].second, std::move(*failures[k])};
  }
  return result;
}

namespace {

struct PendingPair {
  unsigned degree;
  std::size_t id;
  std::size_t i;
  std::size_t j;
  Monomial lcm;

  bool operator>(const PendingPair& o) const {
    return degree != o.degree ? degree > o.degree : id > o.id;
  }
};

std::uint64_t pair_key(std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return (static_cast<std::uint64_t>(j) << 32) | i;
}

}  // namespace

GeneratorSet buchberger_completion(const GeneratorSet& input, const CompletionOptions& opts,
                                   CompletionStats* stats_out) {
  if (input.empty()) throw UsageError("buchberger_completion of an empty generator set");
  if (opts.degree_bound) {
    for (const auto& p : input.polys()) {
      if (!p.is_homogeneous()) throw UsageError("degree_bound requires homogeneous generators");
    }
  }
  CompletionStats stats;
  GeneratorSet basis = input;
  std::priority_queue<PendingPair, std::vector<PendingPair>, std::greater<>> queue;
  std::unordered_set<std::uint64_t> pending;
  std::size_t next_id = 0;

  auto describe = [&](unsigned degree) {
    std::ostringstream os;
    os << "basis_size=" << basis.size() << " pairs_reduced=" << stats.pairs_reduced
       << " pairs_pending=" << queue.size() << " current_degree=" << degree;
    return os.str();
  };
  auto add_pairs_for = [&](std::size_t j) {
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = basis[i].lm().lcm(basis[j].lm());
      queue.push({l.degree(), next_id++, i, j, l});
      pending.insert(pair_key(i, j));
      ++stats.pairs_created;
    }
  };
  for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

  while (!queue.empty()) {
    PendingPair pair = queue.top();
    if (opts.degree_bound && pair.degree > *opts.degree_bound) {
      stats.truncated_at = *opts.degree_bound;
      break;
    }
    queue.pop();
    pending.erase(pair_key(pair.i, pair.j));
    if (pair.degree > opts.max_degree) {
      throw CapExceeded("max degree " + std::to_string(opts.max_degree) + " exceeded", describe(pair.degree));
    }
    const Polynomial& fi = basis[pair.i];
    const Polynomial& fj = basis[pair.j];
    if (fi.lm().coprime(fj.lm())) {
      ++stats.skipped_coprime;
      continue;
    }
    if (opts.chain_criterion) {
      bool chained = false;
      for (std::size_t k = 0; k < basis.size() && !chained; ++k) {
        if (k == pair.i || k == pair.j) continue;
        chained = basis[k].lm().divides(pair.lcm) && !pending.contains(pair_key(pair.i, k)) &&
                  !pending.contains(pair_key(pair.j, k));
      }
      if (chained) {
        ++stats.skipped_chain;
        continue;
      }
    }
    if (stats.pairs_reduced >= opts.max_pairs) {
      throw CapExceeded("max pair count " + std::to_string(opts.max_pairs) + " exceeded", describe(pair.degree));
    }
    ++stats.pairs_reduced;
    Polynomial r = reduce(s_polynomial(fi, fj), basis);
    if (r.is_zero()) {
      ++stats.zero_reductions;
      continue;
    }
    if (basis.size() >= opts.max_basis_size) {
      throw CapExceeded("max basis size " + std::to_string(opts.max_basis_size) + " exceeded",
                        describe(pair.degree));
    }
    basis.add(r.normalized());
    ++stats.elements_added;
    add_pairs_for(basis.size() - 1);
  }
  if (stats_out) *stats_out = stats;
  return basis;
}

MonomialIdeal leading_ideal(const GeneratorSet& g) {
  std::vector<Monomial> lms;
  lms.reserve(g.size());
  for (const auto& p : g.polys()) lms.push_back(p.lm());
  return MonomialIdeal::minimalized(g.table(), std::move(lms));
}

}  // namespace jetdet
