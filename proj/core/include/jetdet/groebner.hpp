#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "jetdet/polynomial.hpp"

namespace jetdet {

/// Nonzero polynomials over one table, grevlex attached.
class GeneratorSet {
 public:
  explicit GeneratorSet(TablePtr table) : table_(std::move(table)) {}
  GeneratorSet(TablePtr table, std::vector<Polynomial> polys);

  void add(Polynomial p);

  const TablePtr& table() const { return table_; }
  MonomialOrder order() const { return MonomialOrder(table_); }
  const std::vector<Polynomial>& polys() const { return polys_; }
  std::size_t size() const { return polys_.size(); }
  bool empty() const { return polys_.empty(); }
  const Polynomial& operator[](std::size_t i) const { return polys_[i]; }

 private:
  TablePtr table_;
  std::vector<Polynomial> polys_;
};

/// Minimal monomial generators, sorted descending under grevlex.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(TablePtr table) : table_(std::move(table)) {}
  /// Drops duplicates and non-minimal generators.
  static MonomialIdeal minimalized(TablePtr table, std::vector<Monomial> gens);

  const TablePtr& table() const { return table_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool contains(const Monomial& m) const;

  bool operator==(const MonomialIdeal& o) const {
    return same_table(table_, o.table_) && gens_ == o.gens_;
  }

 private:
  TablePtr table_;
  std::vector<Monomial> gens_;
};

struct Quotient {
  std::size_t index;
  Polynomial multiplier;
};

/// f = sum multiplier_i * g_i + remainder.
struct ReductionTrace {
  std::vector<Quotient> quotients;
  Polynomial remainder;
};

/// Which reducer to use when several leading monomials divide the current
/// leading term. Only the default is used by the algorithms; the other exists
/// to probe uniqueness of normal forms.
enum class DivisorChoice { kSmallestIndex, kLargestIndex };

/// Full division: repeatedly cancels the largest reducible monomial of the
/// partial remainder.
ReductionTrace normal_form(const Polynomial& f, const GeneratorSet& g,
                           DivisorChoice choice = DivisorChoice::kSmallestIndex);

/// Remainder only; same strategy as normal_form without recording quotients.
Polynomial reduce(const Polynomial& f, const GeneratorSet& g);

/// (lt(g)/t) f - (lt(f)/t) g with t = gcd(lm f, lm g).
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

struct GroebnerCheck {
  struct Witness {
    std::size_t i;
    std::size_t j;
    Polynomial remainder;
  };

  bool is_basis = true;
  std::optional<Witness> witness;  // first failing pair in (i, j) order
  std::size_t pairs_checked = 0;
  std::size_t pairs_skipped = 0;

  explicit operator bool() const { return is_basis; }
};

/// Buchberger's criterion. With skip_coprime, pairs whose leading monomials
/// are coprime are not reduced. Reductions run on up to `jobs` threads; the
/// verdict and witness do not depend on `jobs`.
GroebnerCheck is_groebner_basis(const GeneratorSet& g, bool skip_coprime, unsigned jobs = 1);

struct CompletionOptions {
  std::size_t max_basis_size = 5000;
  unsigned max_degree = 40;
  std::size_t max_pairs = 5'000'000;
  /// For homogeneous input only: stop once every pending pair has lcm degree
  /// above this bound. The result is then a Groebner basis up to that degree.
  std::optional<unsigned> degree_bound;
  bool chain_criterion = true;
};

struct CompletionStats {
  std::size_t pairs_created = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
  std::size_t skipped_coprime = 0;
  std::size_t skipped_chain = 0;
  std::size_t elements_added = 0;
  /// Set when degree_bound left pairs unprocessed.
  std::optional<unsigned> truncated_at;
};

/// Extends g to a Groebner basis. Pairs are taken by smallest lcm degree,
/// ties by creation order; new elements are fully reduced and normalized.
/// Throws CapExceeded when a cap in `opts` is hit.
GeneratorSet buchberger_completion(const GeneratorSet& g, const CompletionOptions& opts = {},
                                   CompletionStats* stats = nullptr);

/// Minimal generators of <lm(p) : p in g>.
MonomialIdeal leading_ideal(const GeneratorSet& g);

}  // namespace jetdet
