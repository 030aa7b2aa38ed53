#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "jetdet/monomial.hpp"
#include "jetdet/variables.hpp"

namespace jetdet {

using Rational = mpq_class;
using Integer = mpz_class;

struct Term {
  Rational coeff;
  Monomial mono;

  bool operator==(const Term& o) const { return mono == o.mono && coeff == o.coeff; }
};

/// Sparse polynomial over Q in the grevlex ring of its variable table.
/// Terms are kept strictly descending with nonzero coefficients; the zero
/// polynomial has no terms. Values are immutable once built.
class Polynomial {
 public:
  explicit Polynomial(TablePtr table) : table_(std::move(table)) {}

  /// Sorts and merges arbitrary terms, dropping zero coefficients.
  static Polynomial from_terms(TablePtr table, std::vector<Term> terms);
  static Polynomial constant(TablePtr table, const Rational& c);
  static Polynomial variable(TablePtr table, std::size_t index);
  static Polynomial term(TablePtr table, const Rational& c, const Monomial& m);
  /// Adopts terms that are already strictly descending with nonzero
  /// coefficients; throws InternalError otherwise.
  static Polynomial from_descending(TablePtr table, std::vector<Term> terms);

  const TablePtr& table() const { return table_; }
  MonomialOrder order() const { return MonomialOrder(table_); }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::span<const Term> terms() const { return terms_; }

  const Term& leading_term() const;
  const Monomial& lm() const { return leading_term().mono; }
  const Rational& lc() const { return leading_term().coeff; }
  /// Maximum total degree over all terms (0 for the zero polynomial).
  unsigned degree() const;
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial operator*(const Rational& c) const;
  Polynomial& operator+=(const Polynomial& g) { return *this = *this + g; }
  Polynomial& operator-=(const Polynomial& g) { return *this = *this - g; }

  /// Everything but the leading term.
  Polynomial tail() const;
  /// c * m * this.
  Polynomial mul_term(const Rational& c, const Monomial& m) const;
  /// this - c * m * g in one merge pass.
  Polynomial sub_mul(const Rational& c, const Monomial& m, const Polynomial& g) const;

  /// Scaled to integer coefficients with content 1 and positive leading
  /// coefficient. Zero stays zero.
  Polynomial normalized() const;

  bool operator==(const Polynomial& g) const;

  /// Canonical text: signed terms `c*v1^e1*v2^e2` in descending order,
  /// unit coefficients elided, "0" for zero.
  std::string to_string() const;

 private:
  void require_same_ring(const Polynomial& g) const;

  TablePtr table_;
  std::vector<Term> terms_;
};

/// Inverse of Polynomial::to_string. Accepts optional whitespace, arbitrary
/// term order and repeated monomials; throws UsageError on malformed input or
/// unknown variable names.
Polynomial parse_polynomial(std::string_view text, TablePtr table);

}  // namespace jetdet
