#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>

#include "jetdet/variables.hpp"

namespace jetdet {

/// Power product over at most kMaxVariables indeterminates, stored densely.
/// The support bitmask (bit i set iff exponent i > 0) accelerates divisibility.
class Monomial {
 public:
  Monomial() = default;
  /// Exponent vector, position i is variable i of the table.
  Monomial(std::initializer_list<unsigned> exps);

  static Monomial variable(std::size_t index, unsigned power = 1);

  unsigned exponent(std::size_t i) const { return exps_[i]; }
  const std::array<std::uint8_t, kMaxVariables>& exponents() const { return exps_; }
  void set_exponent(std::size_t i, unsigned e);
  unsigned degree() const { return degree_; }
  std::uint64_t support() const { return support_; }
  bool is_one() const { return degree_ == 0; }
  bool is_squarefree() const;
  /// One past the largest variable index in the support (0 for the unit).
  std::size_t span() const;

  bool divides(const Monomial& m) const;
  bool coprime(const Monomial& m) const { return (support_ & m.support_) == 0; }

  Monomial operator*(const Monomial& m) const;
  /// this / m; requires m | this.
  Monomial operator/(const Monomial& m) const;
  Monomial lcm(const Monomial& m) const;
  Monomial gcd(const Monomial& m) const;

  bool operator==(const Monomial& m) const { return exps_ == m.exps_; }

  std::size_t hash() const;

 private:
  std::array<std::uint8_t, kMaxVariables> exps_{};
  std::uint64_t support_ = 0;
  std::uint16_t degree_ = 0;
};

/// Graded reverse lexicographic order over a variable table (Def: degree
/// first; on ties the monomial with the larger exponent at the last differing
/// position is smaller).
class MonomialOrder {
 public:
  explicit MonomialOrder(TablePtr table) : table_(std::move(table)) {}

  const TablePtr& table() const { return table_; }

  /// Throws UsageError if either monomial uses a variable outside the table.
  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;

  bool operator==(const MonomialOrder& o) const { return same_table(table_, o.table_); }

 private:
  TablePtr table_;
};

/// Unchecked grevlex comparison; both monomials are assumed to live in the
/// same ring.
std::strong_ordering grevlex(const Monomial& a, const Monomial& b);

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       const MonomialOrder& order);

/// Renders `v1^e1*v2^e2` using table names, or "1" for the unit.
std::string to_string(const Monomial& m, const VariableTable& table);

}  // namespace jetdet

template <>
struct std::hash<jetdet::Monomial> {
  std::size_t operator()(const jetdet::Monomial& m) const noexcept { return m.hash(); }
};
