#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jetdet/groebner.hpp"
#include "jetdet/jet_ideals.hpp"
#include "jetdet/polynomial.hpp"
#include "jetdet/shelling.hpp"

namespace jetdet {

/// Dense integer polynomial in z; no trailing zero coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<long> coeffs);
  explicit UniPoly(std::vector<Integer> coeffs);
  static UniPoly monomial(const Integer& c, std::size_t degree);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  const std::vector<Integer>& coeffs() const { return c_; }
  Integer coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Integer(0); }
  Integer at_one() const;
  /// Number of factors z dividing a nonzero polynomial.
  std::size_t z_valuation() const;

  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  UniPoly pow(unsigned e) const;
  /// Exact quotient by (1 - z); requires at_one() == 0.
  UniPoly div_one_minus_z() const;
  /// Exact quotient by z^k; requires z_valuation() >= k.
  UniPoly div_z(std::size_t k) const;

  bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  std::string to_string() const;  // e.g. 1+3z+3z^2+z^3

 private:
  void trim();
  std::vector<Integer> c_;
};

/// z^shift * numerator / (1 - z)^denom_pow, kept canonical: the numerator
/// carries no factor z, and no factor (1 - z) while denom_pow > 0.
class HilbertSeries {
 public:
  HilbertSeries() : HilbertSeries(UniPoly{1}, 0) {}
  HilbertSeries(UniPoly numerator, int denom_pow, int shift = 0);

  int shift() const { return shift_; }
  const UniPoly& numerator() const { return numerator_; }
  int denom_pow() const { return denom_pow_; }

  HilbertSeries operator*(const HilbertSeries& o) const;
  HilbertSeries pow(unsigned e) const;
  bool operator==(const HilbertSeries& o) const = default;

  /// Power-series coefficients of degrees 0..max_degree (shift must be >= 0).
  std::vector<Integer> expand(int max_degree) const;

  std::string to_string() const;

 private:
  void canonicalize();

  int shift_ = 0;
  UniPoly numerator_;
  int denom_pow_ = 0;
};

struct HilbertFunction {
  std::vector<Integer> values;  // values[d] = HF(d), d = 0..D
};

/// sum_j h_j z^j / (1 - z)^d.
HilbertSeries series_from_shelling(const HVector& h, int d);

/// det(sum_k C(m-i,k) C(n-j,k) z^k)_{1<=i,j<=r} / (z^{C(r,2)} (1-z)^{r(m+n-r)}):
/// the series of the quotient by the (r+1)-minors of a generic m x n matrix.
HilbertSeries closed_form_conca_herzog(int m, int n, int r);

/// (sum_k C(m-1,k) C(n-1,k) z^k / (1-z)^{m+n-1})^2: first jets, 2-minors.
HilbertSeries closed_form_first_jets_2minors(int m, int n);
/// ((1 + (n-2) z + C(n-1,2) z^2) / (1-z)^{2n+2})^2: first jets, 3-minors, m = 3.
HilbertSeries closed_form_first_jets_3minors(int n);
/// ((1 + (n-1) z) / (1-z)^{n+1})^3: second jets, 2-minors, m = 2.
HilbertSeries closed_form_second_jets_2x_n(int n);

struct OracleOptions {
  std::size_t max_nodes = 20'000'000;
};

/// Counts standard monomials of K[vars]/I degree by degree, splitting on the
/// variable that occurs in the most generators and memoizing subproblems.
HilbertFunction hilbert_function_oracle(const MonomialIdeal& ideal, int max_degree,
                                        const OracleOptions& opts = {});

struct SeriesComparison {
  bool equal = true;
  std::optional<int> first_divergence;  // degree of the first differing coefficient
  Integer expected;                     // coefficients at that degree
  Integer actual;
  int compared_through = -1;

  explicit operator bool() const { return equal; }
};

/// Exact equality of canonical forms; on mismatch the first differing
/// coefficient of the expansions is reported.
SeriesComparison series_compare(const HilbertSeries& a, const HilbertSeries& b);
/// a's expansion against HF values through min(max_degree, HF size - 1).
SeriesComparison series_compare(const HilbertSeries& a, const HilbertFunction& hf,
                                std::optional<int> max_degree = std::nullopt);

struct ConjectureOptions {
  CompletionOptions completion;
  OracleOptions oracle;
  /// Run completion only through the comparison degree (homogeneous input),
  /// which fixes the Hilbert function exactly in that range.
  bool truncate_at_max_degree = true;
};

enum class ConjectureStatus { kAgrees, kDisagrees, kCapped };

struct ConjectureReport {
  JetIdealSpec spec;
  int max_degree = 0;
  /// Case covered by a proven closed form (k = 0, or the three jet formulas).
  bool proven_case = false;
  ConjectureStatus status = ConjectureStatus::kCapped;
  HilbertSeries predicted;  // (quotient by r-minors)^(k+1)
  std::vector<Integer> predicted_values;
  HilbertFunction computed;
  SeriesComparison comparison;
  std::size_t basis_size = 0;
  std::size_t leading_ideal_size = 0;
  std::optional<unsigned> basis_truncated_at;
  std::string cap_message;  // set when status == kCapped
};

/// Compares HF of K[vars]/L(I^{m,n}_{r,k}) through max_degree against the
/// (k+1)-th power of the classical series. Caps produce a kCapped report.
ConjectureReport check_conjecture(const JetIdealSpec& spec, int max_degree, const ConjectureOptions& opts = {});

}  // namespace jetdet
