#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "jetdet/groebner.hpp"
#include "jetdet/polynomial.hpp"

namespace jetdet {

/// I^{m,n}_{r,k}: t-coefficients f_0..f_k of the r x r minors of the generic
/// m x n jet matrix X(t).
struct JetIdealSpec {
  int m = 2;
  int n = 2;
  int r = 2;
  int k = 0;

  void validate() const;  // 1 <= r <= m <= n, k >= 0; throws UsageError
  TablePtr table() const { return VariableTable::jet(m, n, k); }
};

/// A polynomial with the family label and index tuple it was built from.
struct TaggedPolynomial {
  std::string family;
  std::vector<int> index;
  Polynomial poly;
};

/// Power series in t truncated after t^k, coefficients in a polynomial ring.
class TruncatedSeries {
 public:
  TruncatedSeries(TablePtr table, int k);
  static TruncatedSeries jet_entry(const TablePtr& table, int k, int row, int col);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Polynomial& coeff(int s) const { return coeffs_[static_cast<std::size_t>(s)]; }

  TruncatedSeries operator+(const TruncatedSeries& o) const;
  TruncatedSeries operator-(const TruncatedSeries& o) const;
  TruncatedSeries operator*(const TruncatedSeries& o) const;

 private:
  std::vector<Polynomial> coeffs_;
};

/// Generators in fixed order: row set, then column set (both lexicographic),
/// then t-degree. Tags are "f<s>" with index (rows..., cols...).
std::vector<TaggedPolynomial> jet_generators_tagged(const JetIdealSpec& spec);
GeneratorSet jet_generators(const JetIdealSpec& spec);

/// The explicit candidate basis {a, b, c, d, e, f, g} for I^{2,n}_{2,2}.
struct GammaBasis {
  int n = 0;
  TablePtr table;
  std::vector<TaggedPolynomial> members;  // families a..g, indices lexicographic

  std::vector<const TaggedPolynomial*> family(char name) const;
  const Polynomial& get(char name, std::span<const int> index) const;
  GeneratorSet generator_set() const;
};

/// Admissible index tuples for one family at column count n:
/// a, b, c: p < q; d, e: p < q < r; f: l <= p < q < r; g: l < p < q < r.
std::vector<std::vector<int>> gamma_indices(char family, int n);

/// The defining determinant formula of a family member, evaluated at any
/// index tuple (repeated columns give 0 for the a, b, c families).
Polynomial gamma_polynomial(char family, std::span<const int> index, const TablePtr& table);

/// The printed leading monomial of a family member.
Monomial gamma_expected_lm(char family, std::span<const int> index, const VariableTable& table);

/// Builds every family over admissible indices and checks each leading
/// monomial against gamma_expected_lm (InternalError on mismatch).
GammaBasis gamma_basis(int n);

/// A combination sum_i multiplier_i * generator_i.
struct Combination {
  std::vector<std::pair<Polynomial, Polynomial>> terms;
  Polynomial sum(const TablePtr& table) const;
};

/// The membership identities expressing d, e, f, g through lower families:
///   d_{pqr} = -z2p b_qr + z2q b_pr - z2r b_pq - y2p c_qr + y2q c_pr - y2r c_pq
///   e_{pqr} = -y1p c_qr + y1q c_pr - y1r c_pq
///   f_{lpqr} = -z2l z2r a_pq + z2l z2q a_pr - z2l z2p a_qr
///              + [zx]_{qr} c_lp - [zx]_{pr} c_lq + [zx]_{pq} c_lr + y2l d_pqr
///   g_{lpqr} = sum over the six c_{uv} with 2x2 (z2, y2) minors of the
///              complementary columns,
/// where [zx]_{uv} = z2u x2v - z2v x2u.
Combination membership_combination(char family, std::span<const int> index, const TablePtr& table);

struct IdentityCheck {
  char family;
  std::vector<int> index;
  bool holds;
};

struct MembershipReport {
  std::vector<IdentityCheck> checks;
  bool all_hold() const;
  std::size_t failures() const;
};

/// Symbolically checks every membership identity for all admissible tuples.
MembershipReport verify_membership_identities(int n);

}  // namespace jetdet
