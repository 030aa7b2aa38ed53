#include "jetdet/jet_ideals.hpp"

#include <algorithm>

#include "jetdet/determinant.hpp"
#include "jetdet/error.hpp"

namespace jetdet {

void JetIdealSpec::validate() const {
  if (r < 1 || r > m || m > n || k < 0) {
    throw UsageError("jet ideal needs 1 <= r <= m <= n and k >= 0 (got m=" + std::to_string(m) +
                     " n=" + std::to_string(n) + " r=" + std::to_string(r) + " k=" + std::to_string(k) + ")");
  }
}

TruncatedSeries::TruncatedSeries(TablePtr table, int k) {
  coeffs_.assign(static_cast<std::size_t>(k) + 1, Polynomial(std::move(table)));
}

TruncatedSeries TruncatedSeries::jet_entry(const TablePtr& table, int k, int row, int col) {
  TruncatedSeries s(table, k);
  for (int layer = 0; layer <= k; ++layer) {
    s.coeffs_[static_cast<std::size_t>(layer)] = Polynomial::variable(table, table->index(layer, row, col));
  }
  return s;
}

TruncatedSeries TruncatedSeries::operator+(const TruncatedSeries& o) const {
  TruncatedSeries r = *this;
  for (std::size_t s = 0; s < coeffs_.size(); ++s) r.coeffs_[s] += o.coeffs_[s];
  return r;
}

TruncatedSeries TruncatedSeries::operator-(const TruncatedSeries& o) const {
  TruncatedSeries r = *this;
  for (std::size_t s = 0; s < coeffs_.size(); ++s) r.coeffs_[s] -= o.coeffs_[s];
  return r;
}

TruncatedSeries TruncatedSeries::operator*(const TruncatedSeries& o) const {
  TruncatedSeries r = *this;
  for (std::size_t s = 0; s < coeffs_.size(); ++s) {
    Polynomial acc(coeffs_[0].table());
    for (std::size_t u = 0; u <= s; ++u) acc += coeffs_[u] * o.coeffs_[s - u];
    r.coeffs_[s] = std::move(acc);
  }
  return r;
}

namespace {

// All size-r subsets of {1..n} in lexicographic order.
std::vector<std::vector<int>> subsets(int n, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
  if (r > n) return out;
  for (;;) {
    out.push_back(cur);
    int i = r - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - r + i + 1) --i;
    if (i < 0) return out;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

std::vector<TaggedPolynomial> jet_generators_tagged(const JetIdealSpec& spec) {
  spec.validate();
  const TablePtr table = spec.table();
  std::vector<TaggedPolynomial> out;
  for (const auto& rows : subsets(spec.m, spec.r)) {
    for (const auto& cols : subsets(spec.n, spec.r)) {
      Matrix<TruncatedSeries> mat;
      for (int i : rows) {
        std::vector<TruncatedSeries> row;
        for (int j : cols) row.push_back(TruncatedSeries::jet_entry(table, spec.k, i, j));
        mat.push_back(std::move(row));
      }
      const TruncatedSeries minor = cofactor_determinant(mat);
      std::vector<int> index = rows;
      index.insert(index.end(), cols.begin(), cols.end());
      for (int s = 0; s <= spec.k; ++s) {
        out.push_back({"f" + std::to_string(s), index, minor.coeff(s)});
      }
    }
  }
  return out;
}

GeneratorSet jet_generators(const JetIdealSpec& spec) {
  auto tagged = jet_generators_tagged(spec);
  GeneratorSet g(spec.table());
  for (auto& t : tagged) g.add(std::move(t.poly));
  return g;
}

namespace {

constexpr int kX = 0;
constexpr int kY = 1;
constexpr int kZ = 2;

struct GammaRing {
  const TablePtr& table;

  Polynomial var(int layer, int row, int col) const {
    return Polynomial::variable(table, table->index(layer, row, col));
  }
  Polynomial x(int i, int j) const { return var(kX, i, j); }
  Polynomial y(int i, int j) const { return var(kY, i, j); }
  Polynomial z(int i, int j) const { return var(kZ, i, j); }
  Polynomial zero() const { return Polynomial(table); }

  // Row of variables of one layer/row over the given columns.
  std::vector<Polynomial> row(int layer, int i, std::initializer_list<int> cols) const {
    std::vector<Polynomial> out;
    for (int c : cols) out.push_back(var(layer, i, c));
    return out;
  }

  Polynomial det2(int l1, int r1, int l2, int r2, int p, int q) const {
    return determinant({row(l1, r1, {p, q}), row(l2, r2, {p, q})});
  }
  Polynomial det3(int l1, int r1, int l2, int r2, int l3, int r3, int p, int q, int r) const {
    return determinant({row(l1, r1, {p, q, r}), row(l2, r2, {p, q, r}), row(l3, r3, {p, q, r})});
  }

  Polynomial a(int p, int q) const { return det2(kX, 1, kX, 2, p, q); }
  Polynomial b(int p, int q) const { return det2(kX, 1, kY, 2, p, q) + det2(kY, 1, kX, 2, p, q); }
  Polynomial c(int p, int q) const {
    return det2(kX, 1, kZ, 2, p, q) + det2(kZ, 1, kX, 2, p, q) + det2(kY, 1, kY, 2, p, q);
  }
  Polynomial d(int p, int q, int r) const {
    return det3(kX, 2, kY, 1, kZ, 2, p, q, r) + det3(kX, 2, kZ, 1, kY, 2, p, q, r);
  }
  Polynomial e(int p, int q, int r) const {
    return det3(kX, 1, kY, 1, kZ, 2, p, q, r) + det3(kZ, 1, kY, 1, kX, 2, p, q, r);
  }
  Polynomial f(int l, int p, int q, int r) const {
    PolyMatrix m{
        {zero(), x(2, p), x(2, q), x(2, r)},
        {x(2, l), y(2, p), y(2, q), y(2, r)},
        {y(1, l), z(1, p), z(1, q), z(1, r)},
        {y(2, l), z(2, p), z(2, q), z(2, r)},
    };
    return determinant(m);
  }
  Polynomial g(int l, int p, int q, int r) const {
    PolyMatrix m{
        row(kX, 2, {l, p, q, r}),
        row(kY, 2, {l, p, q, r}),
        row(kZ, 2, {l, p, q, r}),
        row(kZ, 1, {l, p, q, r}),
    };
    return determinant(m);
  }
};

std::size_t family_arity(char family) {
  switch (family) {
    case 'a':
    case 'b':
    case 'c':
      return 2;
    case 'd':
    case 'e':
      return 3;
    case 'f':
    case 'g':
      return 4;
    default:
      throw UsageError(std::string("unknown family '") + family + "'");
  }
}

void require_index(char family, std::span<const int> index, const VariableTable& table) {
  if (index.size() != family_arity(family)) {
    throw UsageError(std::string("family ") + family + " takes " + std::to_string(family_arity(family)) +
                     " indices");
  }
  const int n = static_cast<int>(table.size() / 6);
  for (int v : index) {
    if (v < 1 || v > n) throw UsageError("column index out of range");
  }
}

}  // namespace

std::vector<std::vector<int>> gamma_indices(char family, int n) {
  std::vector<std::vector<int>> out;
  switch (family_arity(family)) {
    case 2:
      for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q) out.push_back({p, q});
      break;
    case 3:
      for (int p = 1; p <= n; ++p)
        for (int q = p + 1; q <= n; ++q)
          for (int r = q + 1; r <= n; ++r) out.push_back({p, q, r});
      break;
    default: {
      const int strict = family == 'g' ? 1 : 0;
      for (int l = 1; l <= n; ++l)
        for (int p = l + strict; p <= n; ++p)
          for (int q = p + 1; q <= n; ++q)
            for (int r = q + 1; r <= n; ++r) out.push_back({l, p, q, r});
    }
  }
  return out;
}

Polynomial gamma_polynomial(char family, std::span<const int> i, const TablePtr& table) {
  require_index(family, i, *table);
  const GammaRing ring{table};
  switch (family) {
    case 'a': return ring.a(i[0], i[1]);
    case 'b': return ring.b(i[0], i[1]);
    case 'c': return ring.c(i[0], i[1]);
    case 'd': return ring.d(i[0], i[1], i[2]);
    case 'e': return ring.e(i[0], i[1], i[2]);
    case 'f': return ring.f(i[0], i[1], i[2], i[3]);
    default: return ring.g(i[0], i[1], i[2], i[3]);
  }
}

Monomial gamma_expected_lm(char family, std::span<const int> i, const VariableTable& table) {
  require_index(family, i, table);
  auto v = [&](int layer, int row, int col) { return Monomial::variable(table.index(layer, row, col)); };
  switch (family) {
    case 'a': return v(kX, 1, i[1]) * v(kX, 2, i[0]);
    case 'b': return v(kX, 1, i[0]) * v(kY, 2, i[1]);
    case 'c': return v(kY, 1, i[1]) * v(kY, 2, i[0]);
    case 'd': return v(kX, 2, i[0]) * v(kY, 1, i[1]) * v(kZ, 2, i[2]);
    case 'e': return v(kX, 1, i[0]) * v(kY, 1, i[1]) * v(kZ, 2, i[2]);
    // f_{l,p,q,r}: x_{2,p} y_{1,l} y_{2,q} z_{2,r}
    case 'f': return v(kX, 2, i[1]) * v(kY, 1, i[0]) * v(kY, 2, i[2]) * v(kZ, 2, i[3]);
    // g_{l,p,q,r}: x_{2,l} y_{2,p} z_{1,r} z_{2,q}
    default: return v(kX, 2, i[0]) * v(kY, 2, i[1]) * v(kZ, 1, i[3]) * v(kZ, 2, i[2]);
  }
}

std::vector<const TaggedPolynomial*> GammaBasis::family(char name) const {
  std::vector<const TaggedPolynomial*> out;
  for (const auto& m : members) {
    if (m.family.size() == 1 && m.family[0] == name) out.push_back(&m);
  }
  return out;
}

const Polynomial& GammaBasis::get(char name, std::span<const int> index) const {
  for (const auto& m : members) {
    if (m.family.size() == 1 && m.family[0] == name && std::ranges::equal(m.index, index)) return m.poly;
  }
  throw UsageError(std::string("no Gamma member ") + name + " at that index");
}

GeneratorSet GammaBasis::generator_set() const {
  GeneratorSet g(table);
  for (const auto& m : members) g.add(m.poly);
  return g;
}

GammaBasis gamma_basis(int n) {
  if (n < 2) throw UsageError("gamma_basis needs n >= 2");
  GammaBasis basis{n, VariableTable::jet(2, n, 2), {}};
  for (char family : {'a', 'b', 'c', 'd', 'e', 'f', 'g'}) {
    for (auto& index : gamma_indices(family, n)) {
      Polynomial p = gamma_polynomial(family, index, basis.table);
      const Monomial expected = gamma_expected_lm(family, index, *basis.table);
      if (p.is_zero() || !(p.lm() == expected)) {
        throw InternalError(std::string("leading monomial of ") + family + " differs from " +
                            to_string(expected, *basis.table));
      }
      basis.members.push_back({std::string(1, family), std::move(index), std::move(p)});
    }
  }
  return basis;
}

Polynomial Combination::sum(const TablePtr& table) const {
  Polynomial acc(table);
  for (const auto& [mult, gen] : terms) acc += mult * gen;
  return acc;
}

Combination membership_combination(char family, std::span<const int> i, const TablePtr& table) {
  require_index(family, i, *table);
  const GammaRing R{table};
  Combination c;
  auto add = [&](Polynomial mult, Polynomial gen) { c.terms.emplace_back(std::move(mult), std::move(gen)); };
  switch (family) {
    case 'd': {
      const int p = i[0], q = i[1], r = i[2];
      add(-R.z(2, p), R.b(q, r));
      add(R.z(2, q), R.b(p, r));
      add(-R.z(2, r), R.b(p, q));
      add(-R.y(2, p), R.c(q, r));
      add(R.y(2, q), R.c(p, r));
      add(-R.y(2, r), R.c(p, q));
      break;
    }
    case 'e': {
      const int p = i[0], q = i[1], r = i[2];
      add(-R.y(1, p), R.c(q, r));
      add(R.y(1, q), R.c(p, r));
      add(-R.y(1, r), R.c(p, q));
      break;
    }
    case 'f': {
      const int l = i[0], p = i[1], q = i[2], r = i[3];
      auto zx = [&](int u, int v) { return R.z(2, u) * R.x(2, v) - R.z(2, v) * R.x(2, u); };
      add(-(R.z(2, l) * R.z(2, r)), R.a(p, q));
      add(R.z(2, l) * R.z(2, q), R.a(p, r));
      add(-(R.z(2, l) * R.z(2, p)), R.a(q, r));
      add(zx(q, r), R.c(l, p));
      add(-zx(p, r), R.c(l, q));
      add(zx(p, q), R.c(l, r));
      add(R.y(2, l), R.d(p, q, r));
      break;
    }
    case 'g': {
      const int l = i[0], p = i[1], q = i[2], r = i[3];
      auto minor = [&](int u, int v) { return R.z(2, u) * R.y(2, v) - R.y(2, u) * R.z(2, v); };
      add(minor(q, r), R.c(l, p));
      add(-minor(p, r), R.c(l, q));
      add(minor(l, r), R.c(p, q));
      add(minor(p, q), R.c(l, r));
      add(-minor(l, q), R.c(p, r));
      add(minor(l, p), R.c(q, r));
      break;
    }
    default:
      throw UsageError(std::string("no membership identity for family ") + family);
  }
  return c;
}

bool MembershipReport::all_hold() const { return failures() == 0; }

std::size_t MembershipReport::failures() const {
  return static_cast<std::size_t>(std::ranges::count_if(checks, [](const auto& c) { return !c.holds; }));
}

MembershipReport verify_membership_identities(int n) {
  if (n < 3) throw UsageError("membership identities need n >= 3");
  const TablePtr table = VariableTable::jet(2, n, 2);
  MembershipReport report;
  for (char family : {'d', 'e', 'f', 'g'}) {
    for (auto& index : gamma_indices(family, n)) {
      const bool holds = gamma_polynomial(family, index, table) == membership_combination(family, index, table).sum(table);
      report.checks.push_back({family, std::move(index), holds});
    }
  }
  return report;
}

}  // namespace jetdet
