#include "jetdet/hilbert.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <sstream>

#include "jetdet/determinant.hpp"
#include "jetdet/error.hpp"

namespace jetdet {

namespace {

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) c_.emplace_back(c);
  trim();
}

UniPoly::UniPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Integer& c, std::size_t degree) {
  std::vector<Integer> v(degree + 1, Integer(0));
  v[degree] = c;
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Integer UniPoly::at_one() const {
  Integer s = 0;
  for (const auto& c : c_) s += c;
  return s;
}

std::size_t UniPoly::z_valuation() const {
  if (is_zero()) throw UsageError("z-valuation of the zero polynomial");
  std::size_t v = 0;
  while (c_[v] == 0) ++v;
  return v;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Integer> v(std::max(c_.size(), o.c_.size()), Integer(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
  std::vector<Integer> v(std::max(c_.size(), o.c_.size()), Integer(0));
  for (std::size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return UniPoly(std::move(v));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Integer> v(c_.size() + o.c_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  }
  return UniPoly(std::move(v));
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly out{1};
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

UniPoly UniPoly::div_one_minus_z() const {
  if (at_one() != 0) throw InternalError("polynomial is not divisible by 1-z");
  // q_i = sum_{j <= i} p_j
  std::vector<Integer> q(c_.empty() ? 0 : c_.size() - 1, Integer(0));
  Integer run = 0;
  for (std::size_t i = 0; i < q.size(); ++i) {
    run += c_[i];
    q[i] = run;
  }
  return UniPoly(std::move(q));
}

UniPoly UniPoly::div_z(std::size_t k) const {
  if (k == 0) return *this;
  if (is_zero()) return {};
  if (z_valuation() < k) throw InternalError("polynomial is not divisible by z^" + std::to_string(k));
  return UniPoly(std::vector<Integer>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

std::string UniPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const Integer& c = c_[i];
    if (c == 0) continue;
    Integer a = abs(c);
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    if (i == 0 || a != 1) os << a.get_str();
    if (i >= 1) os << 'z';
    if (i >= 2) os << '^' << i;
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------- HilbertSeries

HilbertSeries::HilbertSeries(UniPoly numerator, int denom_pow, int shift)
    : shift_(shift), numerator_(std::move(numerator)), denom_pow_(denom_pow) {
  if (denom_pow < 0) throw UsageError("denominator power must be non-negative");
  canonicalize();
}

void HilbertSeries::canonicalize() {
  if (numerator_.is_zero()) {
    shift_ = 0;
    denom_pow_ = 0;
    return;
  }
  std::size_t v = numerator_.z_valuation();
  if (v > 0) {
    numerator_ = numerator_.div_z(v);
    shift_ += static_cast<int>(v);
  }
  while (denom_pow_ > 0 && numerator_.at_one() == 0) {
    numerator_ = numerator_.div_one_minus_z();
    --denom_pow_;
  }
}

HilbertSeries HilbertSeries::operator*(const HilbertSeries& o) const {
  return HilbertSeries(numerator_ * o.numerator_, denom_pow_ + o.denom_pow_, shift_ + o.shift_);
}

HilbertSeries HilbertSeries::pow(unsigned e) const {
  HilbertSeries out;
  for (unsigned i = 0; i < e; ++i) out = out * *this;
  return out;
}

std::vector<Integer> HilbertSeries::expand(int max_degree) const {
  if (shift_ < 0) throw UsageError("cannot expand a series with negative shift");
  std::vector<Integer> out(static_cast<std::size_t>(std::max(max_degree + 1, 0)), Integer(0));
  const auto& num = numerator_.coeffs();
  for (int t = 0; t <= max_degree; ++t) {
    Integer acc = 0;
    for (std::size_t i = 0; i < num.size(); ++i) {
      long rest = t - shift_ - static_cast<long>(i);
      if (rest < 0) break;
      if (num[i] == 0) continue;
      if (denom_pow_ == 0) {
        if (rest == 0) acc += num[i];
      } else {
        acc += num[i] * binomial(rest + denom_pow_ - 1, denom_pow_ - 1);
      }
    }
    out[static_cast<std::size_t>(t)] = acc;
  }
  return out;
}

std::string HilbertSeries::to_string() const {
  std::ostringstream os;
  if (shift_ != 0) os << "z^" << shift_ << "*";
  os << "(" << numerator_.to_string() << ")";
  if (denom_pow_ > 0) os << "/(1-z)^" << denom_pow_;
  return os.str();
}

// ---------------------------------------------------------------- closed forms

HilbertSeries series_from_shelling(const HVector& h, int d) {
  std::vector<Integer> c;
  c.reserve(h.h.size());
  for (auto v : h.h) c.emplace_back(static_cast<long>(v));
  return HilbertSeries(UniPoly(std::move(c)), d);
}

HilbertSeries closed_form_conca_herzog(int m, int n, int r) {
  if (r < 0 || r > m || m > n) throw UsageError("closed form requires 0 <= r <= m <= n");
  if (r == 0) return HilbertSeries();
  Matrix<UniPoly> a(static_cast<std::size_t>(r), std::vector<UniPoly>(static_cast<std::size_t>(r)));
  for (int i = 1; i <= r; ++i) {
    for (int j = 1; j <= r; ++j) {
      std::vector<Integer> c;
      for (int k = 0; k <= std::min(m - i, n - j); ++k) c.push_back(binomial(m - i, k) * binomial(n - j, k));
      a[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] = UniPoly(std::move(c));
    }
  }
  UniPoly det = cofactor_determinant(a);
  auto drop = static_cast<std::size_t>(r * (r - 1) / 2);
  HilbertSeries out(det.div_z(drop), r * (m + n - r));
  if (out.shift() != 0) throw InternalError("classical series has nonzero shift");
  return out;
}

HilbertSeries closed_form_first_jets_2minors(int m, int n) {
  if (m < 1 || m > n) throw UsageError("closed form requires 1 <= m <= n");
  std::vector<Integer> c;
  for (int k = 0; k <= m - 1; ++k) c.push_back(binomial(m - 1, k) * binomial(n - 1, k));
  return HilbertSeries(UniPoly(std::move(c)), m + n - 1).pow(2);
}

HilbertSeries closed_form_first_jets_3minors(int n) {
  if (n < 3) throw UsageError("closed form requires n >= 3");
  UniPoly num(std::vector<Integer>{Integer(1), Integer(n - 2), binomial(n - 1, 2)});
  return HilbertSeries(std::move(num), 2 * n + 2).pow(2);
}

HilbertSeries closed_form_second_jets_2x_n(int n) {
  if (n < 2) throw UsageError("closed form requires n >= 2");
  return HilbertSeries(UniPoly{1, n - 1}, n + 1).pow(3);
}

// ---------------------------------------------------------------- oracle

namespace {

using Gens = std::vector<Monomial>;

struct GensKey {
  Gens gens;
  bool operator<(const GensKey& o) const {
    return std::lexicographical_compare(gens.begin(), gens.end(), o.gens.begin(), o.gens.end(),
                                        [](const Monomial& a, const Monomial& b) { return a.exponents() < b.exponents(); });
  }
};

Gens minimalize(Gens g) {
  std::sort(g.begin(), g.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.exponents() < b.exponents();
  });
  Gens out;
  for (auto& m : g) {
    bool redundant = false;
    for (const auto& k : out) {
      if (k.divides(m)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) out.push_back(std::move(m));
  }
  std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) { return a.exponents() < b.exponents(); });
  return out;
}

std::uint64_t support_of(const Gens& g) {
  std::uint64_t s = 0;
  for (const auto& m : g) s |= m.support();
  return s;
}

class Oracle {
 public:
  Oracle(int max_degree, std::size_t max_nodes) : d_(max_degree), max_nodes_(max_nodes) {
    // free_[v][t] = C(t+v-1, v-1): monomials of degree t in v variables
    free_.assign(kMaxVariables + 1, std::vector<Integer>(static_cast<std::size_t>(d_ + 1), Integer(0)));
    for (int v = 0; v <= static_cast<int>(kMaxVariables); ++v) {
      for (int t = 0; t <= d_; ++t) {
        free_[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)] =
            v == 0 ? Integer(t == 0 ? 1 : 0) : binomial(t + v - 1, v - 1);
      }
    }
  }

  /// HF of K[ambient]/I through d_; gens must be minimal and inside ambient.
  std::vector<Integer> run(const Gens& gens, int ambient) {
    Gens kept;
    for (const auto& g : gens) {
      if (static_cast<int>(g.degree()) <= d_) kept.push_back(g);
    }
    int used = std::popcount(support_of(kept));
    return convolve(solve(kept), free_[static_cast<std::size_t>(ambient - used)]);
  }

  std::size_t nodes() const { return nodes_; }

 private:
  std::vector<Integer> convolve(const std::vector<Integer>& a, const std::vector<Integer>& b) const {
    std::vector<Integer> out(static_cast<std::size_t>(d_ + 1), Integer(0));
    for (int i = 0; i <= d_; ++i) {
      if (a[static_cast<std::size_t>(i)] == 0) continue;
      for (int j = 0; i + j <= d_; ++j) out[static_cast<std::size_t>(i + j)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(j)];
    }
    return out;
  }

  // HF of K[supp(gens)]/<gens>, gens minimal with degree <= d_.
  std::vector<Integer> solve(const Gens& gens) {
    if (++nodes_ > max_nodes_) {
      throw CapExceeded("hilbert oracle node cap exceeded (" + std::to_string(max_nodes_) + ")",
                        "nodes=" + std::to_string(nodes_) + " memo=" + std::to_string(memo_.size()));
    }
    std::vector<Integer> out(static_cast<std::size_t>(d_ + 1), Integer(0));
    if (gens.empty()) {
      out[0] = 1;
      return out;
    }
    for (const auto& g : gens) {
      if (g.is_one()) return out;
    }
    // Linear generators kill a variable each; the rest is a product over
    // the remaining support.
    std::uint64_t linear = 0;
    for (const auto& g : gens) {
      if (g.degree() == 1) linear |= g.support();
    }
    if (linear != 0) {
      Gens rest;
      for (const auto& g : gens) {
        if (g.degree() != 1) rest.push_back(g);
      }
      // minimality keeps rest off the linear variables
      return solve(rest);
    }
    if (gens.size() == 1) {
      // 1 - z^deg over (1-z)^{|supp|}, then drop the |supp| ambient factor
      const auto& g = gens[0];
      int v = std::popcount(g.support());
      int e = static_cast<int>(g.degree());
      for (int t = 0; t <= d_; ++t) {
        out[static_cast<std::size_t>(t)] = free_[static_cast<std::size_t>(v)][static_cast<std::size_t>(t)];
        if (t >= e) out[static_cast<std::size_t>(t)] -= free_[static_cast<std::size_t>(v)][static_cast<std::size_t>(t - e)];
      }
      return out;
    }

    GensKey key{gens};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Pivot: variable in the most generators; lowest index on ties.
    std::array<int, kMaxVariables> count{};
    for (const auto& g : gens) {
      for (std::uint64_t s = g.support(); s; s &= s - 1) ++count[static_cast<std::size_t>(std::countr_zero(s))];
    }
    std::size_t x = 0;
    for (std::size_t i = 1; i < kMaxVariables; ++i) {
      if (count[i] > count[x]) x = i;
    }
    int emax = 0;
    for (const auto& g : gens) emax = std::max(emax, static_cast<int>(g.exponent(x)));

    // Standard monomials split by the power e of x:
    // x^e * (standard monomials of I_e), I_e = <g / x^{g_x} : g_x <= e>.
    std::uint64_t full = support_of(gens) & ~(std::uint64_t{1} << x);
    for (int e = 0; e <= std::min(emax, d_); ++e) {
      Gens ie;
      for (const auto& g : gens) {
        if (static_cast<int>(g.exponent(x)) <= e) {
          Monomial h = g;
          h.set_exponent(x, 0);
          ie.push_back(h);
        }
      }
      ie = minimalize(std::move(ie));
      int free_vars = std::popcount(full & ~support_of(ie));
      std::vector<Integer> part = convolve(solve(ie), free_[static_cast<std::size_t>(free_vars)]);
      if (e < emax) {
        for (int t = e; t <= d_; ++t) out[static_cast<std::size_t>(t)] += part[static_cast<std::size_t>(t - e)];
      } else {
        // x^e, x^{e+1}, ... all see I_emax
        for (int t = e; t <= d_; ++t) {
          for (int s = e; s <= t; ++s) out[static_cast<std::size_t>(t)] += part[static_cast<std::size_t>(t - s)];
        }
      }
    }
    memo_.emplace(std::move(key), out);
    return out;
  }

  int d_;
  std::size_t max_nodes_;
  std::size_t nodes_ = 0;
  std::vector<std::vector<Integer>> free_;
  std::map<GensKey, std::vector<Integer>> memo_;
};

}  // namespace

HilbertFunction hilbert_function_oracle(const MonomialIdeal& ideal, int max_degree, const OracleOptions& opts) {
  if (max_degree < 0) throw UsageError("maximum degree must be non-negative");
  Gens gens = minimalize(ideal.gens());
  Oracle oracle(max_degree, opts.max_nodes);
  return HilbertFunction{oracle.run(gens, static_cast<int>(ideal.table()->size()))};
}

// ---------------------------------------------------------------- comparison

SeriesComparison series_compare(const HilbertSeries& a, const HilbertSeries& b) {
  SeriesComparison out;
  if (a == b) return out;
  out.equal = false;
  // Expand far enough to locate the first differing coefficient.
  int reach = std::max(a.numerator().degree() + a.shift(), b.numerator().degree() + b.shift()) +
              std::max(a.denom_pow(), b.denom_pow()) + 1;
  if (a.shift() < 0 || b.shift() < 0) return out;
  auto ea = a.expand(reach);
  auto eb = b.expand(reach);
  for (int t = 0; t <= reach; ++t) {
    if (ea[static_cast<std::size_t>(t)] != eb[static_cast<std::size_t>(t)]) {
      out.first_divergence = t;
      out.expected = ea[static_cast<std::size_t>(t)];
      out.actual = eb[static_cast<std::size_t>(t)];
      out.compared_through = t;
      return out;
    }
  }
  out.compared_through = reach;
  return out;
}

SeriesComparison series_compare(const HilbertSeries& a, const HilbertFunction& hf, std::optional<int> max_degree) {
  SeriesComparison out;
  int d = static_cast<int>(hf.values.size()) - 1;
  if (max_degree) d = std::min(d, *max_degree);
  if (d < 0) return out;
  auto ea = a.expand(d);
  for (int t = 0; t <= d; ++t) {
    if (ea[static_cast<std::size_t>(t)] != hf.values[static_cast<std::size_t>(t)]) {
      out.equal = false;
      out.first_divergence = t;
      out.expected = ea[static_cast<std::size_t>(t)];
      out.actual = hf.values[static_cast<std::size_t>(t)];
      out.compared_through = t;
      return out;
    }
  }
  out.compared_through = d;
  return out;
}

// ---------------------------------------------------------------- conjecture

namespace {

bool proven(const JetIdealSpec& s) {
  if (s.k == 0) return true;
  if (s.k == 1 && s.r == 2) return true;
  if (s.k == 1 && s.r == 3 && s.m == 3) return true;
  if (s.k == 2 && s.r == 2 && s.m == 2) return true;
  return false;
}

}  // namespace

ConjectureReport check_conjecture(const JetIdealSpec& spec, int max_degree, const ConjectureOptions& opts) {
  spec.validate();
  if (max_degree < 0) throw UsageError("maximum degree must be non-negative");
  ConjectureReport rep;
  rep.spec = spec;
  rep.max_degree = max_degree;
  rep.proven_case = proven(spec);
  rep.predicted = closed_form_conca_herzog(spec.m, spec.n, spec.r - 1).pow(static_cast<unsigned>(spec.k + 1));
  rep.predicted_values = rep.predicted.expand(max_degree);

  CompletionOptions copts = opts.completion;
  if (opts.truncate_at_max_degree) copts.degree_bound = static_cast<unsigned>(max_degree);
  try {
    CompletionStats stats;
    GeneratorSet gb = buchberger_completion(jet_generators(spec), copts, &stats);
    rep.basis_size = gb.size();
    rep.basis_truncated_at = stats.truncated_at;
    MonomialIdeal lead = leading_ideal(gb);
    rep.leading_ideal_size = lead.size();
    rep.computed = hilbert_function_oracle(lead, max_degree, opts.oracle);
  } catch (const CapExceeded& e) {
    rep.status = ConjectureStatus::kCapped;
    rep.cap_message = std::string(e.what()) + "; " + e.partial_state();
    return rep;
  }
  rep.comparison = series_compare(rep.predicted, rep.computed, max_degree);
  rep.status = rep.comparison.equal ? ConjectureStatus::kAgrees : ConjectureStatus::kDisagrees;
  return rep;
}

}  // namespace jetdet
