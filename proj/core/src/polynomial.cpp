#include "jetdet/polynomial.hpp"

#include <algorithm>
#include <cctype>

#include "jetdet/error.hpp"

namespace jetdet {

namespace {

bool term_greater(const Term& a, const Term& b) { return grevlex(a.mono, b.mono) > 0; }

// Merge of two descending term lists: a + sign * c * m * b.
std::vector<Term> merge(std::span<const Term> a, std::span<const Term> b, const Rational& c,
                        const Monomial& m) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  const bool shift = !m.is_one();
  Term scaled;
  auto load = [&](std::size_t k) {
    scaled.mono = shift ? b[k].mono * m : b[k].mono;
  };
  if (j < b.size()) load(j);
  while (i < a.size() && j < b.size()) {
    const auto cmp = grevlex(a[i].mono, scaled.mono);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({c * b[j].coeff, scaled.mono});
      if (++j < b.size()) load(j);
    } else {
      Rational sum = a[i].coeff + c * b[j].coeff;
      if (sgn(sum) != 0) out.push_back({std::move(sum), a[i].mono});
      ++i;
      if (++j < b.size()) load(j);
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back({c * b[j].coeff, shift ? b[j].mono * m : b[j].mono});
  }
  return out;
}

}  // namespace

Polynomial Polynomial::from_terms(TablePtr table, std::vector<Term> terms) {
  const std::size_t n = table ? table->size() : 0;
  for (const auto& t : terms) {
    if (t.mono.span() > n) throw UsageError("term uses a variable outside the table");
  }
  std::sort(terms.begin(), terms.end(), term_greater);
  Polynomial p(std::move(table));
  for (auto& t : terms) {
    if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
      p.terms_.back().coeff += t.coeff;
    } else {
      if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
      p.terms_.push_back(std::move(t));
    }
  }
  if (!p.terms_.empty() && sgn(p.terms_.back().coeff) == 0) p.terms_.pop_back();
  return p;
}

Polynomial Polynomial::constant(TablePtr table, const Rational& c) {
  return term(std::move(table), c, Monomial{});
}

Polynomial Polynomial::variable(TablePtr table, std::size_t index) {
  if (!table || index >= table->size()) throw UsageError("variable index outside the table");
  return term(std::move(table), 1, Monomial::variable(index));
}

Polynomial Polynomial::term(TablePtr table, const Rational& c, const Monomial& m) {
  if (m.span() > (table ? table->size() : 0)) {
    throw UsageError("monomial uses a variable outside the table");
  }
  Polynomial p(std::move(table));
  if (sgn(c) != 0) p.terms_.push_back({c, m});
  return p;
}

Polynomial Polynomial::from_descending(TablePtr table, std::vector<Term> terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (sgn(terms[i].coeff) == 0 || (i > 0 && !term_greater(terms[i - 1], terms[i]))) {
      throw InternalError("from_descending: terms are not strictly descending and nonzero");
    }
  }
  Polynomial p(std::move(table));
  p.terms_ = std::move(terms);
  return p;
}

Polynomial Polynomial::tail() const {
  Polynomial r(table_);
  if (!terms_.empty()) r.terms_.assign(terms_.begin() + 1, terms_.end());
  return r;
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw UsageError("zero polynomial has no leading term");
  return terms_.front();
}

unsigned Polynomial::degree() const {
  unsigned d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [&](const Term& t) { return t.mono.degree() == terms_.front().mono.degree(); });
}

void Polynomial::require_same_ring(const Polynomial& g) const {
  if (!same_table(table_, g.table_)) throw UsageError("polynomials live in different rings");
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
  require_same_ring(g);
  Polynomial r(table_);
  r.terms_ = merge(terms_, g.terms_, 1, Monomial{});
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  require_same_ring(g);
  Polynomial r(table_);
  r.terms_ = merge(terms_, g.terms_, -1, Monomial{});
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  require_same_ring(g);
  if (is_zero() || g.is_zero()) return Polynomial(table_);
  const Polynomial& small = size() <= g.size() ? *this : g;
  const Polynomial& large = size() <= g.size() ? g : *this;
  // Each row small[i] * large is already descending; merge rows pairwise.
  Polynomial acc(table_);
  for (const auto& t : small.terms_) {
    acc.terms_ = merge(acc.terms_, large.terms_, t.coeff, t.mono);
  }
  return acc;
}

Polynomial Polynomial::operator*(const Rational& c) const {
  if (sgn(c) == 0) return Polynomial(table_);
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::mul_term(const Rational& c, const Monomial& m) const {
  if (sgn(c) == 0) return Polynomial(table_);
  Polynomial r(table_);
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.coeff * c, t.mono * m});
  return r;
}

Polynomial Polynomial::sub_mul(const Rational& c, const Monomial& m, const Polynomial& g) const {
  require_same_ring(g);
  Polynomial r(table_);
  r.terms_ = merge(terms_, g.terms_, -c, m);
  return r;
}

Polynomial Polynomial::normalized() const {
  if (is_zero()) return *this;
  Integer den_lcm = 1;
  for (const auto& t : terms_) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  Integer num_gcd = 0;
  for (const auto& t : terms_) {
    Integer num = t.coeff.get_num() * (den_lcm / t.coeff.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), num.get_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (sgn(lc()) < 0) scale = -scale;
  return *this * scale;
}

bool Polynomial::operator==(const Polynomial& g) const {
  return same_table(table_, g.table_) && terms_ == g.terms_;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    const bool negative = sgn(t.coeff) < 0;
    if (negative) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    const Rational mag = abs(t.coeff);
    if (t.mono.is_one()) {
      out += mag.get_str();
    } else {
      if (mag != 1) out += mag.get_str() + "*";
      out += jetdet::to_string(t.mono, *table_);
    }
  }
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const TablePtr& table) : text_(text), table_(table) {}

  Polynomial parse() {
    std::vector<Term> terms;
    skip_ws();
    if (at_end()) fail("empty input");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Term t = parse_term();
      t.coeff *= sign;
      terms.push_back(std::move(t));
      first = false;
      skip_ws();
    }
    return Polynomial::from_terms(table_, std::move(terms));
  }

 private:
  Term parse_term() {
    Term t{1, Monomial{}};
    for (;;) {
      skip_ws();
      if (at_end()) fail("dangling operator");
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        t.coeff *= parse_rational();
      } else {
        const std::size_t var = parse_variable();
        unsigned power = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          const Integer e = parse_unsigned();
          if (!e.fits_uint_p()) fail("exponent too large");
          power = static_cast<unsigned>(e.get_ui());
        }
        t.mono = t.mono * Monomial::variable(var, power);
      }
      skip_ws();
      if (at_end() || peek() != '*') return t;
      ++pos_;
    }
  }

  Rational parse_rational() {
    Integer num = parse_unsigned();
    if (!at_end() && peek() == '/') {
      ++pos_;
      Integer den = parse_unsigned();
      if (den == 0) fail("zero denominator");
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    return Rational(num);
  }

  Integer parse_unsigned() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  std::size_t parse_variable() {
    const std::size_t start = pos_;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
    if (start == pos_) fail("expected a variable or coefficient");
    if (!at_end() && peek() == '[') {
      while (!at_end() && peek() != ']') ++pos_;
      if (at_end()) fail("unterminated '['");
      ++pos_;
    }
    std::string name;
    for (char ch : text_.substr(start, pos_ - start)) {
      if (!std::isspace(static_cast<unsigned char>(ch))) name += ch;
    }
    if (auto idx = table_->find_name(name)) return *idx;
    fail("unknown variable '" + name + "'");
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  [[noreturn]] void fail(const std::string& why) const {
    throw UsageError("polynomial parse error at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string_view text_;
  const TablePtr& table_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, TablePtr table) {
  if (!table) throw UsageError("parse_polynomial needs a variable table");
  return Parser(text, table).parse();
}

}  // namespace jetdet
