#include "jetdet/monomial.hpp"

#include <bit>
#include <limits>

#include "jetdet/error.hpp"

namespace jetdet {

namespace {
constexpr unsigned kMaxExponent = std::numeric_limits<std::uint8_t>::max();
}

Monomial::Monomial(std::initializer_list<unsigned> exps) {
  if (exps.size() > kMaxVariables) throw UsageError("too many exponents for a monomial");
  std::size_t i = 0;
  for (unsigned e : exps) set_exponent(i++, e);
}

Monomial Monomial::variable(std::size_t index, unsigned power) {
  Monomial m;
  m.set_exponent(index, power);
  return m;
}

void Monomial::set_exponent(std::size_t i, unsigned e) {
  if (i >= kMaxVariables) throw UsageError("variable index out of range");
  if (e > kMaxExponent) throw UsageError("exponent overflow");
  degree_ = static_cast<std::uint16_t>(degree_ - exps_[i] + e);
  exps_[i] = static_cast<std::uint8_t>(e);
  if (e > 0) {
    support_ |= std::uint64_t{1} << i;
  } else {
    support_ &= ~(std::uint64_t{1} << i);
  }
}

bool Monomial::is_squarefree() const { return std::popcount(support_) == degree_; }

std::size_t Monomial::span() const {
  return support_ == 0 ? 0 : kMaxVariables - static_cast<std::size_t>(std::countl_zero(support_));
}

bool Monomial::divides(const Monomial& m) const {
  if ((support_ & ~m.support_) != 0 || degree_ > m.degree_) return false;
  for (std::uint64_t s = support_; s != 0; s &= s - 1) {
    const int i = std::countr_zero(s);
    if (exps_[i] > m.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
  Monomial r = *this;
  for (std::uint64_t s = m.support_; s != 0; s &= s - 1) {
    const int i = std::countr_zero(s);
    const unsigned e = unsigned{r.exps_[i]} + m.exps_[i];
    if (e > kMaxExponent) throw UsageError("exponent overflow in monomial product");
    r.exps_[i] = static_cast<std::uint8_t>(e);
  }
  r.support_ |= m.support_;
  r.degree_ = static_cast<std::uint16_t>(degree_ + m.degree_);
  return r;
}

Monomial Monomial::operator/(const Monomial& m) const {
  if (!m.divides(*this)) throw UsageError("monomial quotient is not exact");
  Monomial r = *this;
  for (std::uint64_t s = m.support_; s != 0; s &= s - 1) {
    const int i = std::countr_zero(s);
    r.exps_[i] = static_cast<std::uint8_t>(r.exps_[i] - m.exps_[i]);
    if (r.exps_[i] == 0) r.support_ &= ~(std::uint64_t{1} << i);
  }
  r.degree_ = static_cast<std::uint16_t>(degree_ - m.degree_);
  return r;
}

Monomial Monomial::lcm(const Monomial& m) const {
  Monomial r = *this;
  for (std::uint64_t s = m.support_; s != 0; s &= s - 1) {
    const int i = std::countr_zero(s);
    if (m.exps_[i] > r.exps_[i]) {
      r.degree_ = static_cast<std::uint16_t>(r.degree_ + m.exps_[i] - r.exps_[i]);
      r.exps_[i] = m.exps_[i];
    }
  }
  r.support_ |= m.support_;
  return r;
}

Monomial Monomial::gcd(const Monomial& m) const {
  Monomial r;
  for (std::uint64_t s = support_ & m.support_; s != 0; s &= s - 1) {
    const int i = std::countr_zero(s);
    r.set_exponent(static_cast<std::size_t>(i), std::min(exps_[i], m.exps_[i]));
  }
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (std::uint64_t s = support_; s != 0; s &= s - 1) {
    const int i = std::countr_zero(s);
    h = (h ^ (static_cast<std::size_t>(i) << 8 | exps_[i])) * 1099511628211ull;
  }
  return h;
}

std::strong_ordering grevlex(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  const std::size_t last = std::max(a.span(), b.span());
  for (std::size_t i = last; i-- > 0;) {
    const unsigned ea = a.exponent(i);
    const unsigned eb = b.exponent(i);
    if (ea != eb) return eb <=> ea;
  }
  return std::strong_ordering::equal;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = table_ ? table_->size() : 0;
  if (a.span() > n || b.span() > n) {
    throw UsageError("monomial uses a variable outside the order's table");
  }
  return grevlex(a, b);
}

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b,
                                       const MonomialOrder& order) {
  return order.compare(a, b);
}

std::string to_string(const Monomial& m, const VariableTable& table) {
  if (m.is_one()) return "1";
  if (m.span() > table.size()) throw UsageError("monomial does not fit the variable table");
  std::string out;
  for (std::size_t i = 0; i < table.size(); ++i) {
    const unsigned e = m.exponent(i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += table[i].name;
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace jetdet
