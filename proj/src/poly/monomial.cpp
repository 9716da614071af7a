#include "mfcat/poly/monomial.hpp"

#include <algorithm>
#include <string>

#include "mfcat/error.hpp"

namespace mfcat {

std::string_view order_name(MonomialOrder order) {
  switch (order) {
    case MonomialOrder::Lex: return "lex";
    case MonomialOrder::Grlex: return "grlex";
    case MonomialOrder::Grevlex: return "grevlex";
  }
  return "grevlex";
}

MonomialOrder parse_order(std::string_view text) {
  if (text == "lex") return MonomialOrder::Lex;
  if (text == "grlex") return MonomialOrder::Grlex;
  if (text == "grevlex") return MonomialOrder::Grevlex;
  throw Error(ErrorCode::InvalidArgument, "unknown monomial order '" + std::string(text) + "'");
}

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
  for (auto e : exps_) degree_ += e;
}

Monomial Monomial::unit(std::size_t nvars, std::size_t var, std::uint32_t power) {
  Monomial m(nvars);
  m.exps_[var] = power;
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

std::ptrdiff_t Monomial::pure_power_variable() const noexcept {
  std::ptrdiff_t found = -1;
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] == 0) continue;
    if (found >= 0) return -1;
    found = static_cast<std::ptrdiff_t>(i);
  }
  return found;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m.exps_[i] = a.exps_[i] + b.exps_[i];
  m.degree_ = a.degree_ + b.degree_;
  return m;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) m.exps_[i] = a.exps_[i] - b.exps_[i];
  m.degree_ = a.degree_ - b.degree_;
  return m;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial m(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    m.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    m.degree_ += m.exps_[i];
  }
  return m;
}

std::strong_ordering compare(MonomialOrder order, const Monomial& a, const Monomial& b) noexcept {
  const std::size_t n = a.size();
  if (order != MonomialOrder::Lex && a.degree() != b.degree()) return a.degree() <=> b.degree();
  if (order == MonomialOrder::Grevlex) {
    for (std::size_t i = n; i-- > 0;) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] <=> b[i];
  }
  return std::strong_ordering::equal;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (auto e : m.exponents()) {
    h ^= e;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace mfcat
