#include "mfcat/poly/laurent.hpp"

#include <algorithm>

#include "mfcat/error.hpp"

namespace mfcat {

void LaurentPolynomial::add_term(Exponents exps, const Rational& c) {
  if (exps.size() != ring_->nvars()) throw Error(ErrorCode::LengthMismatch, "exponent vector length mismatch");
  const Field& k = ring_->field();
  auto [it, inserted] = terms_.try_emplace(std::move(exps), k.element(c));
  if (!inserted) it->second = k.add(it->second, k.element(c));
  if (sgn(it->second) == 0) terms_.erase(it);
}

LaurentPolynomial LaurentPolynomial::euler_derivative(std::size_t var) const {
  LaurentPolynomial out(ring_);
  for (const auto& [exps, c] : terms_) {
    if (exps[var] != 0) out.add_term(exps, c * Rational(exps[var]));
  }
  return out;
}

LaurentPolynomial::Cleared LaurentPolynomial::clear_denominators() const {
  const std::size_t n = ring_->nvars();
  std::vector<std::uint32_t> shift(n, 0);
  for (const auto& [exps, c] : terms_) {
    for (std::size_t i = 0; i < n; ++i) {
      if (exps[i] < 0) shift[i] = std::max<std::uint32_t>(shift[i], static_cast<std::uint32_t>(-exps[i]));
    }
  }
  std::vector<Term> out;
  for (const auto& [exps, c] : terms_) {
    std::vector<std::uint32_t> e(n);
    for (std::size_t i = 0; i < n; ++i) e[i] = static_cast<std::uint32_t>(exps[i] + static_cast<long>(shift[i]));
    out.push_back({Monomial(std::move(e)), c});
  }
  return Cleared{Polynomial::from_terms(ring_, std::move(out)), Monomial(std::move(shift))};
}

std::string LaurentPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  // Descending in the ring order applied to the cleared exponents.
  auto cleared = clear_denominators();
  std::string out;
  bool first = true;
  for (const auto& t : cleared.numerator.terms()) {
    Rational c = t.coeff;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    out += first ? (negative ? "-" : "") : (negative ? " - " : " + ");
    first = false;
    std::string num;
    std::string den;
    std::size_t den_factors = 0;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      long e = static_cast<long>(t.monomial[i]) - static_cast<long>(cleared.shift[i]);
      if (e == 0) continue;
      std::string factor = ring_->variables()[i] + (std::labs(e) > 1 ? "^" + std::to_string(std::labs(e)) : "");
      std::string& target = e > 0 ? num : den;
      if (!target.empty()) target += '*';
      target += factor;
      if (e < 0) ++den_factors;
    }
    std::string coeff = c == 1 ? "" : c.get_str();
    if (!coeff.empty() && !num.empty()) num = coeff + "*" + num;
    if (num.empty()) num = coeff.empty() ? "1" : coeff;
    out += num;
    if (!den.empty()) out += "/" + (den_factors > 1 ? "(" + den + ")" : den);
  }
  return out;
}

}  // namespace mfcat
