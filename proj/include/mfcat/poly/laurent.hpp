#pragma once

#include <map>
#include <string>
#include <vector>

#include "mfcat/poly/polynomial.hpp"

namespace mfcat {

// Laurent polynomial over the variables of `ring`; exponents may be negative.
class LaurentPolynomial {
 public:
  using Exponents = std::vector<long>;

  explicit LaurentPolynomial(Ring ring) : ring_(std::move(ring)) {}

  const Ring& ring() const noexcept { return ring_; }
  const std::map<Exponents, Rational>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(Exponents exps, const Rational& c);

  // Y_i * dW/dY_i
  LaurentPolynomial euler_derivative(std::size_t var) const;

  // W = numerator / Y^shift with the smallest nonnegative shift.
  struct Cleared {
    Polynomial numerator;
    Monomial shift;
  };
  Cleared clear_denominators() const;

  std::string to_string() const;

 private:
  Ring ring_;
  std::map<Exponents, Rational> terms_;
};

}  // namespace mfcat
