#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mfcat/poly/ring.hpp"

namespace mfcat {

struct Term {
  Monomial monomial;
  Rational coeff;
};

// Sparse multivariate polynomial. Terms are kept strictly decreasing in the
// ring's monomial order with nonzero canonical coefficients, so two equal
// polynomials have identical term vectors.
class Polynomial {
 public:
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial constant(Ring ring, const Rational& c);
  static Polynomial variable(Ring ring, std::size_t index);
  static Polynomial variable(Ring ring, std::string_view name);
  static Polynomial term(Ring ring, Monomial m, const Rational& c);
  // Accepts terms in any order, possibly repeated or zero.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);
  // Parses the textual grammar: `x^2*y - 3/2*z + 1`.
  static Polynomial parse(Ring ring, std::string_view text);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  const Term& leading() const { return terms_.front(); }
  // -1 for the zero polynomial.
  long total_degree() const noexcept;
  std::uint32_t degree_in(std::size_t var) const noexcept;
  // Coefficient of the constant term (zero if absent).
  Rational constant_coeff() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Monomial& m, const Rational& c) const;
  Polynomial monic() const;
  Polynomial pow(unsigned k) const;
  Polynomial derivative(std::size_t var) const;
  Rational evaluate(std::span<const Rational> point) const;
  // Re-expresses the polynomial in `target`; variable i maps to var_map[i].
  Polynomial embed(const Ring& target, std::span<const std::size_t> var_map) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  Polynomial(Ring ring, std::vector<Term> sorted_terms) : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  Ring ring_;
  std::vector<Term> terms_;
};

std::string monomial_to_string(const RingContext& ring, const Monomial& m);

}  // namespace mfcat
