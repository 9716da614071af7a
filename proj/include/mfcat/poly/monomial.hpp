#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string_view>
#include <vector>

namespace mfcat {

enum class MonomialOrder { Lex, Grlex, Grevlex };

std::string_view order_name(MonomialOrder order);
MonomialOrder parse_order(std::string_view text);

// Exponent vector with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> exps);
  Monomial(std::initializer_list<std::uint32_t> exps) : Monomial(std::vector<std::uint32_t>(exps)) {}

  static Monomial unit(std::size_t nvars, std::size_t var, std::uint32_t power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  std::uint32_t operator[](std::size_t i) const noexcept { return exps_[i]; }
  std::uint32_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

  bool divides(const Monomial& other) const noexcept;
  bool coprime(const Monomial& other) const noexcept;
  // Index of the single variable if this is a pure power x_i^k (k > 0).
  std::ptrdiff_t pure_power_variable() const noexcept;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Exact quotient; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);
  friend Monomial lcm(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps_ == b.exps_; }

 private:
  std::vector<std::uint32_t> exps_;
  std::uint32_t degree_ = 0;
};

std::strong_ordering compare(MonomialOrder order, const Monomial& a, const Monomial& b) noexcept;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace mfcat
