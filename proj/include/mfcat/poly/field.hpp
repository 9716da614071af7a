#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace mfcat {

using Rational = mpq_class;

// Coefficient field: the rationals or a prime field F_p.
//
// Elements of every field are carried as Rational values. For F_p the
// canonical representative is an integer in [0, p); all arithmetic entry
// points return canonical representatives, so equality of elements is
// equality of the stored values.
class Field {
 public:
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);
  // Accepts "Q" or "Fp:<p>".
  static Field parse(std::string_view text);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string name() const;

  // Maps an arbitrary rational into the field. Throws if the denominator
  // vanishes modulo p.
  Rational element(const Rational& q) const;
  Rational element(long value) const { return element(Rational(value)); }

  Rational add(const Rational& a, const Rational& b) const;
  Rational sub(const Rational& a, const Rational& b) const;
  Rational mul(const Rational& a, const Rational& b) const;
  Rational neg(const Rational& a) const;
  Rational inv(const Rational& a) const;
  Rational div(const Rational& a, const Rational& b) const { return mul(a, inv(b)); }

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint64_t p) : p_(p) {}

  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace mfcat
