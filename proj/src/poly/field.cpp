#include "mfcat/poly/field.hpp"

#include <charconv>

#include "mfcat/error.hpp"

namespace mfcat {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

u64 residue(const mpz_class& z, u64 p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return r.get_ui();
}

Rational from_u64(u64 v) {
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &v);
  return Rational(z);
}

u64 to_u64(const Rational& q) {
  u64 v = 0;
  std::size_t count = 0;
  mpz_export(&v, &count, 1, sizeof(u64), 0, 0, q.get_num_mpz_t());
  return count == 0 ? 0 : v;
}

}  // namespace

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases for 64-bit integers.
  for (u64 a : {2ULL, 325ULL, 9375ULL, 28178ULL, 450775ULL, 9780504ULL, 1795265022ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 0 || x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(u64 p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::InvalidArgument, "field characteristic " + std::to_string(p) + " is not prime");
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.starts_with("Fp:")) {
    auto digits = text.substr(3);
    u64 p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return prime(p);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown field '" + std::string(text) + "' (expected Q or Fp:<p>)");
}

std::string Field::name() const { return p_ == 0 ? "Q" : "Fp:" + std::to_string(p_); }

Rational Field::element(const Rational& q) const {
  if (p_ == 0) return q;
  u64 num = residue(q.get_num(), p_);
  u64 den = residue(q.get_den(), p_);
  if (den == 0) {
    throw Error(ErrorCode::InvalidArgument, "denominator of " + q.get_str() + " vanishes in " + name());
  }
  return from_u64(mulmod(num, powmod(den, p_ - 2, p_), p_));
}

Rational Field::add(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a + b;
  u64 s = to_u64(a) + to_u64(b);
  if (s >= p_ || s < to_u64(a)) s -= p_;
  return from_u64(s);
}

Rational Field::sub(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a - b;
  u64 x = to_u64(a);
  u64 y = to_u64(b);
  return from_u64(x >= y ? x - y : x + (p_ - y));
}

Rational Field::mul(const Rational& a, const Rational& b) const {
  if (p_ == 0) return a * b;
  return from_u64(mulmod(to_u64(a), to_u64(b), p_));
}

Rational Field::neg(const Rational& a) const {
  if (p_ == 0) return -a;
  u64 x = to_u64(a);
  return from_u64(x == 0 ? 0 : p_ - x);
}

Rational Field::inv(const Rational& a) const {
  if (sgn(a) == 0) throw Error(ErrorCode::InvalidArgument, "division by zero");
  if (p_ == 0) return 1 / a;
  return from_u64(powmod(to_u64(a), p_ - 2, p_));
}

}  // namespace mfcat
