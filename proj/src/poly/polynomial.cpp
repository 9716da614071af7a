#include "mfcat/poly/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "mfcat/error.hpp"

namespace mfcat {

namespace {

// Merges two strictly decreasing term lists, a + sign*b.
std::vector<Term> merge_terms(const RingContext& ring, const std::vector<Term>& a, const std::vector<Term>& b,
                              bool subtract) {
  const Field& k = ring.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    std::strong_ordering c = std::strong_ordering::greater;
    if (i == a.size()) {
      c = std::strong_ordering::less;
    } else if (j < b.size()) {
      c = compare(ring.order(), a[i].monomial, b[j].monomial);
    }
    if (c == std::strong_ordering::greater) {
      out.push_back(a[i++]);
    } else if (c == std::strong_ordering::less) {
      out.push_back({b[j].monomial, subtract ? k.neg(b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Rational s = subtract ? k.sub(a[i].coeff, b[j].coeff) : k.add(a[i].coeff, b[j].coeff);
      if (sgn(s) != 0) out.push_back({a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  return out;
}

class Parser {
 public:
  Parser(const Ring& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial run() {
    std::vector<Term> terms;
    skip();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      Term t = parse_term();
      if (negative) t.coeff = -t.coeff;
      terms.push_back(std::move(t));
      first = false;
      skip();
    }
    const Field& k = ring_->field();
    for (auto& t : terms) t.coeff = k.element(t.coeff);
    return Polynomial::from_terms(ring_, std::move(terms));
  }

 private:
  Term parse_term() {
    Term t{Monomial(ring_->nvars()), Rational(1)};
    while (true) {
      skip();
      if (at_end()) fail("expected a coefficient or variable");
      char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        mpz_class num = parse_integer();
        mpz_class den = 1;
        skip();
        if (!at_end() && peek() == '/') {
          ++pos_;
          skip();
          if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected denominator");
          den = parse_integer();
          if (den == 0) fail("zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        t.coeff *= q;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t start = pos_;
        while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        std::string_view name = text_.substr(start, pos_ - start);
        auto idx = ring_->index_of(name);
        if (!idx) fail("unknown variable '" + std::string(name) + "'", start);
        std::uint32_t power = 1;
        skip();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip();
          if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent");
          mpz_class e = parse_integer();
          if (!e.fits_uint_p()) fail("exponent too large");
          power = static_cast<std::uint32_t>(e.get_ui());
        }
        t.monomial = t.monomial * Monomial::unit(ring_->nvars(), *idx, power);
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip();
      if (!at_end() && peek() == '*') {
        ++pos_;
        continue;
      }
      return t;
    }
  }

  mpz_class parse_integer() {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  void skip() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  [[noreturn]] void fail(const std::string& message) { fail(message, pos_); }
  [[noreturn]] void fail(const std::string& message, std::size_t at) {
    throw Error(ErrorCode::ParseError, "column " + std::to_string(at + 1) + ": " + message + " in '" +
                                           std::string(text_) + "'");
  }

  const Ring& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::constant(Ring ring, const Rational& c) {
  Rational v = ring->field().element(c);
  std::size_t n = ring->nvars();
  if (sgn(v) == 0) return Polynomial(std::move(ring));
  return Polynomial(std::move(ring), {Term{Monomial(n), std::move(v)}});
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  std::size_t n = ring->nvars();
  return Polynomial(std::move(ring), {Term{Monomial::unit(n, index), Rational(1)}});
}

Polynomial Polynomial::variable(Ring ring, std::string_view name) {
  auto idx = ring->index_of(name);
  if (!idx) throw Error(ErrorCode::InvalidArgument, "unknown variable '" + std::string(name) + "'");
  return variable(std::move(ring), *idx);
}

Polynomial Polynomial::term(Ring ring, Monomial m, const Rational& c) {
  Rational v = ring->field().element(c);
  if (sgn(v) == 0) return Polynomial(std::move(ring));
  return Polynomial(std::move(ring), {Term{std::move(m), std::move(v)}});
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  const RingContext& r = *ring;
  for (const auto& t : terms) {
    if (t.monomial.size() != r.nvars()) throw Error(ErrorCode::LengthMismatch, "exponent vector length mismatch");
  }
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return compare(r.order(), a.monomial, b.monomial) == std::strong_ordering::greater;
  });
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff = r.field().add(out.back().coeff, t.coeff);
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return sgn(t.coeff) == 0; });
  return Polynomial(std::move(ring), std::move(out));
}

Polynomial Polynomial::parse(Ring ring, std::string_view text) { return Parser(ring, text).run(); }

bool Polynomial::is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].monomial.is_one()); }

long Polynomial::total_degree() const noexcept {
  long d = -1;
  for (const auto& t : terms_) d = std::max<long>(d, t.monomial.degree());
  return d;
}

std::uint32_t Polynomial::degree_in(std::size_t var) const noexcept {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

Rational Polynomial::constant_coeff() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coeff;
  return Rational(0);
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = ring_->field().neg(t.coeff);
  return Polynomial(ring_, std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_);
  terms_ = merge_terms(*ring_, terms_, other.terms_, false);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ring(ring_, other.ring_);
  terms_ = merge_terms(*ring_, terms_, other.terms_, true);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a.ring_, b.ring_);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
  const Field& k = a.ring_->field();
  std::vector<Term> products;
  products.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& s : a.terms_) {
    for (const auto& t : b.terms_) products.push_back({s.monomial * t.monomial, k.mul(s.coeff, t.coeff)});
  }
  return Polynomial::from_terms(a.ring_, std::move(products));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Rational v = ring_->field().element(c);
  if (sgn(v) == 0) return Polynomial(ring_);
  std::vector<Term> out = terms_;
  for (auto& t : out) t.coeff = ring_->field().mul(t.coeff, v);
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  if (sgn(c) == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({t.monomial * m, ring_->field().mul(t.coeff, c)});
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(terms_.front().coeff));
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result = constant(ring_, 1);
  for (unsigned i = 0; i < k; ++i) result = result * *this;
  return result;
}

Polynomial Polynomial::derivative(std::size_t var) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    std::uint32_t e = t.monomial[var];
    if (e == 0) continue;
    std::vector<std::uint32_t> exps = t.monomial.exponents();
    exps[var] -= 1;
    out.push_back({Monomial(std::move(exps)), ring_->field().mul(t.coeff, ring_->field().element(Rational(e)))});
  }
  return from_terms(ring_, std::move(out));
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  if (point.size() != ring_->nvars()) throw Error(ErrorCode::LengthMismatch, "evaluation point has wrong length");
  const Field& k = ring_->field();
  Rational sum(0);
  for (const auto& t : terms_) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (std::uint32_t e = 0; e < t.monomial[i]; ++e) v = k.mul(v, point[i]);
    }
    sum = k.add(sum, v);
  }
  return sum;
}

Polynomial Polynomial::embed(const Ring& target, std::span<const std::size_t> var_map) const {
  if (var_map.size() != ring_->nvars()) throw Error(ErrorCode::LengthMismatch, "variable map has wrong length");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    std::vector<std::uint32_t> exps(target->nvars(), 0);
    for (std::size_t i = 0; i < var_map.size(); ++i) exps[var_map[i]] += t.monomial[i];
    out.push_back({Monomial(std::move(exps)), target->field().element(t.coeff)});
  }
  return from_terms(target, std::move(out));
}

std::string monomial_to_string(const RingContext& ring, const Monomial& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.variables()[i];
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool negative = sgn(c) < 0;
    if (negative) c = -c;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (t.monomial.is_one()) {
      out += c.get_str();
    } else if (c == 1) {
      out += monomial_to_string(*ring_, t.monomial);
    } else {
      out += c.get_str() + "*" + monomial_to_string(*ring_, t.monomial);
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_) || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
  }
  return true;
}

}  // namespace mfcat
