#include "mfcat/hom/hom.hpp"

#include <stdexcept>

#include "mfcat/error.hpp"
#include "mfcat/mf/functors.hpp"

namespace mfcat {

namespace {

// Operators on rf x re matrices X flattened row-major.
PolyMatrix left_multiplication(const PolyMatrix& a, std::size_t re) {
  const std::size_t rf = a.rows();
  PolyMatrix m(a.ring(), rf * re, rf * re);
  for (std::size_t i = 0; i < rf; ++i) {
    for (std::size_t k = 0; k < rf; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < re; ++j) m(i * re + j, k * re + j) = a(i, k);
    }
  }
  return m;
}

PolyMatrix right_multiplication(const PolyMatrix& b, std::size_t rf) {
  const std::size_t re = b.rows();
  PolyMatrix m(b.ring(), rf * re, rf * re);
  for (std::size_t i = 0; i < rf; ++i) {
    for (std::size_t j = 0; j < re; ++j) {
      for (std::size_t k = 0; k < re; ++k) {
        if (!b(k, j).is_zero()) m(i * re + j, i * re + k) = b(k, j);
      }
    }
  }
  return m;
}

std::vector<PolyVector> columns(const PolyMatrix& m) {
  std::vector<PolyVector> out;
  for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(m.column_vector(j));
  return out;
}

PolyVector times(const PolyVector& v, const Monomial& m) {
  PolyVector out;
  for (const auto& p : v) out.push_back(p.times_term(m, Rational(1)));
  return out;
}

struct Cohomology {
  Dim dim = Dim::finite(0);
  std::vector<PolyVector> representatives;
};

// ker(kernel_map) / im(image_map) on the same coordinate space.
Cohomology cohomology(const PolyMatrix& kernel_map, const PolyMatrix& image_map, bool with_basis) {
  const Ring& ring = kernel_map.ring();
  const std::size_t n = kernel_map.cols();
  auto kernel = syzygy_basis(kernel_map);
  auto image = columns(image_map);
  // Containment holds because D squares to zero, which HomComplex verifies.
  auto sq = subquotient(kernel, image, n, ring, false);
  Cohomology out;
  out.dim = quotient_dim(sq.relations);
  if (!with_basis || !out.dim.is_finite() || out.dim.value() == 0) return out;
  GroebnerBasis image_basis = module_groebner(image, n, ring);
  auto standard = standard_monomials(sq.relations);
  for (const auto& [position, monomial] : *standard) {
    out.representatives.push_back(normal_form(times(kernel[position], monomial), image_basis));
  }
  return out;
}

}  // namespace

HomComplex HomComplex::build(const MatrixFactorization& source, const MatrixFactorization& target) {
  require_same_context(source, target);
  const std::size_t re = source.rank();
  const std::size_t rf = target.rank();
  const auto& e1 = source.e1();
  const auto& e0 = source.e0();
  const auto& f1 = target.e1();
  const auto& f0 = target.e0();
  PolyMatrix d_even = block_matrix(-right_multiplication(e0, rf), left_multiplication(f0, re),
                                   left_multiplication(f1, re), -right_multiplication(e1, rf));
  PolyMatrix d_odd = block_matrix(right_multiplication(e1, rf), left_multiplication(f0, re),
                                  left_multiplication(f1, re), right_multiplication(e0, rf));
  HomComplex hc(source, target, std::move(d_even), std::move(d_odd));
  if (!hc.squares_to_zero()) throw std::logic_error("Hom differential does not square to zero");
  return hc;
}

bool HomComplex::squares_to_zero() const { return (d_even_ * d_odd_).is_zero() && (d_odd_ * d_even_).is_zero(); }

PolyVector HomComplex::flatten(const PolyMatrix& first, const PolyMatrix& second) const {
  PolyVector v = first.entries();
  v.insert(v.end(), second.entries().begin(), second.entries().end());
  return v;
}

std::pair<PolyMatrix, PolyMatrix> HomComplex::unflatten(const PolyVector& v) const {
  const std::size_t re = source_.rank();
  const std::size_t rf = target_.rank();
  PolyMatrix first(source_.ring(), rf, re);
  PolyMatrix second(source_.ring(), rf, re);
  for (std::size_t i = 0; i < rf; ++i) {
    for (std::size_t j = 0; j < re; ++j) {
      first(i, j) = v[i * re + j];
      second(i, j) = v[rf * re + i * re + j];
    }
  }
  return {std::move(first), std::move(second)};
}

HomReport hom_dims(const MatrixFactorization& source, const MatrixFactorization& target, bool with_basis) {
  HomComplex hc = HomComplex::build(source, target);
  HomReport report;
  auto even = cohomology(hc.d_even(), hc.d_odd(), with_basis);
  auto odd = cohomology(hc.d_odd(), hc.d_even(), with_basis);
  report.h0 = even.dim;
  report.h1 = odd.dim;
  for (const auto& v : even.representatives) {
    auto [p1, p0] = hc.unflatten(v);
    report.basis_even.push_back(MFMorphism::create(source, target, std::move(p1), std::move(p0)));
  }
  if (!odd.representatives.empty()) {
    auto shifted = shift(target);
    for (const auto& v : odd.representatives) {
      auto [s0, s1] = hc.unflatten(v);
      report.basis_odd.push_back(MFMorphism::create(source, shifted, std::move(s1), std::move(s0)));
    }
  }
  return report;
}

NullHomotopy is_null_homotopic(const MFMorphism& p) {
  HomComplex hc = HomComplex::build(p.source(), p.target());
  NullHomotopy out;
  if (p.is_zero()) {
    auto zero = hc.unflatten(PolyVector(2 * hc.size(), Polynomial(p.source().ring())));
    out.null_homotopic = true;
    out.s0 = std::move(zero.first);
    out.s1 = std::move(zero.second);
    return out;
  }
  auto coeffs = lift(hc.flatten(p.p1(), p.p0()), columns(hc.d_odd()), hc.size(), p.source().ring());
  if (!coeffs) return out;
  auto [s0, s1] = hc.unflatten(*coeffs);
  const auto& e = p.source();
  const auto& f = p.target();
  if (!(f.e0() * s1 + s0 * e.e1() == p.p1()) || !(s1 * e.e0() + f.e1() * s0 == p.p0())) {
    throw std::logic_error("null-homotopy witness does not reproduce the morphism");
  }
  out.null_homotopic = true;
  out.s0 = std::move(s0);
  out.s1 = std::move(s1);
  return out;
}

bool is_contractible(const MatrixFactorization& e) {
  if (e.rank() == 0) return true;
  return is_null_homotopic(MFMorphism::identity(e)).null_homotopic;
}

bool is_homotopy_equivalence(const MFMorphism& p) { return is_contractible(cone(p).object); }

}  // namespace mfcat
