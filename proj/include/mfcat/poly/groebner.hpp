#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mfcat/poly/matrix.hpp"
#include "mfcat/poly/polynomial.hpp"

namespace mfcat {

using PolyVector = std::vector<Polynomial>;

// A vector space dimension that may be infinite.
class Dim {
 public:
  static Dim finite(std::size_t n) { return Dim(n, false); }
  static Dim infinite() { return Dim(0, true); }

  bool is_finite() const noexcept { return !infinite_; }
  std::size_t value() const;
  std::string to_string() const;

  friend Dim operator+(Dim a, Dim b);
  friend bool operator==(const Dim& a, const Dim& b) = default;

 private:
  Dim(std::size_t n, bool inf) : value_(n), infinite_(inf) {}
  std::size_t value_;
  bool infinite_;
};

// Term of a free-module element: coeff * monomial * e_position.
struct ModuleTerm {
  std::uint32_t position;
  Monomial monomial;
  Rational coeff;
};

// Terms strictly decreasing in the position-over-term order: e_0 > e_1 > ...,
// ties broken by the ring's monomial order.
using ModuleElement = std::vector<ModuleTerm>;

ModuleElement to_module_element(const PolyVector& v);
PolyVector to_poly_vector(const ModuleElement& e, const Ring& ring, std::size_t rank);

// Reduced Groebner basis of an ideal (rank 1) or of a submodule of A^rank.
// Elements are monic and sorted by increasing leading term.
class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, std::size_t rank, bool ideal, std::vector<ModuleElement> elements);

  const Ring& ring() const noexcept { return ring_; }
  std::size_t rank() const noexcept { return rank_; }
  bool is_ideal() const noexcept { return ideal_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const std::vector<ModuleElement>& elements() const noexcept { return elements_; }

  std::vector<Polynomial> polynomials() const;
  std::vector<PolyVector> vectors() const;

  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b);

 private:
  Ring ring_;
  std::size_t rank_;
  bool ideal_;
  std::vector<ModuleElement> elements_;
};

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const Ring& ring);
GroebnerBasis module_groebner(const std::vector<PolyVector>& gens, std::size_t rank, const Ring& ring);

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g);
PolyVector normal_form(const PolyVector& v, const GroebnerBasis& g);
bool submodule_membership(const PolyVector& v, const GroebnerBasis& g);

// Number of standard monomials of A^rank / LT(G), or INFINITE.
Dim quotient_dim(const GroebnerBasis& g);
// The standard monomials (position, monomial) in increasing term order, or
// nullopt when there are infinitely many.
std::optional<std::vector<std::pair<std::uint32_t, Monomial>>> standard_monomials(const GroebnerBasis& g);
// Number of standard monomials of total degree exactly d, for d = 0..max_degree.
std::vector<std::size_t> hilbert_counts(const GroebnerBasis& g, std::size_t max_degree);

// Generators of {v : M v = 0}, forming a Groebner basis of that module.
std::vector<PolyVector> syzygy_basis(const PolyMatrix& m);

// Coefficients c with sum_i c_i * gens[i] = v, or nullopt if v is not in
// the submodule generated by gens.
std::optional<PolyVector> lift(const PolyVector& v, const std::vector<PolyVector>& gens, std::size_t rank,
                               const Ring& ring);

// K / I for submodules I <= K <= A^n with K given by generators k_1..k_m:
// `relations` is the Groebner basis of {c in A^m : sum c_i k_i in I}, so
// that K / I is isomorphic to A^m / relations.
struct Subquotient {
  std::vector<PolyVector> generators;
  GroebnerBasis relations;
};

// Throws ImageNotInKernel unless every image generator lies in the kernel
// module (skipped when check_containment is false).
Subquotient subquotient(const std::vector<PolyVector>& kernel_gens, const std::vector<PolyVector>& image_gens,
                        std::size_t rank, const Ring& ring, bool check_containment = true);

Dim quotient_module_dim(const std::vector<PolyVector>& kernel_gens, const GroebnerBasis& image_basis);

}  // namespace mfcat
