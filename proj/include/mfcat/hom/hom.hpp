#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mfcat/mf/factorization.hpp"
#include "mfcat/poly/groebner.hpp"

namespace mfcat {

// Z/2-graded complex Hom(E, F) with D p = f p - (-1)^|p| p e, written as
// explicit operators on flattened blocks. With n = rank(E) * rank(F):
//   even coordinates: p1 (E_1 -> F_1) then p0 (E_0 -> F_0), n entries each,
//   odd coordinates:  s0 (E_0 -> F_1) then s1 (E_1 -> F_0),
// every block an rank(F) x rank(E) matrix flattened row-major.
class HomComplex {
 public:
  // Throws ContextMismatch unless E and F share ring, W and lambda.
  static HomComplex build(const MatrixFactorization& source, const MatrixFactorization& target);

  const MatrixFactorization& source() const noexcept { return source_; }
  const MatrixFactorization& target() const noexcept { return target_; }
  // even -> odd: (p1, p0) |-> (f0 p0 - p1 e0, f1 p1 - p0 e1)
  const PolyMatrix& d_even() const noexcept { return d_even_; }
  // odd -> even: (s0, s1) |-> (f0 s1 + s0 e1, f1 s0 + s1 e0)
  const PolyMatrix& d_odd() const noexcept { return d_odd_; }
  // Length of the even (and of the odd) coordinate vector.
  std::size_t size() const noexcept { return d_even_.rows(); }

  bool squares_to_zero() const;

  PolyVector flatten(const PolyMatrix& first, const PolyMatrix& second) const;
  std::pair<PolyMatrix, PolyMatrix> unflatten(const PolyVector& v) const;

 private:
  HomComplex(MatrixFactorization source, MatrixFactorization target, PolyMatrix d_even, PolyMatrix d_odd)
      : source_(std::move(source)), target_(std::move(target)), d_even_(std::move(d_even)), d_odd_(std::move(d_odd)) {}

  MatrixFactorization source_;
  MatrixFactorization target_;
  PolyMatrix d_even_;
  PolyMatrix d_odd_;
};

struct HomReport {
  Dim h0 = Dim::finite(0);
  Dim h1 = Dim::finite(0);
  // Closed degree-0 maps E -> F, pairwise independent modulo homotopy.
  std::vector<MFMorphism> basis_even;
  // Closed odd maps, presented as morphisms E -> F[1] (p1 = s1, p0 = s0).
  std::vector<MFMorphism> basis_odd;
};

// h0 = dim ker(D_even) / im(D_odd) and h1 = dim ker(D_odd) / im(D_even).
HomReport hom_dims(const MatrixFactorization& source, const MatrixFactorization& target, bool with_basis = true);

struct NullHomotopy {
  bool null_homotopic = false;
  // On success: p1 = f0 s1 + s0 e1 and p0 = s1 e0 + f1 s0.
  std::optional<PolyMatrix> s0;
  std::optional<PolyMatrix> s1;
};

NullHomotopy is_null_homotopic(const MFMorphism& p);
bool is_contractible(const MatrixFactorization& e);
// Decided as contractibility of the cone.
bool is_homotopy_equivalence(const MFMorphism& p);

}  // namespace mfcat
