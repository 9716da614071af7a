#pragma once

#include <string>
#include <vector>

#include "mfcat/mf/factorization.hpp"
#include "mfcat/poly/groebner.hpp"

namespace mfcat {

// E[1] = (E_0 -(-e0)-> E_1 -(-e1)-> E_0). Applying it twice is the identity
// on the nose.
MatrixFactorization shift(const MatrixFactorization& e);
// p[1] = (p0, p1) as a morphism E[1] -> F[1].
MFMorphism shift(const MFMorphism& p);

MatrixFactorization direct_sum(const MatrixFactorization& a, const MatrixFactorization& b);

// Standard triangle E -p-> F -q-> Cone(p) -r-> E[1].
struct ConeTriangle {
  MatrixFactorization object;
  MFMorphism q;
  MFMorphism r;
};

// Cone(p) lives on F_1+E_0 <-> F_0+E_1 with
//   e1 = [[f1, p0], [0, -e0]],  e0 = [[f0, p1], [0, -e1]].
ConeTriangle cone(const MFMorphism& p);

// External tensor product of factorizations over disjoint variable sets,
// potential W_a + W_b and critical value lambda_a + lambda_b. The ring of the
// result lists a's variables first. The differential on E (x) F is
//   d(a (x) b) = d_E(a) (x) b + (-1)^|a| a (x) d_F(b),
// with T_1 = E_1F_0 + E_0F_1 and T_0 = E_0F_0 + E_1F_1, giving
//   e1 = [[e1 (x) 1, 1 (x) f1], [-1 (x) f0, e0 (x) 1]]
//   e0 = [[e0 (x) 1, -1 (x) f1], [1 (x) f0, e1 (x) 1]].
MatrixFactorization tensor(const MatrixFactorization& a, const MatrixFactorization& b);

// E (x) (u, v): a factorization of W + u*v in two fresh variables.
MatrixFactorization knorrer(const MatrixFactorization& e, const std::string& u = "u", const std::string& v = "v");

// Coker e1 as a module over A/(W - lambda).
struct ModulePresentation {
  Ring ring;
  Polynomial fiber_relation;
  // Columns of e1 followed by (W - lambda) * Id.
  PolyMatrix presentation;
  GroebnerBasis relations;
  Dim dimension;
  // Standard monomials of each total degree 0..10.
  std::vector<std::size_t> hilbert;
};

ModulePresentation cokernel_presentation(const MatrixFactorization& e);

// Finite complex E^0 -> E^1 -> ... of pairs with d^{i+1} d^i = 0.
class PairComplex {
 public:
  // Throws ContextMismatch, InvalidMorphism or CompositionNonzero.
  static PairComplex create(std::vector<MatrixFactorization> objects, std::vector<MFMorphism> maps);

  const std::vector<MatrixFactorization>& objects() const noexcept { return objects_; }
  const std::vector<MFMorphism>& maps() const noexcept { return maps_; }

 private:
  PairComplex(std::vector<MatrixFactorization> objects, std::vector<MFMorphism> maps)
      : objects_(std::move(objects)), maps_(std::move(maps)) {}

  std::vector<MatrixFactorization> objects_;
  std::vector<MFMorphism> maps_;
};

// T_1 = sum of E^m_k with k+m odd, T_0 = sum with k+m even, summands ordered
// by m; on E^m_k the map is d^m_k + (-1)^m e_k.
MatrixFactorization totalize(const PairComplex& c);

}  // namespace mfcat
