#pragma once

#include <string>
#include <vector>

#include "mfcat/poly/matrix.hpp"

namespace mfcat {

struct ValidationReport {
  bool valid = true;
  // One line per failed check, e.g. "e0*e1[0][1] = x*y, expected x^2".
  std::vector<std::string> failures;
};

ValidationReport validate_factorization(const Polynomial& potential, const Rational& lambda, const PolyMatrix& e1,
                                        const PolyMatrix& e0);

// Pair E_1 -e1-> E_0 -e0-> E_1 of free modules of rank r with
// e0*e1 = e1*e0 = (W - lambda) * Id.
class MatrixFactorization {
 public:
  // Throws NotAFactorization listing the failed cells.
  static MatrixFactorization create(Polynomial potential, Rational lambda, PolyMatrix e1, PolyMatrix e0);

  const Ring& ring() const noexcept { return potential_.ring(); }
  const Polynomial& potential() const noexcept { return potential_; }
  const Rational& lambda() const noexcept { return lambda_; }
  std::size_t rank() const noexcept { return e1_.rows(); }
  const PolyMatrix& e1() const noexcept { return e1_; }
  const PolyMatrix& e0() const noexcept { return e0_; }
  // W - lambda
  Polynomial fiber() const;

  bool same_context(const MatrixFactorization& other) const;

  friend bool operator==(const MatrixFactorization& a, const MatrixFactorization& b);

 private:
  MatrixFactorization(Polynomial potential, Rational lambda, PolyMatrix e1, PolyMatrix e0)
      : potential_(std::move(potential)), lambda_(std::move(lambda)), e1_(std::move(e1)), e0_(std::move(e0)) {}

  Polynomial potential_;
  Rational lambda_;
  PolyMatrix e1_;
  PolyMatrix e0_;
};

ValidationReport validate(const MatrixFactorization& mf);

// Throws ContextMismatch unless ring, potential and lambda agree.
void require_same_context(const MatrixFactorization& a, const MatrixFactorization& b);

// Pair (p1: E_1 -> F_1, p0: E_0 -> F_0) with p1*e0 = f0*p0 and f1*p1 = p0*e1.
class MFMorphism {
 public:
  // Throws InvalidMorphism when shapes or the commutation identities fail.
  static MFMorphism create(MatrixFactorization source, MatrixFactorization target, PolyMatrix p1, PolyMatrix p0);
  static MFMorphism identity(const MatrixFactorization& e);
  static MFMorphism zero(const MatrixFactorization& source, const MatrixFactorization& target);

  const MatrixFactorization& source() const noexcept { return source_; }
  const MatrixFactorization& target() const noexcept { return target_; }
  const PolyMatrix& p1() const noexcept { return p1_; }
  const PolyMatrix& p0() const noexcept { return p0_; }

  MFMorphism scaled(const Polynomial& c) const;
  // this followed by `next`.
  MFMorphism then(const MFMorphism& next) const;
  bool is_zero() const { return p1_.is_zero() && p0_.is_zero(); }

  friend bool operator==(const MFMorphism& a, const MFMorphism& b);

 private:
  MFMorphism(MatrixFactorization source, MatrixFactorization target, PolyMatrix p1, PolyMatrix p0)
      : source_(std::move(source)), target_(std::move(target)), p1_(std::move(p1)), p0_(std::move(p0)) {}

  MatrixFactorization source_;
  MatrixFactorization target_;
  PolyMatrix p1_;
  PolyMatrix p0_;
};

std::vector<std::string> morphism_failures(const MatrixFactorization& source, const MatrixFactorization& target,
                                           const PolyMatrix& p1, const PolyMatrix& p0);

}  // namespace mfcat
