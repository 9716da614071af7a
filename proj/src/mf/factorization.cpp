#include "mfcat/mf/factorization.hpp"

#include "mfcat/error.hpp"

namespace mfcat {

namespace {

std::string shape(const PolyMatrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

void compare_cells(const std::string& label, const PolyMatrix& actual, const PolyMatrix& expected,
                   std::vector<std::string>& failures) {
  for (std::size_t i = 0; i < actual.rows(); ++i) {
    for (std::size_t j = 0; j < actual.cols(); ++j) {
      if (!(actual(i, j) == expected(i, j))) {
        failures.push_back(label + "[" + std::to_string(i) + "][" + std::to_string(j) + "] = " +
                           actual(i, j).to_string() + ", expected " + expected(i, j).to_string());
      }
    }
  }
}

std::string joined(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += (out.empty() ? "" : "; ") + l;
  return out;
}

}  // namespace

ValidationReport validate_factorization(const Polynomial& potential, const Rational& lambda, const PolyMatrix& e1,
                                        const PolyMatrix& e0) {
  ValidationReport report;
  auto& failures = report.failures;
  const Ring& ring = potential.ring();
  if (!same_ring(ring, e1.ring()) || !same_ring(ring, e0.ring())) failures.push_back("matrices live in a different ring");
  if (!e1.is_square() || !e0.is_square() || e1.rows() != e0.rows()) {
    failures.push_back("e1 is " + shape(e1) + " and e0 is " + shape(e0) + "; both must be square of equal rank");
  }
  Polynomial fiber = potential - Polynomial::constant(ring, lambda);
  if (fiber.is_zero()) failures.push_back("W - lambda is the zero polynomial");
  if (failures.empty()) {
    PolyMatrix expected = PolyMatrix::scalar(fiber, e1.rows());
    compare_cells("e0*e1", e0 * e1, expected, failures);
    compare_cells("e1*e0", e1 * e0, expected, failures);
  }
  report.valid = failures.empty();
  return report;
}

MatrixFactorization MatrixFactorization::create(Polynomial potential, Rational lambda, PolyMatrix e1, PolyMatrix e0) {
  lambda = potential.ring()->field().element(lambda);
  auto report = validate_factorization(potential, lambda, e1, e0);
  if (!report.valid) throw Error(ErrorCode::NotAFactorization, "not a matrix factorization: " + joined(report.failures));
  return MatrixFactorization(std::move(potential), std::move(lambda), std::move(e1), std::move(e0));
}

Polynomial MatrixFactorization::fiber() const { return potential_ - Polynomial::constant(ring(), lambda_); }

bool MatrixFactorization::same_context(const MatrixFactorization& other) const {
  return same_ring(ring(), other.ring()) && potential_ == other.potential_ && lambda_ == other.lambda_;
}

bool operator==(const MatrixFactorization& a, const MatrixFactorization& b) {
  return a.same_context(b) && a.e1_ == b.e1_ && a.e0_ == b.e0_;
}

ValidationReport validate(const MatrixFactorization& mf) {
  return validate_factorization(mf.potential(), mf.lambda(), mf.e1(), mf.e0());
}

void require_same_context(const MatrixFactorization& a, const MatrixFactorization& b) {
  if (!a.same_context(b)) {
    throw Error(ErrorCode::ContextMismatch, "factorizations differ in ring, superpotential or critical value");
  }
}

std::vector<std::string> morphism_failures(const MatrixFactorization& source, const MatrixFactorization& target,
                                           const PolyMatrix& p1, const PolyMatrix& p0) {
  std::vector<std::string> failures;
  if (!source.same_context(target)) {
    failures.push_back("source and target differ in ring, superpotential or critical value");
    return failures;
  }
  const std::size_t rs = source.rank();
  const std::size_t rt = target.rank();
  if (p1.rows() != rt || p1.cols() != rs || p0.rows() != rt || p0.cols() != rs) {
    failures.push_back("p1 is " + shape(p1) + " and p0 is " + shape(p0) + "; expected " + std::to_string(rt) + "x" +
                       std::to_string(rs));
    return failures;
  }
  if (!same_ring(source.ring(), p1.ring()) || !same_ring(source.ring(), p0.ring())) {
    failures.push_back("morphism matrices live in a different ring");
    return failures;
  }
  compare_cells("p1*e0", p1 * source.e0(), target.e0() * p0, failures);
  compare_cells("f1*p1", target.e1() * p1, p0 * source.e1(), failures);
  return failures;
}

MFMorphism MFMorphism::create(MatrixFactorization source, MatrixFactorization target, PolyMatrix p1, PolyMatrix p0) {
  auto failures = morphism_failures(source, target, p1, p0);
  if (!failures.empty()) throw Error(ErrorCode::InvalidMorphism, "not a morphism of pairs: " + joined(failures));
  return MFMorphism(std::move(source), std::move(target), std::move(p1), std::move(p0));
}

MFMorphism MFMorphism::identity(const MatrixFactorization& e) {
  return MFMorphism(e, e, PolyMatrix::identity(e.ring(), e.rank()), PolyMatrix::identity(e.ring(), e.rank()));
}

MFMorphism MFMorphism::zero(const MatrixFactorization& source, const MatrixFactorization& target) {
  require_same_context(source, target);
  return MFMorphism(source, target, PolyMatrix(source.ring(), target.rank(), source.rank()),
                    PolyMatrix(source.ring(), target.rank(), source.rank()));
}

MFMorphism MFMorphism::scaled(const Polynomial& c) const {
  require_same_ring(c.ring(), source_.ring());
  return MFMorphism(source_, target_, c * p1_, c * p0_);
}

MFMorphism MFMorphism::then(const MFMorphism& next) const {
  if (!(target_ == next.source_)) throw Error(ErrorCode::InvalidMorphism, "morphisms are not composable");
  return MFMorphism(source_, next.target_, next.p1_ * p1_, next.p0_ * p0_);
}

bool operator==(const MFMorphism& a, const MFMorphism& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && a.p1_ == b.p1_ && a.p0_ == b.p0_;
}

}  // namespace mfcat
