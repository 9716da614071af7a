#include "mfcat/mf/functors.hpp"

#include <numeric>

#include "mfcat/error.hpp"

namespace mfcat {

MatrixFactorization shift(const MatrixFactorization& e) {
  return MatrixFactorization::create(e.potential(), e.lambda(), -e.e0(), -e.e1());
}

MFMorphism shift(const MFMorphism& p) {
  return MFMorphism::create(shift(p.source()), shift(p.target()), p.p0(), p.p1());
}

MatrixFactorization direct_sum(const MatrixFactorization& a, const MatrixFactorization& b) {
  require_same_context(a, b);
  return MatrixFactorization::create(a.potential(), a.lambda(), block_diagonal(a.e1(), b.e1()),
                                     block_diagonal(a.e0(), b.e0()));
}

ConeTriangle cone(const MFMorphism& p) {
  const auto& e = p.source();
  const auto& f = p.target();
  const Ring& ring = e.ring();
  const std::size_t re = e.rank();
  const std::size_t rf = f.rank();
  PolyMatrix zero(ring, re, rf);
  PolyMatrix c1 = block_matrix(f.e1(), p.p0(), zero, -e.e0());
  PolyMatrix c0 = block_matrix(f.e0(), p.p1(), zero, -e.e1());
  auto object = MatrixFactorization::create(f.potential(), f.lambda(), std::move(c1), std::move(c0));

  // q = (id, 0): F -> Cone(p)
  PolyMatrix inclusion(ring, rf + re, rf);
  inclusion.set_block(0, 0, PolyMatrix::identity(ring, rf));
  auto q = MFMorphism::create(f, object, inclusion, inclusion);

  // r = (0, -id): Cone(p) -> E[1]
  PolyMatrix projection(ring, re, rf + re);
  projection.set_block(0, rf, -PolyMatrix::identity(ring, re));
  auto r = MFMorphism::create(object, shift(e), projection, projection);
  return ConeTriangle{std::move(object), std::move(q), std::move(r)};
}

MatrixFactorization tensor(const MatrixFactorization& a, const MatrixFactorization& b) {
  const auto& ra = *a.ring();
  const auto& rb = *b.ring();
  if (!(ra.field() == rb.field())) throw Error(ErrorCode::ContextMismatch, "tensor factors use different fields");
  std::vector<std::string> vars = ra.variables();
  for (const auto& v : rb.variables()) {
    if (ra.index_of(v)) throw Error(ErrorCode::VariableCollision, "variable '" + v + "' occurs in both factors");
    vars.push_back(v);
  }
  Ring ring = make_ring(vars, ra.field(), ra.order());
  std::vector<std::size_t> map_a(ra.nvars());
  std::iota(map_a.begin(), map_a.end(), 0);
  std::vector<std::size_t> map_b(rb.nvars());
  std::iota(map_b.begin(), map_b.end(), ra.nvars());

  const std::size_t na = a.rank();
  const std::size_t nb = b.rank();
  PolyMatrix ia = PolyMatrix::identity(ring, na);
  PolyMatrix ib = PolyMatrix::identity(ring, nb);
  PolyMatrix e1 = kronecker(a.e1().embed(ring, map_a), ib);
  PolyMatrix e0 = kronecker(a.e0().embed(ring, map_a), ib);
  PolyMatrix f1 = kronecker(ia, b.e1().embed(ring, map_b));
  PolyMatrix f0 = kronecker(ia, b.e0().embed(ring, map_b));

  PolyMatrix t1 = block_matrix(e1, f1, -f0, e0);
  PolyMatrix t0 = block_matrix(e0, -f1, f0, e1);
  Polynomial potential = a.potential().embed(ring, map_a) + b.potential().embed(ring, map_b);
  Rational lambda = ra.field().add(a.lambda(), b.lambda());
  return MatrixFactorization::create(std::move(potential), std::move(lambda), std::move(t1), std::move(t0));
}

MatrixFactorization knorrer(const MatrixFactorization& e, const std::string& u, const std::string& v) {
  const auto& ring = *e.ring();
  for (const auto& name : {u, v}) {
    if (ring.index_of(name)) throw Error(ErrorCode::VariableCollision, "variable '" + name + "' is already in use");
  }
  if (u == v) throw Error(ErrorCode::VariableCollision, "Knorrer variables must be distinct");
  Ring uv = make_ring({u, v}, ring.field(), ring.order());
  Polynomial pu = Polynomial::variable(uv, 0);
  Polynomial pv = Polynomial::variable(uv, 1);
  auto k = MatrixFactorization::create(pu * pv, Rational(0), PolyMatrix::from_rows(uv, {{pu}}),
                                       PolyMatrix::from_rows(uv, {{pv}}));
  return tensor(e, k);
}

ModulePresentation cokernel_presentation(const MatrixFactorization& e) {
  const Ring& ring = e.ring();
  const std::size_t r = e.rank();
  Polynomial fiber = e.fiber();
  PolyMatrix presentation(ring, r, 2 * r);
  presentation.set_block(0, 0, e.e1());
  presentation.set_block(0, r, PolyMatrix::scalar(fiber, r));
  std::vector<PolyVector> columns;
  for (std::size_t j = 0; j < presentation.cols(); ++j) columns.push_back(presentation.column_vector(j));
  GroebnerBasis relations = module_groebner(columns, r, ring);
  Dim dimension = quotient_dim(relations);
  auto hilbert = hilbert_counts(relations, 10);
  return ModulePresentation{ring, std::move(fiber), std::move(presentation), std::move(relations), dimension,
                            std::move(hilbert)};
}

PairComplex PairComplex::create(std::vector<MatrixFactorization> objects, std::vector<MFMorphism> maps) {
  if (objects.empty()) throw Error(ErrorCode::InvalidArgument, "a complex needs at least one object");
  if (maps.size() + 1 != objects.size()) {
    throw Error(ErrorCode::InvalidArgument, "a complex of " + std::to_string(objects.size()) + " objects needs " +
                                                std::to_string(objects.size() - 1) + " maps");
  }
  for (std::size_t i = 1; i < objects.size(); ++i) require_same_context(objects[0], objects[i]);
  for (std::size_t i = 0; i < maps.size(); ++i) {
    if (!(maps[i].source() == objects[i]) || !(maps[i].target() == objects[i + 1])) {
      throw Error(ErrorCode::InvalidMorphism, "map " + std::to_string(i) + " does not connect objects " +
                                                  std::to_string(i) + " and " + std::to_string(i + 1));
    }
  }
  for (std::size_t i = 0; i + 1 < maps.size(); ++i) {
    if (!maps[i].then(maps[i + 1]).is_zero()) {
      throw Error(ErrorCode::CompositionNonzero, "d^" + std::to_string(i + 1) + " d^" + std::to_string(i) + " != 0");
    }
  }
  return PairComplex(std::move(objects), std::move(maps));
}

MatrixFactorization totalize(const PairComplex& c) {
  const auto& objects = c.objects();
  const auto& maps = c.maps();
  const Ring& ring = objects[0].ring();
  std::vector<std::size_t> offset{0};
  for (const auto& o : objects) offset.push_back(offset.back() + o.rank());
  const std::size_t total = offset.back();

  // Block m of both T_1 and T_0 sits at offset[m]. The summand of T_l in
  // block m is E^m_k with k = (l + m) mod 2.
  PolyMatrix t1(ring, total, total);
  PolyMatrix t0(ring, total, total);
  for (std::size_t m = 0; m < objects.size(); ++m) {
    const auto& e = objects[m];
    const bool odd = m % 2 == 1;
    // Source E^m_k in T_1 has k = (m+1) mod 2; its e_k lands in T_0 block m.
    const PolyMatrix& ek_from_t1 = odd ? e.e0() : e.e1();
    const PolyMatrix& ek_from_t0 = odd ? e.e1() : e.e0();
    t1.set_block(offset[m], offset[m], odd ? -ek_from_t1 : ek_from_t1);
    t0.set_block(offset[m], offset[m], odd ? -ek_from_t0 : ek_from_t0);
    if (m < maps.size()) {
      const auto& d = maps[m];
      t1.set_block(offset[m + 1], offset[m], odd ? d.p0() : d.p1());
      t0.set_block(offset[m + 1], offset[m], odd ? d.p1() : d.p0());
    }
  }
  return MatrixFactorization::create(objects[0].potential(), objects[0].lambda(), std::move(t1), std::move(t0));
}

}  // namespace mfcat
