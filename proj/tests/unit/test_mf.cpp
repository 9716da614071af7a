#include <doctest.h>

#include "../support/helpers.hpp"
#include "../support/oracles.hpp"
#include "mfcat/error.hpp"
#include "mfcat/hom/hom.hpp"
#include "mfcat/mf/corpus.hpp"
#include "mfcat/mf/functors.hpp"

using namespace mfcat;

namespace {

MatrixFactorization make(const Ring& r, const char* w, const Rational& lambda,
                         const std::vector<std::vector<std::string>>& e1,
                         const std::vector<std::vector<std::string>>& e0) {
  return MatrixFactorization::create(Polynomial::parse(r, w), lambda, PolyMatrix::parse(r, e1, e1.size()),
                                     PolyMatrix::parse(r, e0, e0.size()));
}

MatrixFactorization rank_zero(const MatrixFactorization& like) {
  return MatrixFactorization::create(like.potential(), like.lambda(), PolyMatrix(like.ring(), 0, 0),
                                     PolyMatrix(like.ring(), 0, 0));
}

PolyMatrix pm(const Ring& r, const std::vector<std::vector<std::string>>& rows) {
  return PolyMatrix::parse(r, rows, rows.empty() ? 0 : rows[0].size());
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an mfcat::Error");
  return ErrorCode::InvalidArgument;
}

bool contractible_by_oracle(const MatrixFactorization& e, std::size_t bound = 3) {
  return oracle::null_homotopic_truncated(MFMorphism::identity(e), bound);
}

}  // namespace

TEST_SUITE("mf") {

TEST_CASE("validate examples") {
  Ring rx = make_ring({"x"});
  auto xx = make(rx, "x^2", 0, {{"x"}}, {{"x"}});
  CHECK(validate(xx).valid);
  CHECK(validate(corpus::uv()).valid);
  auto report = validate_factorization(Polynomial::parse(rx, "x^2"), 1, pm(rx, {{"x"}}), pm(rx, {{"x"}}));
  CHECK_FALSE(report.valid);
  CHECK(report.failures.size() == 2);
  CHECK(code_of([&] { make(rx, "x^2", 1, {{"x"}}, {{"x"}}); }) == ErrorCode::NotAFactorization);
  CHECK(code_of([&] { make(rx, "1", 1, {{"1"}}, {{"0"}}); }) == ErrorCode::NotAFactorization);
  Ring ruv = make_ring({"u", "v"});
  CHECK(code_of([&] { make(ruv, "u*v", 0, {{"u"}}, {{"u"}}); }) == ErrorCode::NotAFactorization);
}

TEST_CASE("shift examples") {
  Ring rx = make_ring({"x"});
  auto xx = make(rx, "x^2", 0, {{"x"}}, {{"x"}});
  auto s = shift(xx);
  CHECK(s.e1() == pm(rx, {{"-x"}}));
  CHECK(s.e0() == pm(rx, {{"-x"}}));
  CHECK(shift(shift(xx)) == xx);
  // (u, v)[1] = (-e0, -e1) = (-v, -u).
  auto uv = corpus::uv();
  auto su = shift(uv);
  CHECK(su.e1() == pm(uv.ring(), {{"-v"}}));
  CHECK(su.e0() == pm(uv.ring(), {{"-u"}}));
  CHECK(shift(su) == uv);
  auto p = MFMorphism::identity(xx).scaled(Polynomial::parse(rx, "x"));
  auto sp = shift(p);
  CHECK(sp.p1() == p.p0());
  CHECK(sp.p0() == p.p1());
  CHECK(shift(sp) == p);
}

TEST_CASE("direct_sum examples") {
  Ring rx = make_ring({"x"});
  auto xx = make(rx, "x^2", 0, {{"x"}}, {{"x"}});
  auto d = direct_sum(xx, xx);
  CHECK(d.rank() == 2);
  CHECK(d.e1() == pm(rx, {{"x", "0"}, {"0", "x"}}));
  CHECK(d.e0() == pm(rx, {{"x", "0"}, {"0", "x"}}));
  CHECK(direct_sum(xx, rank_zero(xx)) == xx);
  CHECK(direct_sum(rank_zero(xx), xx) == xx);
  auto uvvu = direct_sum(corpus::uv(), corpus::vu());
  CHECK(uvvu.rank() == 2);
  auto h = hom_dims(uvvu, uvvu, false);
  auto o = oracle::hom_dims(uvvu, uvvu);
  REQUIRE(o.has_value());
  CHECK(h.h0 == Dim::finite(o->h0));
  CHECK(h.h1 == Dim::finite(o->h1));
  CHECK(code_of([&] { direct_sum(xx, corpus::a_n(2, 1)); }) == ErrorCode::ContextMismatch);
}

TEST_CASE("cone examples") {
  Ring rx = make_ring({"x"});
  auto xx = make(rx, "x^2", 0, {{"x"}}, {{"x"}});
  auto c = cone(MFMorphism::identity(xx));
  CHECK(c.object.rank() == 2);
  CHECK(validate(c.object).valid);
  CHECK(contractible_by_oracle(c.object));
  CHECK(is_contractible(c.object));

  auto e = corpus::a_n(3, 1);
  auto f = corpus::a_n(3, 2);
  auto zc = cone(MFMorphism::zero(e, f));
  CHECK(zc.object == direct_sum(f, shift(e)));

  auto px = MFMorphism::identity(xx).scaled(Polynomial::parse(rx, "x"));
  auto cx = cone(px);
  CHECK(validate(cx.object).valid);
  auto h = hom_dims(cx.object, cx.object, false);
  auto o = oracle::hom_dims(cx.object, cx.object);
  REQUIRE(o.has_value());
  CHECK(h.h0 == Dim::finite(o->h0));
  CHECK(h.h1 == Dim::finite(o->h1));
}

TEST_CASE("cone structural maps are morphisms") {
  auto e = corpus::a_n(3, 1);
  auto f = corpus::a_n(3, 2);
  Ring r = e.ring();
  auto p = MFMorphism::create(e, f, pm(r, {{"1"}}), pm(r, {{"x"}}));
  auto t = cone(p);
  CHECK(t.q.source() == f);
  CHECK(t.q.target() == t.object);
  CHECK(t.r.source() == t.object);
  CHECK(t.r.target() == shift(e));
  // Consecutive maps in the triangle compose to zero up to homotopy; here q p
  // is null-homotopic and r q = 0 on the nose.
  CHECK(t.q.then(t.r).is_zero());
  CHECK(is_null_homotopic(p.then(t.q)).null_homotopic);
}

TEST_CASE("tensor examples") {
  Ring rx = make_ring({"x"});
  Ring ry = make_ring({"y"});
  auto xx = make(rx, "x^2", 0, {{"x"}}, {{"x"}});
  auto yy = make(ry, "y^2", 0, {{"y"}}, {{"y"}});
  auto t = tensor(xx, yy);
  Ring rxy = t.ring();
  CHECK(rxy->variables() == std::vector<std::string>{"x", "y"});
  CHECK(t.potential() == Polynomial::parse(rxy, "x^2 + y^2"));
  CHECK(t.e1() == pm(rxy, {{"x", "y"}, {"-y", "x"}}));
  CHECK(t.e0() == pm(rxy, {{"x", "-y"}, {"y", "x"}}));
  // Oracle: multiply the blocks by hand.
  auto id = PolyMatrix::scalar(Polynomial::parse(rxy, "x^2 + y^2"), 2);
  CHECK(t.e1() * t.e0() == id);
  CHECK(t.e0() * t.e1() == id);

  auto unit = make(ry, "y^2", 0, {{"1"}}, {{"y^2"}});
  auto tu = tensor(xx, unit);
  CHECK(tu.rank() == 2);
  CHECK(validate(tu).valid);
  CHECK(is_contractible(tu));

  Ring rst = make_ring({"s", "t"});
  auto st = make(rst, "s*t", 0, {{"s"}}, {{"t"}});
  auto uvst = tensor(corpus::uv(), st);
  CHECK(uvst.rank() == 2);
  CHECK(uvst.potential() == Polynomial::parse(uvst.ring(), "u*v + s*t"));
  CHECK(validate(uvst).valid);

  CHECK(code_of([&] { tensor(xx, xx); }) == ErrorCode::VariableCollision);
  CHECK(code_of([&] { tensor(xx, corpus::a_n(1, 1, Field::prime(5), "y")); }) == ErrorCode::ContextMismatch);
}

TEST_CASE("tensor lambda adds") {
  Ring rx = make_ring({"x"});
  Ring ry = make_ring({"y"});
  auto a = make(rx, "x^2", 1, {{"x - 1"}}, {{"x + 1"}});
  auto b = make(ry, "y^2", 4, {{"y - 2"}}, {{"y + 2"}});
  auto t = tensor(a, b);
  CHECK(t.lambda() == 5);
  CHECK(validate(t).valid);
}

TEST_CASE("tensor is associative up to block permutation") {
  auto a = corpus::a_n(1, 1, Field::rationals(), "x");
  auto b = corpus::a_n(2, 1, Field::rationals(), "y");
  auto c = corpus::a_n(1, 1, Field::rationals(), "z");
  auto left = tensor(tensor(a, b), c);
  auto right = tensor(a, tensor(b, c));
  CHECK(validate(left).valid);
  CHECK(validate(right).valid);
  CHECK(same_ring(left.ring(), right.ring()));
  auto hl = hom_dims(left, left, false);
  auto hr = hom_dims(right, right, false);
  auto hx = hom_dims(left, right, false);
  CHECK(hl.h0 == hr.h0);
  CHECK(hl.h1 == hr.h1);
  CHECK(hx.h0 == hl.h0);
  CHECK(hx.h1 == hl.h1);
}

TEST_CASE("knorrer examples") {
  Ring rx = make_ring({"x"});
  auto xx = make(rx, "x^2", 0, {{"x"}}, {{"x"}});
  auto k = knorrer(xx);
  CHECK(k.rank() == 2);
  CHECK(k.potential() == Polynomial::parse(k.ring(), "x^2 + u*v"));
  CHECK(validate(k).valid);
  for (const auto& e : corpus::a_n_family(2)) {
    for (const auto& f : corpus::a_n_family(2)) {
      auto before = hom_dims(e, f, false);
      auto after = hom_dims(knorrer(e), knorrer(f), false);
      CHECK(before.h0 == after.h0);
      CHECK(before.h1 == after.h1);
    }
  }
  auto contractible = corpus::a_n(2, 0);
  CHECK(is_contractible(contractible));
  CHECK(is_contractible(knorrer(contractible)));
  CHECK(contractible_by_oracle(knorrer(contractible), 2));
  CHECK(code_of([&] { knorrer(corpus::uv()); }) == ErrorCode::VariableCollision);
  CHECK(validate(knorrer(corpus::uv(), "s", "t")).valid);
}

TEST_CASE("cokernel_presentation examples") {
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned a = 1; a <= n; ++a) {
      auto p = cokernel_presentation(corpus::a_n(n, a));
      // Oracle: Coker x^a over k[x] / (x^(n+1)) is k[x] / (x^a).
      CHECK(p.dimension == Dim::finite(a));
      CHECK(cokernel_presentation(shift(corpus::a_n(n, a))).dimension == Dim::finite(n + 1 - a));
    }
  }
  auto uv = cokernel_presentation(corpus::uv());
  CHECK_FALSE(uv.dimension.is_finite());
  REQUIRE(uv.hilbert.size() == 11);
  for (auto h : uv.hilbert) CHECK(h == 1);
  CHECK(uv.fiber_relation == Polynomial::parse(uv.ring, "u*v"));
  auto zero = cokernel_presentation(rank_zero(corpus::a_n(1, 1)));
  CHECK(zero.dimension == Dim::finite(0));
  CHECK(zero.presentation.rows() == 0);
}

TEST_CASE("cokernel presentation is killed by the fiber relation") {
  auto e = tensor(corpus::a_n(1, 1), corpus::a_n(2, 1, Field::rationals(), "y"));
  auto p = cokernel_presentation(e);
  for (std::size_t i = 0; i < e.rank(); ++i) {
    PolyVector v(e.rank(), Polynomial(e.ring()));
    v[i] = p.fiber_relation;
    CHECK(submodule_membership(v, p.relations));
  }
}

TEST_CASE("morphism validation") {
  auto e = corpus::a_n(3, 1);
  auto f = corpus::a_n(3, 2);
  Ring r = e.ring();
  CHECK_NOTHROW(MFMorphism::create(e, f, pm(r, {{"1"}}), pm(r, {{"x"}})));
  CHECK(code_of([&] { MFMorphism::create(e, f, pm(r, {{"1"}}), pm(r, {{"1"}})); }) == ErrorCode::InvalidMorphism);
  CHECK(code_of([&] { MFMorphism::create(e, f, pm(r, {{"1", "0"}}), pm(r, {{"x"}})); }) ==
        ErrorCode::InvalidMorphism);
  CHECK(code_of([&] { MFMorphism::create(e, corpus::a_n(2, 1), pm(r, {{"1"}}), pm(r, {{"x"}})); }) ==
        ErrorCode::InvalidMorphism);
}

TEST_CASE("totalize examples") {
  auto e = corpus::a_n(2, 1);
  CHECK(totalize(PairComplex::create({e}, {})) == e);

  auto t = totalize(PairComplex::create({e, e}, {MFMorphism::identity(e)}));
  CHECK(validate(t).valid);
  CHECK(is_contractible(t));
  CHECK(contractible_by_oracle(t));

  // 0 -> E -> E + F -> F -> 0, split by construction.
  auto f = corpus::a_n(2, 2);
  auto s = direct_sum(e, f);
  Ring r = e.ring();
  auto inc = MFMorphism::create(e, s, pm(r, {{"1"}, {"0"}}), pm(r, {{"1"}, {"0"}}));
  auto proj = MFMorphism::create(s, f, pm(r, {{"0", "1"}}), pm(r, {{"0", "1"}}));
  auto split = totalize(PairComplex::create({e, s, f}, {inc, proj}));
  CHECK(split.rank() == 4);
  CHECK(validate(split).valid);
  CHECK(is_contractible(split));
  CHECK(contractible_by_oracle(split));
}

TEST_CASE("totalize rejects nonzero compositions") {
  auto e = corpus::a_n(2, 1);
  auto id = MFMorphism::identity(e);
  CHECK(code_of([&] { PairComplex::create({e, e, e}, {id, id}); }) == ErrorCode::CompositionNonzero);
  CHECK(code_of([&] { PairComplex::create({e, e}, {}); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("cone(0) is F + E[1] on the whole A_n corpus") {
  for (unsigned n = 1; n <= 4; ++n) {
    for (const auto& e : corpus::a_n_family(n)) {
      for (const auto& f : corpus::a_n_family(n)) {
        CHECK(cone(MFMorphism::zero(e, f)).object == direct_sum(f, shift(e)));
      }
    }
  }
}

TEST_CASE("builtins") {
  CHECK(corpus::builtin("An:3:2").has_value());
  CHECK(*corpus::builtin("An:3:2") == corpus::a_n(3, 2));
  CHECK(*corpus::builtin("UV") == corpus::uv());
  CHECK(*corpus::builtin("VU") == corpus::vu());
  CHECK_FALSE(corpus::builtin("P2").has_value());
  CHECK(code_of([] { corpus::builtin("An:3:5"); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { corpus::builtin("An:x"); }) == ErrorCode::InvalidArgument);
  CHECK(corpus::builtin("An:2:1", Field::prime(7))->ring()->field() == Field::prime(7));
}

}  // TEST_SUITE
