#include <doctest.h>

#include "../support/oracles.hpp"
#include "mfcat/error.hpp"
#include "mfcat/hom/hom.hpp"
#include "mfcat/hom/oracle.hpp"
#include "mfcat/mf/corpus.hpp"
#include "mfcat/mf/functors.hpp"

using namespace mfcat;

namespace {

MatrixFactorization xx() { return corpus::a_n(1, 1); }

PolyMatrix pm(const Ring& r, const std::vector<std::vector<std::string>>& rows) {
  return PolyMatrix::parse(r, rows, rows.empty() ? 0 : rows[0].size());
}

// Small corpus with finite Hom spaces.
std::vector<MatrixFactorization> corpus_objects() {
  std::vector<MatrixFactorization> out;
  for (unsigned n = 1; n <= 3; ++n) {
    for (auto& e : corpus::a_n_family(n)) out.push_back(e);
  }
  out.push_back(corpus::uv());
  out.push_back(corpus::vu());
  return out;
}

void check_against_oracle(const MatrixFactorization& e, const MatrixFactorization& f) {
  auto h = hom_dims(e, f, false);
  auto o = oracle::hom_dims(e, f);
  REQUIRE(o.has_value());
  CHECK(h.h0 == Dim::finite(o->h0));
  CHECK(h.h1 == Dim::finite(o->h1));
}

}  // namespace

TEST_SUITE("hom") {

TEST_CASE("hom_complex on (x, x)") {
  auto e = xx();
  auto c = HomComplex::build(e, e);
  Ring r = e.ring();
  CHECK(c.size() == 2);
  // (p1, p0) -> (x p0 - p1 x, x p1 - p0 x)
  CHECK(c.d_even() == pm(r, {{"-x", "x"}, {"x", "-x"}}));
  CHECK(c.squares_to_zero());
  CHECK((c.d_even() * c.d_odd()).is_zero());
  CHECK((c.d_odd() * c.d_even()).is_zero());
}

TEST_CASE("hom_complex shape and D^2 = 0 on the corpus") {
  auto objs = corpus_objects();
  for (const auto& e : objs) {
    for (const auto& f : objs) {
      if (!e.same_context(f)) {
        CHECK_THROWS_AS(HomComplex::build(e, f), Error);
        continue;
      }
      auto c = HomComplex::build(e, f);
      CHECK(c.size() == 2 * e.rank() * f.rank());
      CHECK(c.d_even().rows() == c.size());
      CHECK(c.d_odd().cols() == c.size());
      CHECK((c.d_even() * c.d_odd()).is_zero());
      CHECK((c.d_odd() * c.d_even()).is_zero());
    }
  }
}

TEST_CASE("hom_dims examples") {
  auto a1 = xx();
  auto h = hom_dims(a1, a1);
  CHECK(h.h0 == Dim::finite(1));
  CHECK(h.h1 == Dim::finite(1));
  check_against_oracle(a1, a1);

  auto uv = corpus::uv();
  auto vu = corpus::vu();
  auto huv = hom_dims(uv, vu);
  CHECK(huv.h0 == Dim::finite(0));
  CHECK(huv.h1 == Dim::finite(1));
  check_against_oracle(uv, vu);
  auto hs = hom_dims(uv, shift(uv));
  CHECK(hs.h0 == Dim::finite(0));
  check_against_oracle(uv, shift(uv));

  auto a2 = corpus::a_n(2, 1);
  CHECK(hom_dims(a2, a2).h0 == Dim::finite(1));
  check_against_oracle(a2, a2);
}

TEST_CASE("hom_dims agrees with the truncation oracle on the corpus") {
  auto objs = corpus_objects();
  for (const auto& e : objs) {
    for (const auto& f : objs) {
      if (e.same_context(f)) check_against_oracle(e, f);
    }
  }
}

TEST_CASE("hom_dims on the A_n corpus") {
  // Oracle: Hom((x^a), (x^b)) over A_n has dimension min(a, b, n+1-a, n+1-b)
  // in both parities, cross-checked against the truncation oracle above.
  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned a = 1; a <= n; ++a) {
      for (unsigned b = 1; b <= n; ++b) {
        auto h = hom_dims(corpus::a_n(n, a), corpus::a_n(n, b), false);
        std::size_t expected = std::min({a, b, n + 1 - a, n + 1 - b});
        CHECK(h.h0 == Dim::finite(expected));
        CHECK(h.h1 == Dim::finite(expected));
      }
    }
  }
}

TEST_CASE("hom basis representatives") {
  auto e = corpus::a_n(3, 2);
  auto h = hom_dims(e, e);
  REQUIRE(h.basis_even.size() == 2);
  REQUIRE(h.basis_odd.size() == 2);
  for (const auto& p : h.basis_even) {
    CHECK(p.source() == e);
    CHECK(p.target() == e);
    CHECK_FALSE(is_null_homotopic(p).null_homotopic);
  }
  auto d = h.basis_even[0].p1() - h.basis_even[1].p1();
  auto d0 = h.basis_even[0].p0() - h.basis_even[1].p0();
  CHECK_FALSE(is_null_homotopic(MFMorphism::create(e, e, d, d0)).null_homotopic);
  for (const auto& p : h.basis_odd) {
    CHECK(p.target() == shift(e));
    CHECK_FALSE(is_null_homotopic(p).null_homotopic);
  }
  auto again = hom_dims(e, e);
  for (std::size_t i = 0; i < 2; ++i) CHECK(again.basis_even[i] == h.basis_even[i]);
}

TEST_CASE("shift swaps parities") {
  auto objs = corpus_objects();
  for (const auto& e : objs) {
    auto plain = hom_dims(e, e, false);
    auto shifted = hom_dims(e, shift(e), false);
    CHECK(shifted.h0 == plain.h1);
    CHECK(shifted.h1 == plain.h0);
  }
}

TEST_CASE("additivity") {
  auto family = corpus::a_n_family(3);
  for (const auto& e : family) {
    for (const auto& f : family) {
      for (const auto& g : family) {
        auto sum = hom_dims(e, direct_sum(f, g), false);
        auto hf = hom_dims(e, f, false);
        auto hg = hom_dims(e, g, false);
        CHECK(sum.h0 == hf.h0 + hg.h0);
        CHECK(sum.h1 == hf.h1 + hg.h1);
      }
    }
  }
}

TEST_CASE("infinite Hom is reported") {
  Ring r = make_ring({"x", "y"});
  auto e = MatrixFactorization::create(Polynomial::parse(r, "x^2"), 0, pm(r, {{"x"}}), pm(r, {{"x"}}));
  auto h = hom_dims(e, e, false);
  CHECK_FALSE(h.h0.is_finite());
  CHECK_FALSE(h.h1.is_finite());
}

TEST_CASE("is_null_homotopic examples") {
  auto e = xx();
  Ring r = e.ring();
  auto zero = is_null_homotopic(MFMorphism::zero(e, e));
  CHECK(zero.null_homotopic);
  REQUIRE(zero.s0.has_value());
  CHECK(zero.s0->is_zero());
  CHECK(zero.s1->is_zero());

  CHECK_FALSE(is_null_homotopic(MFMorphism::identity(e)).null_homotopic);
  CHECK_FALSE(oracle::null_homotopic_truncated(MFMorphism::identity(e), 4));

  auto px = MFMorphism::identity(e).scaled(Polynomial::parse(r, "x"));
  auto w = is_null_homotopic(px);
  REQUIRE(w.null_homotopic);
  CHECK(oracle::null_homotopic_truncated(px, 1));
  CHECK(e.e0() * *w.s1 + *w.s0 * e.e1() == px.p1());
  CHECK(*w.s1 * e.e0() + e.e1() * *w.s0 == px.p0());
}

TEST_CASE("null-homotopy witnesses substitute back") {
  for (unsigned n = 1; n <= 4; ++n) {
    for (const auto& e : corpus::a_n_family(n)) {
      for (const auto& f : corpus::a_n_family(n)) {
        auto h = hom_dims(e, f);
        for (const auto& p : h.basis_even) {
          Ring r = e.ring();
          // x^n kills every Hom space over A_n.
          auto q = p.scaled(Polynomial::parse(r, "x^" + std::to_string(n)));
          auto w = is_null_homotopic(q);
          REQUIRE(w.null_homotopic);
          CHECK(f.e0() * *w.s1 + *w.s0 * e.e1() == q.p1());
          CHECK(*w.s1 * e.e0() + f.e1() * *w.s0 == q.p0());
        }
      }
    }
  }
}

TEST_CASE("is_contractible examples") {
  Ring r = make_ring({"x"});
  auto unit = MatrixFactorization::create(Polynomial::parse(r, "x^2"), 0, pm(r, {{"1"}}), pm(r, {{"x^2"}}));
  CHECK(is_contractible(unit));
  CHECK(oracle::null_homotopic_truncated(MFMorphism::identity(unit), 0));
  CHECK_FALSE(is_contractible(xx()));
  for (const auto& e : corpus_objects()) {
    auto c = cone(MFMorphism::identity(e)).object;
    CHECK(is_contractible(c));
    CHECK(oracle::null_homotopic_truncated(MFMorphism::identity(c), 2));
  }
}

TEST_CASE("is_homotopy_equivalence examples") {
  auto e = xx();
  CHECK(is_homotopy_equivalence(MFMorphism::identity(e)));
  CHECK_FALSE(is_homotopy_equivalence(MFMorphism::zero(e, e)));
  auto twice = shift(shift(e));
  Ring r = e.ring();
  CHECK(is_homotopy_equivalence(MFMorphism::create(e, twice, PolyMatrix::identity(r, 1), PolyMatrix::identity(r, 1))));
  // (x, x) is isomorphic to its shift via (1, -1).
  auto s = shift(e);
  CHECK(is_homotopy_equivalence(MFMorphism::create(e, s, pm(r, {{"1"}}), pm(r, {{"-1"}}))));
  // (u, v) is not: Hom((u, v), (u, v)[1]) has no even part.
  CHECK(hom_dims(corpus::uv(), shift(corpus::uv()), false).h0 == Dim::finite(0));
}

TEST_CASE("knorrer invariance on A_2") {
  for (const auto& e : corpus::a_n_family(2)) {
    for (const auto& f : corpus::a_n_family(2)) {
      auto before = hom_dims(e, f, false);
      auto after = hom_dims(knorrer(e), knorrer(f), false);
      CHECK(before.h0 == after.h0);
      CHECK(before.h1 == after.h1);
    }
  }
  check_against_oracle(knorrer(xx()), knorrer(xx()));
}

TEST_CASE("rank-2 factorization of x^2 + y^2") {
  Ring r = make_ring({"x", "y"});
  auto e = MatrixFactorization::create(Polynomial::parse(r, "x^2 + y^2"), 0, pm(r, {{"x", "y"}, {"-y", "x"}}),
                                       pm(r, {{"x", "-y"}, {"y", "x"}}));
  check_against_oracle(e, e);
  auto h = hom_dims(e, e, false);
  CHECK(h.h0 == Dim::finite(2));
  CHECK(h.h1 == Dim::finite(2));
}

TEST_CASE("library oracle cross-check") {
  auto e = corpus::a_n(3, 2);
  auto report = hom_dims(e, e, false);
  auto o = truncation_oracle(HomComplex::build(e, e));
  CHECK(o.h0 == std::optional<std::size_t>(2));
  CHECK(o.h1 == std::optional<std::size_t>(2));
  CHECK(oracle_agrees(report, o));
  HomReport wrong = report;
  wrong.h0 = Dim::finite(3);
  CHECK_FALSE(oracle_agrees(wrong, o));
  HomReport infinite = report;
  infinite.h1 = Dim::infinite();
  CHECK_FALSE(oracle_agrees(infinite, o));
}

TEST_CASE("context mismatch") {
  CHECK_THROWS_AS(hom_dims(corpus::a_n(2, 1), corpus::a_n(3, 1)), Error);
  try {
    HomComplex::build(corpus::a_n(2, 1), corpus::uv());
  } catch (const Error& err) {
    CHECK(err.code() == ErrorCode::ContextMismatch);
  }
}

}  // TEST_SUITE
