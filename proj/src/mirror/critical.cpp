#include "mfcat/mirror/critical.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "mfcat/poly/linalg.hpp"

#include "mfcat/error.hpp"

namespace mfcat {
namespace {

// Generators of the critical ideal in `ring`, whose first n variables are Y
// and whose variable n is the saturation variable z.
std::vector<Polynomial> critical_generators(const LaurentPolynomial& w, const Ring& ring) {
  const std::size_t n = w.ring()->nvars();
  std::vector<std::size_t> var_map(n);
  std::iota(var_map.begin(), var_map.end(), 0);
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < n; ++i) {
    auto d = w.euler_derivative(i);
    if (d.is_zero()) continue;
    gens.push_back(d.clear_denominators().numerator.embed(ring, var_map));
  }
  Polynomial torus = Polynomial::variable(ring, n);
  for (std::size_t i = 0; i < n; ++i) torus *= Polynomial::variable(ring, i);
  gens.push_back(torus - Polynomial::constant(ring, 1));
  return gens;
}

std::vector<std::string> with_extra(std::vector<std::string> names, std::initializer_list<const char*> extra) {
  for (const char* e : extra) {
    std::string name = e;
    while (std::find(names.begin(), names.end(), name) != names.end()) name += "_";
    names.push_back(name);
  }
  return names;
}

GroebnerBasis critical_ideal_of(const LaurentPolynomial& w) {
  Ring ring = make_ring(with_extra(w.ring()->variables(), {"z"}), Field::rationals(), MonomialOrder::Grevlex);
  return buchberger(critical_generators(w, ring), ring);
}

bool is_unit_ideal(const GroebnerBasis& g) {
  auto polys = g.polynomials();
  return polys.size() == 1 && polys[0].is_constant() && !polys[0].is_zero();
}

}  // namespace

GroebnerBasis critical_ideal(const SuperpotentialSpec& w, const ParameterValues& params) {
  return critical_ideal_of(w.evaluate(params));
}

std::size_t critical_count(const SuperpotentialSpec& w, const ParameterValues& params) {
  Dim d = quotient_dim(critical_ideal(w, params));
  if (!d.is_finite()) throw Error(ErrorCode::InfiniteCriticalLocus, "the critical locus is not finite");
  return d.value();
}

CriticalReport critical_values(const SuperpotentialSpec& spec, const ParameterValues& params) {
  LaurentPolynomial w = spec.evaluate(params);
  const std::size_t n = w.ring()->nvars();
  Ring wring = make_ring({"w"});

  GroebnerBasis ideal = critical_ideal_of(w);
  if (is_unit_ideal(ideal)) return CriticalReport{0, Polynomial::constant(wring, 1), true};
  Dim count = quotient_dim(ideal);
  if (!count.is_finite()) throw Error(ErrorCode::NonIsolated, "critical points are not isolated");

  // The eliminant is the minimal polynomial of multiplication by W on the
  // finite-dimensional algebra Q[Y, z] / I, where 1/Y_i = z * prod_{j != i} Y_j.
  const Ring& ring = ideal.ring();
  auto cleared = w.clear_denominators();
  std::vector<std::size_t> var_map(n);
  std::iota(var_map.begin(), var_map.end(), 0);
  std::uint32_t top = 0;
  for (std::size_t i = 0; i < n; ++i) top = std::max(top, cleared.shift[i]);
  std::vector<std::uint32_t> mult(n + 1, top);
  for (std::size_t i = 0; i < n; ++i) mult[i] = top - cleared.shift[i];
  Polynomial wpoly = normal_form(cleared.numerator.embed(ring, var_map).times_term(Monomial(std::move(mult)), 1), ideal);

  auto standard = standard_monomials(ideal);
  std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  for (const auto& [pos, m] : *standard) index.emplace(m, index.size());
  const std::size_t dim = index.size();

  EchelonBasis echelon(Field::rationals());
  Polynomial power = Polynomial::constant(ring, 1);
  std::vector<Rational> relation;
  for (std::size_t k = 0; k <= dim; ++k) {
    SparseVector v;
    for (const auto& t : power.terms()) v.emplace_back(index.at(t.monomial), t.coeff);
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    v.emplace_back(dim + k, Rational(1));
    SparseVector r = echelon.reduce(v);
    if (r.front().first >= dim) {
      relation.assign(k + 1, Rational(0));
      for (const auto& [idx, c] : r) relation[idx - dim] = c;
      break;
    }
    echelon.add(std::move(r));
    power = normal_form(power * wpoly, ideal);
  }
  std::vector<Term> terms;
  for (std::size_t k = 0; k < relation.size(); ++k) terms.push_back({Monomial{static_cast<std::uint32_t>(k)}, relation[k]});
  Polynomial value = Polynomial::from_terms(wring, std::move(terms)).monic();

  bool squarefree = true;
  if (value.total_degree() > 0) squarefree = is_unit_ideal(buchberger({value, value.derivative(0)}, wring));
  return CriticalReport{count.value(), value, squarefree};
}

std::size_t fiber_cardinality(const SuperpotentialSpec& spec, const ParameterValues& params, const Rational& value) {
  if (spec.variables.size() != 1) {
    throw Error(ErrorCode::InvalidArgument, "fiber cardinality needs a one-variable superpotential");
  }
  CriticalReport report = critical_values(spec, params);
  Rational at[1] = {value};
  if (sgn(report.value_polynomial.evaluate(at)) == 0) {
    throw Error(ErrorCode::CriticalValue, value.get_str() + " is a critical value");
  }

  LaurentPolynomial w = spec.evaluate(params);
  const Ring& ring = w.ring();
  auto cleared = w.clear_denominators();
  Polynomial g = cleared.numerator - Polynomial::term(ring, cleared.shift, value);
  if (g.is_zero()) throw Error(ErrorCode::CriticalValue, "the superpotential is constant");
  std::uint32_t low = g.terms().back().monomial[0];
  std::vector<Term> stripped;
  for (const auto& t : g.terms()) stripped.push_back({Monomial{t.monomial[0] - low}, t.coeff});
  g = Polynomial::from_terms(ring, std::move(stripped));
  if (g.total_degree() <= 0) return 0;
  auto gcd = buchberger({g, g.derivative(0)}, ring).polynomials();
  return static_cast<std::size_t>(g.total_degree() - gcd.front().total_degree());
}

}  // namespace mfcat
