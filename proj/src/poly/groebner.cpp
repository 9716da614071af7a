#include "mfcat/poly/groebner.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "groebner_engine.hpp"
#include "mfcat/error.hpp"

namespace mfcat {

using detail::compute_groebner;
using detail::EngineOptions;

std::size_t Dim::value() const {
  if (infinite_) throw Error(ErrorCode::InvalidArgument, "dimension is infinite");
  return value_;
}

std::string Dim::to_string() const { return infinite_ ? "INFINITE" : std::to_string(value_); }

Dim operator+(Dim a, Dim b) {
  if (a.infinite_ || b.infinite_) return Dim::infinite();
  return Dim::finite(a.value_ + b.value_);
}

ModuleElement to_module_element(const PolyVector& v) {
  ModuleElement e;
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (const auto& t : v[i].terms()) e.push_back({static_cast<std::uint32_t>(i), t.monomial, t.coeff});
  }
  return e;
}

PolyVector to_poly_vector(const ModuleElement& e, const Ring& ring, std::size_t rank) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : e) {
    if (t.position >= rank) throw Error(ErrorCode::LengthMismatch, "module term outside ambient rank");
    parts[t.position].push_back({t.monomial, t.coeff});
  }
  PolyVector v;
  v.reserve(rank);
  for (auto& p : parts) v.push_back(Polynomial::from_terms(ring, std::move(p)));
  return v;
}

namespace {

ModuleElement drop_positions(const ModuleElement& e, std::uint32_t below) {
  ModuleElement out;
  for (const auto& t : e) {
    if (t.position >= below) out.push_back({t.position - below, t.monomial, t.coeff});
  }
  return out;
}

ModuleElement keep_positions_below(const ModuleElement& e, std::uint32_t below) {
  ModuleElement out;
  for (const auto& t : e) {
    if (t.position < below) out.push_back(t);
  }
  return out;
}

void check_vector(const PolyVector& v, std::size_t rank, const Ring& ring) {
  if (v.size() != rank) throw Error(ErrorCode::LengthMismatch, "vector length " + std::to_string(v.size()) +
                                                                   " does not match rank " + std::to_string(rank));
  for (const auto& p : v) require_same_ring(ring, p.ring());
}

std::vector<const ModuleElement*> pointers(const std::vector<ModuleElement>& elems) {
  std::vector<const ModuleElement*> out;
  for (const auto& e : elems) out.push_back(&e);
  return out;
}

}  // namespace

GroebnerBasis::GroebnerBasis(Ring ring, std::size_t rank, bool ideal, std::vector<ModuleElement> elements)
    : ring_(std::move(ring)), rank_(rank), ideal_(ideal), elements_(std::move(elements)) {}

std::vector<Polynomial> GroebnerBasis::polynomials() const {
  if (!ideal_) throw Error(ErrorCode::InvalidArgument, "not an ideal basis");
  std::vector<Polynomial> out;
  for (const auto& e : elements_) out.push_back(to_poly_vector(e, ring_, 1)[0]);
  return out;
}

std::vector<PolyVector> GroebnerBasis::vectors() const {
  std::vector<PolyVector> out;
  for (const auto& e : elements_) out.push_back(to_poly_vector(e, ring_, rank_));
  return out;
}

bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
  if (!same_ring(a.ring_, b.ring_) || a.rank_ != b.rank_ || a.ideal_ != b.ideal_) return false;
  if (a.elements_.size() != b.elements_.size()) return false;
  for (std::size_t i = 0; i < a.elements_.size(); ++i) {
    const auto& x = a.elements_[i];
    const auto& y = b.elements_[i];
    if (x.size() != y.size()) return false;
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (x[j].position != y[j].position || !(x[j].monomial == y[j].monomial) || x[j].coeff != y[j].coeff) {
        return false;
      }
    }
  }
  return true;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const Ring& ring) {
  std::vector<ModuleElement> elems;
  for (const auto& g : gens) {
    require_same_ring(ring, g.ring());
    elems.push_back(to_module_element({g}));
  }
  EngineOptions options;
  options.rank = 1;
  options.ideal = true;
  return GroebnerBasis(ring, 1, true, compute_groebner(*ring, std::move(elems), options));
}

GroebnerBasis module_groebner(const std::vector<PolyVector>& gens, std::size_t rank, const Ring& ring) {
  std::vector<ModuleElement> elems;
  for (const auto& g : gens) {
    check_vector(g, rank, ring);
    elems.push_back(to_module_element(g));
  }
  EngineOptions options;
  options.rank = rank;
  return GroebnerBasis(ring, rank, false, compute_groebner(*ring, std::move(elems), options));
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& g) {
  require_same_ring(g.ring(), f.ring());
  if (g.rank() != 1) throw Error(ErrorCode::LengthMismatch, "polynomial reduced against a module basis");
  auto r = detail::reduce(*g.ring(), to_module_element({f}), pointers(g.elements()), 1);
  return to_poly_vector(r, g.ring(), 1)[0];
}

PolyVector normal_form(const PolyVector& v, const GroebnerBasis& g) {
  check_vector(v, g.rank(), g.ring());
  auto r = detail::reduce(*g.ring(), to_module_element(v), pointers(g.elements()), g.rank());
  return to_poly_vector(r, g.ring(), g.rank());
}

bool submodule_membership(const PolyVector& v, const GroebnerBasis& g) {
  check_vector(v, g.rank(), g.ring());
  return detail::reduce(*g.ring(), to_module_element(v), pointers(g.elements()), g.rank()).empty();
}

namespace {

// Leading monomials grouped by position.
std::vector<std::vector<Monomial>> leading_by_position(const GroebnerBasis& g) {
  std::vector<std::vector<Monomial>> out(g.rank());
  for (const auto& e : g.elements()) out[e.front().position].push_back(e.front().monomial);
  return out;
}

bool is_standard(const std::vector<Monomial>& leads, const Monomial& m) {
  return std::none_of(leads.begin(), leads.end(), [&](const Monomial& l) { return l.divides(m); });
}

bool finite_staircase(const std::vector<Monomial>& leads, std::size_t nvars) {
  for (const auto& l : leads) {
    if (l.is_one()) return true;
  }
  for (std::size_t v = 0; v < nvars; ++v) {
    bool found = std::any_of(leads.begin(), leads.end(),
                             [&](const Monomial& l) { return l.pure_power_variable() == static_cast<std::ptrdiff_t>(v); });
    if (!found) return false;
  }
  return true;
}

// Breadth-first walk of the order ideal of standard monomials.
std::vector<Monomial> enumerate_standard(const std::vector<Monomial>& leads, std::size_t nvars) {
  std::vector<Monomial> out;
  Monomial one(nvars);
  if (!is_standard(leads, one)) return out;
  std::unordered_set<Monomial, MonomialHash> seen{one};
  std::deque<Monomial> queue{one};
  while (!queue.empty()) {
    Monomial m = std::move(queue.front());
    queue.pop_front();
    for (std::size_t v = 0; v < nvars; ++v) {
      Monomial next = m * Monomial::unit(nvars, v);
      if (seen.contains(next) || !is_standard(leads, next)) continue;
      seen.insert(next);
      queue.push_back(next);
    }
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace

std::optional<std::vector<std::pair<std::uint32_t, Monomial>>> standard_monomials(const GroebnerBasis& g) {
  const std::size_t nvars = g.ring()->nvars();
  auto leads = leading_by_position(g);
  for (const auto& l : leads) {
    if (!finite_staircase(l, nvars)) return std::nullopt;
  }
  std::vector<std::pair<std::uint32_t, Monomial>> out;
  for (std::uint32_t p = 0; p < leads.size(); ++p) {
    for (auto& m : enumerate_standard(leads[p], nvars)) out.emplace_back(p, std::move(m));
  }
  const MonomialOrder order = g.ring()->order();
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) {
    return detail::term_greater(order, {b.first, b.second, Rational(1)}, {a.first, a.second, Rational(1)});
  });
  return out;
}

Dim quotient_dim(const GroebnerBasis& g) {
  const std::size_t nvars = g.ring()->nvars();
  auto leads = leading_by_position(g);
  std::size_t total = 0;
  for (const auto& l : leads) {
    if (!finite_staircase(l, nvars)) return Dim::infinite();
    total += enumerate_standard(l, nvars).size();
  }
  return Dim::finite(total);
}

std::vector<std::size_t> hilbert_counts(const GroebnerBasis& g, std::size_t max_degree) {
  const std::size_t nvars = g.ring()->nvars();
  auto leads = leading_by_position(g);
  std::vector<std::size_t> counts(max_degree + 1, 0);
  // Monomials of degree d, built degree by degree.
  std::vector<Monomial> layer{Monomial(nvars)};
  for (std::size_t d = 0; d <= max_degree; ++d) {
    for (const auto& l : leads) {
      for (const auto& m : layer) {
        if (is_standard(l, m)) ++counts[d];
      }
    }
    std::vector<Monomial> next;
    for (const auto& m : layer) {
      // Multiply only by variables at or after the last nonzero exponent so
      // each monomial is produced once.
      std::size_t start = 0;
      for (std::size_t v = 0; v < nvars; ++v) {
        if (m[v] != 0) start = v;
      }
      for (std::size_t v = start; v < nvars; ++v) next.push_back(m * Monomial::unit(nvars, v));
    }
    layer = std::move(next);
  }
  return counts;
}

std::vector<PolyVector> syzygy_basis(const PolyMatrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  const std::size_t rank = rows + cols;
  std::vector<ModuleElement> gens;
  for (std::size_t j = 0; j < cols; ++j) {
    ModuleElement e = to_module_element(m.column_vector(j));
    e.push_back({static_cast<std::uint32_t>(rows + j), Monomial(m.ring()->nvars()), Rational(1)});
    gens.push_back(std::move(e));
  }
  EngineOptions options;
  options.rank = rank;
  options.cut = rows;
  auto basis = compute_groebner(*m.ring(), std::move(gens), options);
  std::vector<PolyVector> out;
  for (const auto& e : basis) {
    if (e.front().position >= rows) {
      out.push_back(to_poly_vector(drop_positions(e, static_cast<std::uint32_t>(rows)), m.ring(), cols));
    }
  }
  return out;
}

std::optional<PolyVector> lift(const PolyVector& v, const std::vector<PolyVector>& gens, std::size_t rank,
                               const Ring& ring) {
  check_vector(v, rank, ring);
  std::vector<ModuleElement> elems;
  for (std::size_t j = 0; j < gens.size(); ++j) {
    check_vector(gens[j], rank, ring);
    ModuleElement e = to_module_element(gens[j]);
    e.push_back({static_cast<std::uint32_t>(rank + j), Monomial(ring->nvars()), Rational(1)});
    elems.push_back(std::move(e));
  }
  EngineOptions options;
  options.rank = rank + gens.size();
  options.cut = rank;
  options.keep_lower = false;
  auto basis = compute_groebner(*ring, std::move(elems), options);
  auto r = detail::reduce(*ring, to_module_element(v), pointers(basis), options.rank);
  if (!keep_positions_below(r, static_cast<std::uint32_t>(rank)).empty()) return std::nullopt;
  // v - sum c_j (g_j, e_j) = (0, -c)
  PolyVector c = to_poly_vector(drop_positions(r, static_cast<std::uint32_t>(rank)), ring, gens.size());
  for (auto& p : c) p = -p;
  return c;
}

Subquotient subquotient(const std::vector<PolyVector>& kernel_gens, const std::vector<PolyVector>& image_gens,
                        std::size_t rank, const Ring& ring, bool check_containment) {
  for (const auto& k : kernel_gens) check_vector(k, rank, ring);
  for (const auto& i : image_gens) check_vector(i, rank, ring);
  if (check_containment) {
    GroebnerBasis kernel = module_groebner(kernel_gens, rank, ring);
    for (const auto& i : image_gens) {
      if (!submodule_membership(i, kernel)) {
        throw Error(ErrorCode::ImageNotInKernel, "image generator is not contained in the kernel module");
      }
    }
  }
  const std::size_t m = kernel_gens.size();
  std::vector<ModuleElement> elems;
  for (std::size_t j = 0; j < m; ++j) {
    ModuleElement e = to_module_element(kernel_gens[j]);
    e.push_back({static_cast<std::uint32_t>(rank + j), Monomial(ring->nvars()), Rational(1)});
    elems.push_back(std::move(e));
  }
  for (const auto& i : image_gens) elems.push_back(to_module_element(i));
  EngineOptions options;
  options.rank = rank + m;
  options.cut = rank;
  auto basis = compute_groebner(*ring, std::move(elems), options);
  std::vector<ModuleElement> relations;
  for (const auto& e : basis) {
    if (e.front().position >= rank) relations.push_back(drop_positions(e, static_cast<std::uint32_t>(rank)));
  }
  return Subquotient{kernel_gens, GroebnerBasis(ring, m, false, std::move(relations))};
}

Dim quotient_module_dim(const std::vector<PolyVector>& kernel_gens, const GroebnerBasis& image_basis) {
  return quotient_dim(
      subquotient(kernel_gens, image_basis.vectors(), image_basis.rank(), image_basis.ring(), true).relations);
}

}  // namespace mfcat
