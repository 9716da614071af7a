#include "mfcat/mirror/toric.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "mfcat/error.hpp"

namespace mfcat {
namespace {

using IntMatrix = std::vector<std::vector<mpz_class>>;

ToricSpec projective_space(std::size_t n) {
  ToricSpec s;
  s.dimension = n;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<long> ray(n, 0);
    ray[i] = 1;
    s.rays.push_back(ray);
    s.basis.push_back(i);
  }
  s.rays.emplace_back(n, -1);
  s.relations.push_back({std::vector<long>(n + 1, 1), "q"});
  return s;
}

ToricSpec hirzebruch_f1() {
  ToricSpec s;
  s.dimension = 2;
  s.rays = {{1, 0}, {0, 1}, {-1, -1}, {0, -1}};
  s.relations = {{{1, 1, 1, 0}, "q_t"}, {{0, 1, 0, 1}, "q_s"}};
  s.basis = {0, 1};
  return s;
}

ToricSpec del_pezzo_6() {
  ToricSpec s;
  s.dimension = 2;
  s.rays = {{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1}, {-1, -1}};
  s.relations = {{{-1, -1, 1, 0, 0, 0}, std::nullopt},
                 {{1, 0, 0, 1, 0, 0}, "q_r"},
                 {{0, 1, 0, 0, 1, 0}, "q_s"},
                 {{1, 1, 0, 0, 0, 1}, "q_t"}};
  s.basis = {0, 1};
  return s;
}

// Exact rational solve of B x = v for square B; nullopt if B is singular.
std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> b, std::vector<Rational> v) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(b[pivot][col]) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(b[pivot], b[col]);
    std::swap(v[pivot], v[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(b[r][col]) == 0) continue;
      Rational f = b[r][col] / b[col][col];
      for (std::size_t c = col; c < n; ++c) b[r][c] -= f * b[col][c];
      v[r] -= f * v[col];
    }
  }
  for (std::size_t i = 0; i < n; ++i) v[i] /= b[i][i];
  return v;
}

Rational determinant(std::vector<std::vector<Rational>> b) {
  const std::size_t n = b.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(b[pivot][col]) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(b[pivot], b[col]);
      det = -det;
    }
    det *= b[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      Rational f = b[r][col] / b[col][col];
      for (std::size_t c = col; c < n; ++c) b[r][c] -= f * b[col][c];
    }
  }
  return det;
}

// Integer solution of a x = r (a is rows x cols), by column Hermite reduction.
std::optional<std::vector<mpz_class>> solve_integer(IntMatrix a, const std::vector<mpz_class>& r) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  IntMatrix u(cols, std::vector<mpz_class>(cols, 0));
  for (std::size_t i = 0; i < cols; ++i) u[i][i] = 1;
  auto col_axpy = [&](std::size_t dst, std::size_t src, const mpz_class& q) {
    for (auto& row : a) row[dst] -= q * row[src];
    for (auto& row : u) row[dst] -= q * row[src];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    for (auto& row : a) std::swap(row[x], row[y]);
    for (auto& row : u) std::swap(row[x], row[y]);
  };

  std::vector<std::optional<std::size_t>> pivot_of_row(rows);
  std::size_t pc = 0;
  for (std::size_t i = 0; i < rows && pc < cols; ++i) {
    while (true) {
      std::optional<std::size_t> best;
      for (std::size_t j = pc; j < cols; ++j) {
        if (sgn(a[i][j]) != 0 && (!best || abs(a[i][j]) < abs(a[i][*best]))) best = j;
      }
      if (!best) break;
      if (*best != pc) col_swap(*best, pc);
      bool done = true;
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (sgn(a[i][j]) == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), a[i][j].get_mpz_t(), a[i][pc].get_mpz_t());
        col_axpy(j, pc, q);
        if (sgn(a[i][j]) != 0) done = false;
      }
      if (done) break;
    }
    if (sgn(a[i][pc]) != 0) pivot_of_row[i] = pc++;
  }

  std::vector<mpz_class> y(cols, 0);
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class residual = r[i];
    for (std::size_t j = 0; j < pc; ++j) residual -= a[i][j] * y[j];
    if (pivot_of_row[i]) {
      std::size_t c = *pivot_of_row[i];
      if (!mpz_divisible_p(residual.get_mpz_t(), a[i][c].get_mpz_t())) return std::nullopt;
      y[c] = residual / a[i][c];
    } else if (sgn(residual) != 0) {
      return std::nullopt;
    }
  }
  std::vector<mpz_class> x(cols, 0);
  for (std::size_t i = 0; i < cols; ++i) {
    for (std::size_t j = 0; j < cols; ++j) x[i] += u[i][j] * y[j];
  }
  return x;
}

void check_schema(const ToricSpec& spec) {
  const std::size_t n = spec.dimension;
  if (n == 0) throw Error(ErrorCode::SchemaError, "toric dimension must be positive");
  for (const auto& ray : spec.rays) {
    if (ray.size() != n) throw Error(ErrorCode::SchemaError, "ray length differs from the dimension");
  }
  if (spec.basis.size() != n) throw Error(ErrorCode::SchemaError, "basis must name exactly `dimension` rays");
  std::set<std::size_t> seen;
  for (std::size_t b : spec.basis) {
    if (b >= spec.rays.size()) throw Error(ErrorCode::SchemaError, "basis index out of range");
    if (!seen.insert(b).second) throw Error(ErrorCode::SchemaError, "basis indices must be distinct");
  }
  for (const auto& rel : spec.relations) {
    if (rel.coeffs.size() != spec.rays.size()) {
      throw Error(ErrorCode::SchemaError, "relation length differs from the number of rays");
    }
    if (rel.param && !valid_variable_name(*rel.param)) {
      throw Error(ErrorCode::SchemaError, "invalid parameter name '" + *rel.param + "'");
    }
    for (std::size_t d = 0; d < n; ++d) {
      long sum = 0;
      for (std::size_t k = 0; k < spec.rays.size(); ++k) sum += rel.coeffs[k] * spec.rays[k][d];
      if (sum != 0) throw Error(ErrorCode::SchemaError, "relation does not hold among the rays");
    }
  }
}

std::string factor(const std::string& name, long e) {
  return e == 1 ? name : name + "^" + std::to_string(e);
}

}  // namespace

std::optional<ToricSpec> toric_preset(std::string_view name) {
  if (name == "F1") return hirzebruch_f1();
  if (name == "dP6") return del_pezzo_6();
  if (name.size() >= 2 && name[0] == 'P') {
    std::size_t n = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), n);
    if (ec == std::errc() && ptr == name.data() + name.size() && n >= 1 && n <= 64 && name[1] != '0') {
      return projective_space(n);
    }
  }
  return std::nullopt;
}

SuperpotentialSpec build_superpotential(const ToricSpec& spec) {
  check_schema(spec);
  const std::size_t n = spec.dimension;
  const std::size_t nrays = spec.rays.size();

  std::vector<std::vector<Rational>> basis(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t d = 0; d < n; ++d) basis[d][i] = spec.rays[spec.basis[i]][d];
  }
  Rational det = determinant(basis);
  if (det != 1 && det != -1) {
    throw Error(ErrorCode::NonUnimodularBasis, "basis rays have determinant " + det.get_str() + ", expected +-1");
  }

  SuperpotentialSpec out;
  for (std::size_t i = 0; i < n; ++i) out.variables.push_back("Y" + std::to_string(i + 1));
  std::vector<std::optional<std::size_t>> param_index;
  for (const auto& rel : spec.relations) {
    if (!rel.param) {
      param_index.push_back(std::nullopt);
      continue;
    }
    auto it = std::find(out.parameters.begin(), out.parameters.end(), *rel.param);
    param_index.push_back(static_cast<std::size_t>(it - out.parameters.begin()));
    if (it == out.parameters.end()) out.parameters.push_back(*rel.param);
  }

  IntMatrix rel_t(nrays, std::vector<mpz_class>(spec.relations.size()));
  for (std::size_t j = 0; j < spec.relations.size(); ++j) {
    for (std::size_t k = 0; k < nrays; ++k) rel_t[k][j] = spec.relations[j].coeffs[k];
  }

  for (std::size_t k = 0; k < nrays; ++k) {
    SuperpotentialTerm term{std::vector<long>(n, 0), std::vector<long>(out.parameters.size(), 0)};
    auto pos = std::find(spec.basis.begin(), spec.basis.end(), k);
    if (pos != spec.basis.end()) {
      term.exponents[static_cast<std::size_t>(pos - spec.basis.begin())] = 1;
      out.terms.push_back(std::move(term));
      continue;
    }
    std::vector<Rational> v(n);
    for (std::size_t d = 0; d < n; ++d) v[d] = spec.rays[k][d];
    auto c = solve_square(basis, v);
    // T_k = sum_i c_i T_{b_i} + sum_j m_j t_j, where sum_j m_j R_j = e_k - sum_i c_i e_{b_i}.
    std::vector<mpz_class> target(nrays, 0);
    target[k] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      term.exponents[i] = (*c)[i].get_num().get_si();
      target[spec.basis[i]] -= (*c)[i].get_num();
    }
    auto m = solve_integer(rel_t, target);
    if (!m) {
      throw Error(ErrorCode::UnresolvableRay, "ray " + std::to_string(k) + " is not expressible through the relations");
    }
    for (std::size_t j = 0; j < m->size(); ++j) {
      if (param_index[j]) term.param_exponents[*param_index[j]] += (*m)[j].get_si();
    }
    out.terms.push_back(std::move(term));
  }
  return out;
}

std::string SuperpotentialSpec::to_string() const {
  if (terms.empty()) return "0";
  std::string out;
  for (const auto& term : terms) {
    std::vector<std::string> num;
    std::vector<std::string> den;
    for (std::size_t j = 0; j < parameters.size(); ++j) {
      long e = term.param_exponents[j];
      if (e > 0) num.push_back(factor(parameters[j], e));
      if (e < 0) den.push_back(factor(parameters[j], -e));
    }
    for (std::size_t i = 0; i < variables.size(); ++i) {
      long e = term.exponents[i];
      if (e > 0) num.push_back(factor(variables[i], e));
      if (e < 0) den.push_back(factor(variables[i], -e));
    }
    auto join = [](const std::vector<std::string>& parts) {
      std::string s;
      for (const auto& p : parts) s += (s.empty() ? "" : "*") + p;
      return s;
    };
    std::string text = num.empty() ? "1" : join(num);
    if (!den.empty()) text += "/" + (den.size() > 1 ? "(" + join(den) + ")" : den[0]);
    out += (out.empty() ? "" : " + ") + text;
  }
  return out;
}

LaurentPolynomial SuperpotentialSpec::evaluate(const ParameterValues& values) const {
  std::vector<Rational> q;
  for (const auto& p : parameters) {
    auto it = values.find(p);
    if (it == values.end()) throw Error(ErrorCode::MissingParameter, "no value for parameter '" + p + "'");
    if (sgn(it->second) <= 0) throw Error(ErrorCode::InvalidArgument, "parameter '" + p + "' must be positive");
    q.push_back(it->second);
  }
  LaurentPolynomial w(make_ring(variables));
  for (const auto& term : terms) {
    Rational c = 1;
    for (std::size_t j = 0; j < q.size(); ++j) {
      long e = term.param_exponents[j];
      for (long s = 0; s < std::labs(e); ++s) c = e > 0 ? Rational(c * q[j]) : Rational(c / q[j]);
    }
    w.add_term(term.exponents, c);
  }
  return w;
}

}  // namespace mfcat
