#include "mfcat/hom/oracle.hpp"

#include <unordered_map>

#include "mfcat/poly/linalg.hpp"

namespace mfcat {

namespace {

std::vector<Monomial> monomials_up_to(std::size_t nvars, std::size_t degree) {
  std::vector<Monomial> out;
  std::vector<Monomial> layer{Monomial(nvars)};
  for (std::size_t d = 0; d <= degree; ++d) {
    out.insert(out.end(), layer.begin(), layer.end());
    std::vector<Monomial> next;
    for (const auto& m : layer) {
      std::size_t start = 0;
      for (std::size_t v = 0; v < nvars; ++v) {
        if (m[v] != 0) start = v;
      }
      for (std::size_t v = start; v < nvars; ++v) next.push_back(m * Monomial::unit(nvars, v));
    }
    layer = std::move(next);
  }
  return out;
}

// Coordinates (row, monomial) numbered on first use.
class RowIndex {
 public:
  explicit RowIndex(std::size_t rows) : maps_(rows) {}
  std::size_t operator()(std::size_t row, const Monomial& m) {
    auto [it, inserted] = maps_[row].try_emplace(m, next_);
    if (inserted) ++next_;
    return it->second;
  }

 private:
  std::vector<std::unordered_map<Monomial, std::size_t, MonomialHash>> maps_;
  std::size_t next_ = 0;
};

struct ImageColumn {
  SparseVector all;
  SparseVector high;  // entries of total degree > cutoff
};

// Images of the basis vectors m * e_j (deg m <= degree) under `op`.
std::vector<ImageColumn> images(const PolyMatrix& op, std::size_t degree, std::size_t cutoff) {
  const Field& k = op.ring()->field();
  const std::size_t nvars = op.ring()->nvars();
  RowIndex index(op.rows());
  std::vector<ImageColumn> out;
  auto monomials = monomials_up_to(nvars, degree);
  for (std::size_t j = 0; j < op.cols(); ++j) {
    for (const auto& m : monomials) {
      std::map<std::size_t, Rational> acc;
      std::map<std::size_t, bool> is_high;
      for (std::size_t i = 0; i < op.rows(); ++i) {
        for (const auto& t : op(i, j).terms()) {
          Monomial product = t.monomial * m;
          std::size_t r = index(i, product);
          auto [it, inserted] = acc.try_emplace(r, t.coeff);
          if (!inserted) it->second = k.add(it->second, t.coeff);
          is_high[r] = product.degree() > cutoff;
        }
      }
      ImageColumn col;
      for (auto& [r, c] : acc) {
        if (sgn(c) == 0) continue;
        if (is_high[r]) col.high.emplace_back(r, c);
        col.all.emplace_back(r, std::move(c));
      }
      out.push_back(std::move(col));
    }
  }
  return out;
}

std::size_t estimate(const PolyMatrix& kernel_map, const PolyMatrix& image_map, std::size_t d, std::size_t reach) {
  const Field& k = kernel_map.ring()->field();
  const std::size_t nvars = kernel_map.ring()->nvars();
  const std::size_t dim_vd = kernel_map.cols() * monomials_up_to(nvars, d).size();

  EchelonBasis kernel_rank(k);
  for (auto& col : images(kernel_map, d, d)) kernel_rank.add(std::move(col.all));
  const std::size_t cycles = dim_vd - kernel_rank.rank();

  EchelonBasis image_all(k);
  EchelonBasis image_high(k);
  for (auto& col : images(image_map, reach, d)) {
    image_all.add(std::move(col.all));
    image_high.add(std::move(col.high));
  }
  const std::size_t boundaries = image_all.rank() - image_high.rank();
  return cycles - boundaries;
}

}  // namespace

std::optional<std::size_t> truncated_cohomology(const PolyMatrix& kernel_map, const PolyMatrix& image_map,
                                                std::size_t max_steps) {
  const std::size_t delta =
      static_cast<std::size_t>(std::max<long>({0, kernel_map.max_degree(), image_map.max_degree()}));
  const std::size_t start = std::max<std::size_t>(delta, 1);
  std::size_t previous = estimate(kernel_map, image_map, start, 2 * start + delta);
  for (std::size_t d = start + 1; d <= start + max_steps; ++d) {
    std::size_t current = estimate(kernel_map, image_map, d, 2 * d + delta);
    if (current == previous) return current;
    previous = current;
  }
  return std::nullopt;
}

OracleReport truncation_oracle(const HomComplex& hc, std::size_t max_steps) {
  return OracleReport{truncated_cohomology(hc.d_even(), hc.d_odd(), max_steps),
                      truncated_cohomology(hc.d_odd(), hc.d_even(), max_steps)};
}

bool oracle_agrees(const HomReport& report, const OracleReport& oracle) {
  auto agrees = [](const Dim& d, const std::optional<std::size_t>& o) {
    if (!d.is_finite()) return !o.has_value();
    return o.has_value() && *o == d.value();
  };
  return agrees(report.h0, oracle.h0) && agrees(report.h1, oracle.h1);
}

}  // namespace mfcat
