#include "mfcat/poly/linalg.hpp"

namespace mfcat {

namespace {

// a - c * b
SparseVector axpy(const Field& k, const SparseVector& a, const Rational& c, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, k.neg(k.mul(c, b[j].second)));
      ++j;
    } else {
      Rational v = k.sub(a[i].second, k.mul(c, b[j].second));
      if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

SparseVector EchelonBasis::reduce(SparseVector v) const {
  // Only the leading entry is eliminated; earlier entries are already zero.
  while (!v.empty()) {
    auto it = pivots_.find(v.front().first);
    if (it == pivots_.end()) return v;
    Rational c = v.front().second;
    v = axpy(field_, v, c, it->second);
  }
  return v;
}

bool EchelonBasis::add(SparseVector v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  Rational inv = field_.inv(v.front().second);
  for (auto& [idx, val] : v) val = field_.mul(val, inv);
  pivots_.emplace(v.front().first, std::move(v));
  return true;
}

std::size_t rank_of(const Field& field, const std::vector<SparseVector>& vectors) {
  EchelonBasis basis(field);
  for (const auto& v : vectors) basis.add(v);
  return basis.rank();
}

}  // namespace mfcat
