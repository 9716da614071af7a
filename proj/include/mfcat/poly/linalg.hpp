#pragma once

#include <map>
#include <utility>
#include <vector>

#include "mfcat/poly/field.hpp"

namespace mfcat {

// Sparse vector: (index, nonzero value) pairs sorted by index.
using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

// Incremental semi-echelon form over a field.
class EchelonBasis {
 public:
  explicit EchelonBasis(Field field) : field_(field) {}

  // Returns true if v was independent of the vectors added so far.
  bool add(SparseVector v);
  // Reduces v against the current pivots; empty iff v is in the span.
  SparseVector reduce(SparseVector v) const;
  std::size_t rank() const noexcept { return pivots_.size(); }

 private:
  Field field_;
  std::map<std::size_t, SparseVector> pivots_;
};

std::size_t rank_of(const Field& field, const std::vector<SparseVector>& vectors);

}  // namespace mfcat
