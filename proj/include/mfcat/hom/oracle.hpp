#pragma once

#include <optional>

#include "mfcat/hom/hom.hpp"

namespace mfcat {

// Degree-truncation estimate of dim ker(K) / im(I) for operators K, I on a
// free module with K I = 0. At truncation degree d, with V_d the vectors whose
// entries have total degree <= d and N = 2d + (max entry degree):
//   h(d) = dim(ker K on V_d) - dim(I(V_N) intersect V_d).
// d starts at the max entry degree and grows until two consecutive values
// agree; nullopt if that does not happen within `max_steps` increments.
std::optional<std::size_t> truncated_cohomology(const PolyMatrix& kernel_map, const PolyMatrix& image_map,
                                                std::size_t max_steps = 8);

struct OracleReport {
  std::optional<std::size_t> h0;
  std::optional<std::size_t> h1;
};

OracleReport truncation_oracle(const HomComplex& hc, std::size_t max_steps = 8);

// True when the oracle converged to the same values, or failed to converge
// exactly where the module computation reports INFINITE.
bool oracle_agrees(const HomReport& report, const OracleReport& oracle);

}  // namespace mfcat
