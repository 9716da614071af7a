#pragma once

#include "mfcat/mirror/toric.hpp"
#include "mfcat/poly/groebner.hpp"

namespace mfcat {

// Ideal of the critical points of W on the torus: Y_i dW/dY_i with
// denominators cleared, plus z * Y_1 ... Y_n - 1, in Q[Y_1..Y_n, z].
GroebnerBasis critical_ideal(const SuperpotentialSpec& w, const ParameterValues& params);

// Critical points counted with multiplicity. Throws InfiniteCriticalLocus.
std::size_t critical_count(const SuperpotentialSpec& w, const ParameterValues& params);

struct CriticalReport {
  std::size_t count = 0;
  // Monic generator of the critical values, in Q[w]; 1 if there are none.
  Polynomial value_polynomial;
  bool distinct_values = true;
};

// The value polynomial generates (I + <w * Y^shift - numerator(W)>) meet Q[w]
// for the critical ideal I. Throws NonIsolated when the critical locus is
// not finite.
CriticalReport critical_values(const SuperpotentialSpec& w, const ParameterValues& params);

// Number of torus points of W = value for a one-variable W, i.e. distinct
// nonzero roots of the cleared equation. Throws CriticalValue.
std::size_t fiber_cardinality(const SuperpotentialSpec& w, const ParameterValues& params, const Rational& value);

}  // namespace mfcat
