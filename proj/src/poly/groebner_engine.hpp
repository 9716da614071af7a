#pragma once

#include <limits>
#include <vector>

#include "mfcat/poly/groebner.hpp"

namespace mfcat::detail {

struct EngineOptions {
  // Rank of the ambient free module.
  std::size_t rank = 1;
  // Enables the coprime-leading-term criterion (valid for ideals only).
  bool ideal = false;
  // Elements whose leading position is >= cut lie in the elimination block.
  std::size_t cut = std::numeric_limits<std::size_t>::max();
  // When false, elimination-block elements are dropped as soon as they
  // appear; the result is then a basis of the part above the cut, with the
  // lower coordinates acting as cofactor bookkeeping.
  bool keep_lower = true;
};

bool term_greater(MonomialOrder order, const ModuleTerm& a, const ModuleTerm& b);

// Full normal form of f with respect to monic reducers.
ModuleElement reduce(const RingContext& ring, ModuleElement f, const std::vector<const ModuleElement*>& reducers,
                     std::size_t rank);

// Reduced Groebner basis, elements monic, sorted by increasing leading term.
std::vector<ModuleElement> compute_groebner(const RingContext& ring, std::vector<ModuleElement> gens,
                                            const EngineOptions& options);

}  // namespace mfcat::detail
