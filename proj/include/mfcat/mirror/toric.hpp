#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mfcat/poly/laurent.hpp"

namespace mfcat {

// sum_k coeffs[k] * T_k = t, with q = e^{-t} named `param`. A relation without
// a parameter has t = 0, i.e. q = 1.
struct ToricRelation {
  std::vector<long> coeffs;
  std::optional<std::string> param;
};

struct ToricSpec {
  std::size_t dimension = 0;
  std::vector<std::vector<long>> rays;
  std::vector<ToricRelation> relations;
  // Indices of the rays used as coordinate rays Y_1..Y_n.
  std::vector<std::size_t> basis;
};

// P1, P2, F1, dP6, and P<n> for any n >= 1.
std::optional<ToricSpec> toric_preset(std::string_view name);

using ParameterValues = std::map<std::string, Rational>;

// One Laurent monomial per ray: Y^exponents * prod_j q_j^param_exponents[j].
struct SuperpotentialTerm {
  std::vector<long> exponents;
  std::vector<long> param_exponents;
};

struct SuperpotentialSpec {
  std::vector<std::string> variables;
  std::vector<std::string> parameters;
  std::vector<SuperpotentialTerm> terms;

  // e.g. "Y1 + Y2 + q_t/(Y1*Y2) + q_s/Y2"
  std::string to_string() const;
  // Throws MissingParameter, or InvalidArgument for a non-positive value.
  LaurentPolynomial evaluate(const ParameterValues& values) const;
};

// Throws NonUnimodularBasis or UnresolvableRay; SchemaError for malformed
// specs (wrong lengths, relations that do not hold among the rays).
SuperpotentialSpec build_superpotential(const ToricSpec& spec);

}  // namespace mfcat
