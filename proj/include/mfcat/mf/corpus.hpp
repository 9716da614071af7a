#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mfcat/mf/factorization.hpp"

namespace mfcat::corpus {

// (x^a, x^(n+1-a)) over k[x] with W = x^(n+1): e1 = x^a, e0 = x^(n+1-a).
// 0 <= a <= n+1; a = 0 and a = n+1 give contractible objects.
MatrixFactorization a_n(unsigned n, unsigned a, const Field& field = Field::rationals(), const std::string& var = "x");

// (u, v) and (v, u) over k[u, v] with W = u*v.
MatrixFactorization uv(const Field& field = Field::rationals());
MatrixFactorization vu(const Field& field = Field::rationals());

// Resolves "An:<n>:<a>", "UV" or "VU"; nullopt for other names.
std::optional<MatrixFactorization> builtin(std::string_view name, const Field& field = Field::rationals());

// All indecomposables a = 1..n of A_n.
std::vector<MatrixFactorization> a_n_family(unsigned n, const Field& field = Field::rationals());

}  // namespace mfcat::corpus
