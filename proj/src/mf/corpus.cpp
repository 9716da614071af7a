#include "mfcat/mf/corpus.hpp"

#include <charconv>

#include "mfcat/error.hpp"

namespace mfcat::corpus {

MatrixFactorization a_n(unsigned n, unsigned a, const Field& field, const std::string& var) {
  if (n == 0 || a > n + 1) {
    throw Error(ErrorCode::InvalidArgument, "A_n object needs n >= 1 and 0 <= a <= n+1");
  }
  Ring ring = make_ring({var}, field);
  Polynomial x = Polynomial::variable(ring, 0);
  return MatrixFactorization::create(x.pow(n + 1), Rational(0), PolyMatrix::from_rows(ring, {{x.pow(a)}}),
                                     PolyMatrix::from_rows(ring, {{x.pow(n + 1 - a)}}));
}

namespace {
MatrixFactorization uv_object(const Field& field, bool swapped) {
  Ring ring = make_ring({"u", "v"}, field);
  Polynomial u = Polynomial::variable(ring, 0);
  Polynomial v = Polynomial::variable(ring, 1);
  auto first = swapped ? v : u;
  auto second = swapped ? u : v;
  return MatrixFactorization::create(u * v, Rational(0), PolyMatrix::from_rows(ring, {{first}}),
                                     PolyMatrix::from_rows(ring, {{second}}));
}

std::optional<unsigned> to_unsigned(std::string_view s) {
  unsigned v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}
}  // namespace

MatrixFactorization uv(const Field& field) { return uv_object(field, false); }
MatrixFactorization vu(const Field& field) { return uv_object(field, true); }

std::optional<MatrixFactorization> builtin(std::string_view name, const Field& field) {
  if (name == "UV") return uv(field);
  if (name == "VU") return vu(field);
  if (!name.starts_with("An:")) return std::nullopt;
  auto rest = name.substr(3);
  auto colon = rest.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::InvalidArgument, "builtin '" + std::string(name) + "' must look like An:<n>:<a>");
  }
  auto n = to_unsigned(rest.substr(0, colon));
  auto a = to_unsigned(rest.substr(colon + 1));
  if (!n || !a) throw Error(ErrorCode::InvalidArgument, "builtin '" + std::string(name) + "' must look like An:<n>:<a>");
  return a_n(*n, *a, field);
}

std::vector<MatrixFactorization> a_n_family(unsigned n, const Field& field) {
  std::vector<MatrixFactorization> out;
  for (unsigned a = 1; a <= n; ++a) out.push_back(a_n(n, a, field));
  return out;
}

}  // namespace mfcat::corpus
