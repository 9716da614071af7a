#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "mfcat/mf/functors.hpp"
#include "mfcat/mirror/toric.hpp"

namespace mfcat::io {

// JSON input formats. Errors are ParseError (with line:column), SchemaError
// (missing or mistyped fields) and ValidationError (the data parses but is
// not a factorization, morphism or complex).
//
// Factorization:
//   {"field": "Q", "vars": ["x"], "order": "grevlex", "W": "x^2", "lambda": "0",
//    "e1": [["x"]], "e0": [["x"]]}
// "order" is optional (default grevlex); "lambda" may be an integer or a
// rational string.
//
// Morphism:
//   {"source": "A1.mf", "target": "An:1:1", "p1": [["1"]], "p0": [["1"]]}
// source and target are paths relative to the morphism file or built-in
// names (An:<n>:<a>, UV, VU).
//
// Complex:
//   {"objects": ["A1.mf", "A1.mf"], "maps": [{"p1": [["1"]], "p0": [["1"]]}]}
//
// Toric data:
//   {"dimension": 2, "rays": [[1, 0], ...], "relations": [{"coeffs": [...],
//    "param": "q_t"}], "basis": [0, 1]}
// "param" may be null or absent for a relation with q = 1.

struct Source {
  std::string text;
  // Used in messages and to resolve relative references.
  std::string name;
  std::filesystem::path directory;
};

Source read_file(const std::filesystem::path& path);

MatrixFactorization parse_factorization(const Source& src, const std::optional<Field>& field = std::nullopt);
MFMorphism parse_morphism(const Source& src, const std::optional<Field>& field = std::nullopt);
PairComplex parse_complex(const Source& src, const std::optional<Field>& field = std::nullopt);
ToricSpec parse_toric(const Source& src);

// A factorization from a file path or a built-in name; files take precedence.
MatrixFactorization load_factorization(std::string_view ref, const std::filesystem::path& base,
                                       const std::optional<Field>& field = std::nullopt);
// A toric spec from a file path or a preset name.
ToricSpec load_toric(std::string_view ref);

// Canonical text, ending in a newline. Parsing it reproduces the object.
std::string emit_factorization(const MatrixFactorization& mf);
std::string emit_morphism(const MFMorphism& m, std::string_view source_ref, std::string_view target_ref);
std::string emit_toric(const ToricSpec& spec);

// Exact rational from "3", "-3/4" or an integer; throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace mfcat::io
