#include "mfcat/io/files.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "mfcat/error.hpp"
#include "mfcat/mf/corpus.hpp"

namespace mfcat::io {
namespace {

using json = nlohmann::json;

struct Location {
  std::size_t line;
  std::size_t column;
};

Location locate(const std::string& text, std::size_t offset) {
  Location loc{1, 1};
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++loc.line;
      loc.column = 1;
    } else {
      ++loc.column;
    }
  }
  return loc;
}

std::string where(const Source& src, Location loc) {
  return src.name + ":" + std::to_string(loc.line) + ":" + std::to_string(loc.column);
}

json parse_json(const Source& src) {
  try {
    return json::parse(src.text);
  } catch (const json::parse_error& e) {
    std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    std::string what = e.what();
    auto colon = what.rfind(": ");
    throw Error(ErrorCode::ParseError, where(src, locate(src.text, offset)) + ": invalid JSON" +
                                           (colon == std::string::npos ? "" : what.substr(colon)));
  }
}

[[noreturn]] void schema(const Source& src, const std::string& message) {
  throw Error(ErrorCode::SchemaError, src.name + ": " + message);
}

void require_object(const Source& src, const json& j, const std::set<std::string>& required,
                    const std::set<std::string>& optional) {
  if (!j.is_object()) schema(src, "top-level value must be an object");
  for (const auto& key : required) {
    if (!j.contains(key)) schema(src, "missing field '" + key + "'");
  }
  for (const auto& [key, value] : j.items()) {
    if (!required.contains(key) && !optional.contains(key)) schema(src, "unknown field '" + key + "'");
  }
}

const std::string& get_string(const Source& src, const json& j, const std::string& path) {
  if (!j.is_string()) schema(src, "'" + path + "' must be a string");
  return j.get_ref<const std::string&>();
}

long get_integer(const Source& src, const json& j, const std::string& path) {
  if (!j.is_number_integer()) schema(src, "'" + path + "' must be an integer");
  return j.get<long>();
}

// Parses a polynomial string, pointing parse errors at the string's position
// in the source text.
Polynomial parse_poly(const Source& src, const Ring& ring, const std::string& text, const std::string& path) {
  try {
    return Polynomial::parse(ring, text);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::ParseError) throw;
    std::string msg = e.what();
    std::size_t column = 1;
    if (msg.starts_with("column ")) {
      column = std::stoul(msg.substr(7));
      msg = msg.substr(msg.find(": ") + 2);
    }
    std::string quoted = json(text).dump();
    auto at = src.text.find(quoted);
    std::string prefix = at == std::string::npos ? src.name : where(src, locate(src.text, at + column));
    throw Error(ErrorCode::ParseError, prefix + ": in '" + path + "': " + msg);
  }
}

PolyMatrix parse_matrix(const Source& src, const Ring& ring, const json& j, const std::string& path,
                        std::size_t rows, std::size_t cols) {
  if (!j.is_array()) schema(src, "'" + path + "' must be an array of rows");
  if (j.size() != rows) {
    schema(src, "'" + path + "' must have " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
  }
  PolyMatrix m(ring, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    std::string rpath = path + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != cols) {
      schema(src, "'" + rpath + "' must be an array of " + std::to_string(cols) + " strings");
    }
    for (std::size_t c = 0; c < cols; ++c) {
      std::string cpath = rpath + "[" + std::to_string(c) + "]";
      m(r, c) = parse_poly(src, ring, get_string(src, row[c], cpath), cpath);
    }
  }
  return m;
}

std::size_t square_size(const Source& src, const json& j, const std::string& path) {
  if (!j.is_array()) schema(src, "'" + path + "' must be an array of rows");
  return j.size();
}

Field parse_field(const Source& src, const json& j) {
  try {
    return Field::parse(get_string(src, j, "field"));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SchemaError) throw;
    schema(src, e.what());
  }
}

template <typename F>
auto forward_validation(const Source& src, F&& build) {
  try {
    return build();
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::NotAFactorization:
      case ErrorCode::InvalidMorphism:
      case ErrorCode::CompositionNonzero:
      case ErrorCode::ContextMismatch:
        throw Error(ErrorCode::ValidationError, src.name + ": " + e.what());
      default:
        throw;
    }
  }
}

MatrixFactorization factorization_from_json(const Source& src, const json& j, const std::optional<Field>& field) {
  require_object(src, j, {"field", "vars", "W", "lambda", "e1", "e0"}, {"order"});
  Field k = field ? *field : parse_field(src, j["field"]);
  MonomialOrder order = MonomialOrder::Grevlex;
  if (j.contains("order")) {
    try {
      order = parse_order(get_string(src, j["order"], "order"));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::SchemaError) throw;
      schema(src, e.what());
    }
  }
  if (!j["vars"].is_array()) schema(src, "'vars' must be an array of strings");
  std::vector<std::string> vars;
  for (std::size_t i = 0; i < j["vars"].size(); ++i) {
    vars.push_back(get_string(src, j["vars"][i], "vars[" + std::to_string(i) + "]"));
  }
  Ring ring;
  try {
    ring = make_ring(vars, k, order);
  } catch (const Error& e) {
    schema(src, e.what());
  }
  Polynomial w = parse_poly(src, ring, get_string(src, j["W"], "W"), "W");
  Rational lambda;
  const json& lj = j["lambda"];
  if (lj.is_number_integer()) {
    lambda = Rational(lj.dump());
  } else if (lj.is_string()) {
    try {
      lambda = parse_rational(lj.get_ref<const std::string&>());
    } catch (const Error&) {
      schema(src, "'lambda' must be a rational number");
    }
  } else {
    schema(src, "'lambda' must be an integer or a rational string");
  }
  try {
    lambda = k.element(lambda);
  } catch (const Error& e) {
    schema(src, e.what());
  }
  std::size_t r = square_size(src, j["e1"], "e1");
  PolyMatrix e1 = parse_matrix(src, ring, j["e1"], "e1", r, r);
  PolyMatrix e0 = parse_matrix(src, ring, j["e0"], "e0", r, r);
  return forward_validation(src, [&] { return MatrixFactorization::create(w, lambda, e1, e0); });
}

std::string json_string(std::string_view s) { return json(std::string(s)).dump(); }

std::string emit_matrix(const PolyMatrix& m) {
  auto rows = m.to_strings();
  auto row_text = [](const std::vector<std::string>& row) {
    std::string out = "[";
    for (std::size_t c = 0; c < row.size(); ++c) out += (c ? ", " : "") + json_string(row[c]);
    return out + "]";
  };
  if (rows.empty()) return "[]";
  if (rows.size() == 1) return "[" + row_text(rows[0]) + "]";
  std::string out = "[\n";
  for (std::size_t r = 0; r < rows.size(); ++r) out += "    " + row_text(rows[r]) + (r + 1 < rows.size() ? ",\n" : "\n");
  return out + "  ]";
}

std::string emit_list(const std::vector<std::string>& items) {
  std::string out = "[";
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? ", " : "") + items[i];
  return out + "]";
}

template <typename T>
std::string emit_numbers(const std::vector<T>& v) {
  std::vector<std::string> items;
  for (const auto& x : v) items.push_back(std::to_string(x));
  return emit_list(items);
}

}  // namespace

Source read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return Source{buf.str(), path.string(), path.parent_path()};
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
  std::size_t digits = 0;
  bool slash = false;
  std::size_t after_slash = 0;
  for (std::size_t p = i; p < s.size(); ++p) {
    if (std::isdigit(static_cast<unsigned char>(s[p]))) {
      (slash ? after_slash : digits)++;
    } else if (s[p] == '/' && !slash && digits > 0) {
      slash = true;
    } else {
      throw Error(ErrorCode::ParseError, "invalid rational '" + s + "'");
    }
  }
  if (digits == 0 || (slash && after_slash == 0)) throw Error(ErrorCode::ParseError, "invalid rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rational q(s);
  if (sgn(q.get_den()) == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

MatrixFactorization parse_factorization(const Source& src, const std::optional<Field>& field) {
  return factorization_from_json(src, parse_json(src), field);
}

MatrixFactorization load_factorization(std::string_view ref, const std::filesystem::path& base,
                                       const std::optional<Field>& field) {
  std::filesystem::path path = base / std::filesystem::path(ref);
  if (std::filesystem::is_regular_file(path)) return parse_factorization(read_file(path), field);
  if (auto b = corpus::builtin(ref, field ? *field : Field::rationals())) return *b;
  throw Error(ErrorCode::InvalidArgument, "'" + std::string(ref) + "' is neither a readable file nor a built-in object");
}

MFMorphism parse_morphism(const Source& src, const std::optional<Field>& field) {
  json j = parse_json(src);
  require_object(src, j, {"source", "target", "p1", "p0"}, {});
  MatrixFactorization source = load_factorization(get_string(src, j["source"], "source"), src.directory, field);
  MatrixFactorization target = load_factorization(get_string(src, j["target"], "target"), src.directory, field);
  if (!same_ring(source.ring(), target.ring())) {
    throw Error(ErrorCode::ValidationError, src.name + ": source and target live over different rings");
  }
  const Ring& ring = source.ring();
  PolyMatrix p1 = parse_matrix(src, ring, j["p1"], "p1", target.rank(), source.rank());
  PolyMatrix p0 = parse_matrix(src, ring, j["p0"], "p0", target.rank(), source.rank());
  return forward_validation(src, [&] { return MFMorphism::create(source, target, p1, p0); });
}

PairComplex parse_complex(const Source& src, const std::optional<Field>& field) {
  json j = parse_json(src);
  require_object(src, j, {"objects", "maps"}, {});
  if (!j["objects"].is_array() || j["objects"].empty()) schema(src, "'objects' must be a nonempty array");
  if (!j["maps"].is_array() || j["maps"].size() + 1 != j["objects"].size()) {
    schema(src, "'maps' must hold one entry per consecutive pair of objects");
  }
  std::vector<MatrixFactorization> objects;
  for (std::size_t i = 0; i < j["objects"].size(); ++i) {
    objects.push_back(
        load_factorization(get_string(src, j["objects"][i], "objects[" + std::to_string(i) + "]"), src.directory, field));
  }
  for (const auto& o : objects) {
    if (!o.same_context(objects.front())) {
      throw Error(ErrorCode::ValidationError, src.name + ": objects do not share ring, W and lambda");
    }
  }
  std::vector<MFMorphism> maps;
  for (std::size_t i = 0; i < j["maps"].size(); ++i) {
    const json& m = j["maps"][i];
    std::string path = "maps[" + std::to_string(i) + "]";
    if (!m.is_object() || !m.contains("p1") || !m.contains("p0") || m.size() != 2) {
      schema(src, "'" + path + "' must be an object with fields p1 and p0");
    }
    const auto& s = objects[i];
    const auto& t = objects[i + 1];
    PolyMatrix p1 = parse_matrix(src, s.ring(), m["p1"], path + ".p1", t.rank(), s.rank());
    PolyMatrix p0 = parse_matrix(src, s.ring(), m["p0"], path + ".p0", t.rank(), s.rank());
    maps.push_back(forward_validation(src, [&] { return MFMorphism::create(s, t, p1, p0); }));
  }
  return forward_validation(src, [&] { return PairComplex::create(std::move(objects), std::move(maps)); });
}

ToricSpec parse_toric(const Source& src) {
  json j = parse_json(src);
  require_object(src, j, {"dimension", "rays", "relations", "basis"}, {});
  ToricSpec spec;
  long dim = get_integer(src, j["dimension"], "dimension");
  if (dim <= 0) schema(src, "'dimension' must be positive");
  spec.dimension = static_cast<std::size_t>(dim);
  auto int_list = [&](const json& a, const std::string& path) {
    if (!a.is_array()) schema(src, "'" + path + "' must be an array of integers");
    std::vector<long> out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(get_integer(src, a[i], path + "[" + std::to_string(i) + "]"));
    return out;
  };
  if (!j["rays"].is_array()) schema(src, "'rays' must be an array");
  for (std::size_t i = 0; i < j["rays"].size(); ++i) {
    spec.rays.push_back(int_list(j["rays"][i], "rays[" + std::to_string(i) + "]"));
  }
  if (!j["relations"].is_array()) schema(src, "'relations' must be an array");
  for (std::size_t i = 0; i < j["relations"].size(); ++i) {
    const json& r = j["relations"][i];
    std::string path = "relations[" + std::to_string(i) + "]";
    if (!r.is_object() || !r.contains("coeffs")) schema(src, "'" + path + "' must be an object with 'coeffs'");
    for (const auto& [key, value] : r.items()) {
      if (key != "coeffs" && key != "param") schema(src, "unknown field '" + path + "." + key + "'");
    }
    ToricRelation rel{int_list(r["coeffs"], path + ".coeffs"), std::nullopt};
    if (r.contains("param") && !r["param"].is_null()) rel.param = get_string(src, r["param"], path + ".param");
    spec.relations.push_back(std::move(rel));
  }
  for (long b : int_list(j["basis"], "basis")) {
    if (b < 0) schema(src, "'basis' indices must be nonnegative");
    spec.basis.push_back(static_cast<std::size_t>(b));
  }
  return spec;
}

ToricSpec load_toric(std::string_view ref) {
  std::filesystem::path path{std::string(ref)};
  if (std::filesystem::is_regular_file(path)) return parse_toric(read_file(path));
  if (auto preset = toric_preset(ref)) return *preset;
  throw Error(ErrorCode::InvalidArgument, "'" + std::string(ref) + "' is neither a readable file nor a preset");
}

std::string emit_factorization(const MatrixFactorization& mf) {
  const RingContext& ring = *mf.ring();
  std::vector<std::string> vars;
  for (const auto& v : ring.variables()) vars.push_back(json_string(v));
  std::string out = "{\n";
  out += "  \"field\": " + json_string(ring.field().name()) + ",\n";
  out += "  \"vars\": " + emit_list(vars) + ",\n";
  if (ring.order() != MonomialOrder::Grevlex) out += "  \"order\": " + json_string(order_name(ring.order())) + ",\n";
  out += "  \"W\": " + json_string(mf.potential().to_string()) + ",\n";
  out += "  \"lambda\": " + json_string(mf.lambda().get_str()) + ",\n";
  out += "  \"e1\": " + emit_matrix(mf.e1()) + ",\n";
  out += "  \"e0\": " + emit_matrix(mf.e0()) + "\n";
  return out + "}\n";
}

std::string emit_morphism(const MFMorphism& m, std::string_view source_ref, std::string_view target_ref) {
  std::string out = "{\n";
  out += "  \"source\": " + json_string(source_ref) + ",\n";
  out += "  \"target\": " + json_string(target_ref) + ",\n";
  out += "  \"p1\": " + emit_matrix(m.p1()) + ",\n";
  out += "  \"p0\": " + emit_matrix(m.p0()) + "\n";
  return out + "}\n";
}

std::string emit_toric(const ToricSpec& spec) {
  std::vector<std::string> rays;
  for (const auto& r : spec.rays) rays.push_back(emit_numbers(r));
  std::vector<std::string> rels;
  for (const auto& r : spec.relations) {
    rels.push_back("{\"coeffs\": " + emit_numbers(r.coeffs) + ", \"param\": " + (r.param ? json_string(*r.param) : "null") +
                   "}");
  }
  std::string out = "{\n";
  out += "  \"dimension\": " + std::to_string(spec.dimension) + ",\n";
  out += "  \"rays\": " + emit_list(rays) + ",\n";
  out += "  \"relations\": [\n";
  for (std::size_t i = 0; i < rels.size(); ++i) out += "    " + rels[i] + (i + 1 < rels.size() ? ",\n" : "\n");
  out += "  ],\n";
  out += "  \"basis\": " + emit_numbers(spec.basis) + "\n";
  return out + "}\n";
}

}  // namespace mfcat::io
