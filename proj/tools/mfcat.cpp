#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mfcat/error.hpp"
#include "mfcat/hom/hom.hpp"
#include "mfcat/hom/oracle.hpp"
#include "mfcat/io/files.hpp"
#include "mfcat/mf/corpus.hpp"
#include "mfcat/mirror/critical.hpp"

namespace {

using mfcat::Error;
using mfcat::ErrorCode;
using ojson = nlohmann::ordered_json;
namespace io = mfcat::io;

constexpr int kSchemaVersion = 1;

struct Report {
  ojson payload = ojson::object();
  std::vector<std::string> diagnostics;
  // Human output printed verbatim instead of the payload table.
  std::optional<std::string> text;
};

struct Options {
  std::string format = "human";
  std::string field;
  std::string output;
  std::vector<std::string> inputs;
  bool twice = false;
  bool oracle = false;
  bool basis = false;
  std::string u = "u";
  std::string v = "v";
  std::string preset;
  std::vector<std::string> params;
  std::string at;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::optional<mfcat::Field> field_override(const Options& o) {
  if (o.field.empty()) return std::nullopt;
  try {
    return mfcat::Field::parse(o.field);
  } catch (const Error& e) {
    throw UsageError(std::string("--field: ") + e.what());
  }
}

std::string require_input(const Options& o, std::size_t i) {
  if (o.inputs.size() <= i) throw UsageError("missing input argument");
  return o.inputs[i];
}

mfcat::MatrixFactorization object(const Options& o, std::size_t i) {
  return io::load_factorization(require_input(o, i), "", field_override(o));
}

mfcat::MFMorphism morphism(const Options& o) {
  return io::parse_morphism(io::read_file(require_input(o, 0)), field_override(o));
}

ojson dim_json(const mfcat::Dim& d) { return d.is_finite() ? ojson(d.value()) : ojson(d.to_string()); }

ojson matrix_json(const mfcat::PolyMatrix& m) { return ojson(m.to_strings()); }

ojson factorization_json(const mfcat::MatrixFactorization& mf) { return ojson::parse(io::emit_factorization(mf)); }

Report object_report(const Options& o, const mfcat::MatrixFactorization& mf) {
  Report r;
  std::string text = io::emit_factorization(mf);
  if (!o.output.empty()) {
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw UsageError("cannot write '" + o.output + "'");
    out << text;
    if (!out.flush()) throw UsageError("cannot write '" + o.output + "'");
    r.payload["output"] = o.output;
    r.payload["rank"] = mf.rank();
    return r;
  }
  r.payload["object"] = factorization_json(mf);
  r.text = text;
  return r;
}

Report run_validate(const Options& o) {
  std::string ref = require_input(o, 0);
  Report r;
  auto field = field_override(o);
  if (std::filesystem::is_regular_file(ref)) {
    io::Source src = io::read_file(ref);
    ojson probe;
    try {
      probe = ojson::parse(src.text);
    } catch (const ojson::parse_error&) {
      io::parse_factorization(src, field);
    }
    if (probe.is_object() && probe.contains("rays")) {
      auto spec = io::parse_toric(src);
      mfcat::build_superpotential(spec);
      r.payload["kind"] = "toric";
      r.payload["rays"] = spec.rays.size();
      r.payload["relations"] = spec.relations.size();
      return r;
    }
    if (probe.is_object() && probe.contains("source")) {
      auto m = io::parse_morphism(src, field);
      r.payload["kind"] = "morphism";
      r.payload["valid"] = true;
      r.payload["source_rank"] = m.source().rank();
      r.payload["target_rank"] = m.target().rank();
      return r;
    }
    if (probe.is_object() && probe.contains("objects")) {
      auto c = io::parse_complex(src, field);
      r.payload["kind"] = "complex";
      r.payload["valid"] = true;
      r.payload["length"] = c.objects().size();
      return r;
    }
  } else if (auto spec = mfcat::toric_preset(ref)) {
    r.payload["kind"] = "toric";
    r.payload["rays"] = spec->rays.size();
    r.payload["relations"] = spec->relations.size();
    return r;
  }
  auto mf = object(o, 0);
  r.payload["kind"] = "factorization";
  r.payload["valid"] = true;
  r.payload["rank"] = mf.rank();
  r.payload["W"] = mf.potential().to_string();
  r.payload["lambda"] = mf.lambda().get_str();
  return r;
}

Report run_shift(const Options& o) {
  auto mf = mfcat::shift(object(o, 0));
  if (o.twice) mf = mfcat::shift(mf);
  return object_report(o, mf);
}

Report run_cok(const Options& o) {
  auto p = mfcat::cokernel_presentation(object(o, 0));
  Report r;
  r.payload["dimension"] = dim_json(p.dimension);
  r.payload["hilbert"] = p.hilbert;
  r.payload["fiber_relation"] = p.fiber_relation.to_string();
  r.payload["presentation"] = matrix_json(p.presentation);
  return r;
}

Report run_hom(const Options& o) {
  auto e = object(o, 0);
  auto f = object(o, 1);
  auto report = mfcat::hom_dims(e, f, o.basis);
  Report r;
  r.payload["h0"] = dim_json(report.h0);
  r.payload["h1"] = dim_json(report.h1);
  if (o.basis) {
    auto list = [](const std::vector<mfcat::MFMorphism>& ms) {
      ojson out = ojson::array();
      for (const auto& m : ms) out.push_back({{"p1", matrix_json(m.p1())}, {"p0", matrix_json(m.p0())}});
      return out;
    };
    r.payload["basis_even"] = list(report.basis_even);
    r.payload["basis_odd"] = list(report.basis_odd);
  }
  if (o.oracle) {
    auto oracle = mfcat::truncation_oracle(mfcat::HomComplex::build(e, f));
    auto show = [](const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : std::string("INFINITE"); };
    if (!mfcat::oracle_agrees(report, oracle)) {
      throw Error(ErrorCode::ValidationError, "oracle mismatch: module computation (" + report.h0.to_string() + ", " +
                                                  report.h1.to_string() + ") vs truncation oracle (" +
                                                  show(oracle.h0) + ", " + show(oracle.h1) + ")");
    }
    r.payload["oracle"] = "agrees";
  }
  return r;
}

Report run_nullhomotopic(const Options& o) {
  auto result = mfcat::is_null_homotopic(morphism(o));
  Report r;
  r.payload["null_homotopic"] = result.null_homotopic;
  if (result.null_homotopic) {
    r.payload["s0"] = matrix_json(*result.s0);
    r.payload["s1"] = matrix_json(*result.s1);
  }
  return r;
}

mfcat::ParameterValues parameter_values(const Options& o, const mfcat::SuperpotentialSpec& w) {
  mfcat::ParameterValues values;
  std::optional<mfcat::Rational> wildcard;
  for (const auto& p : o.params) {
    auto eq = p.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--param expects name=value, got '" + p + "'");
    std::string name = p.substr(0, eq);
    mfcat::Rational value;
    try {
      value = io::parse_rational(p.substr(eq + 1));
    } catch (const Error& e) {
      throw UsageError(std::string("--param ") + name + ": " + e.what());
    }
    if (name == "*") {
      wildcard = value;
    } else if (std::find(w.parameters.begin(), w.parameters.end(), name) == w.parameters.end()) {
      throw UsageError("unknown parameter '" + name + "'");
    } else {
      values[name] = value;
    }
  }
  if (wildcard) {
    for (const auto& name : w.parameters) values.try_emplace(name, *wildcard);
  }
  return values;
}

mfcat::SuperpotentialSpec superpotential(const Options& o) {
  if (!o.preset.empty() && !o.inputs.empty()) throw UsageError("give either --preset or a toric file, not both");
  if (o.preset.empty() && o.inputs.empty()) throw UsageError("missing toric input (file or --preset)");
  mfcat::ToricSpec spec;
  if (!o.preset.empty()) {
    auto p = mfcat::toric_preset(o.preset);
    if (!p) throw UsageError("unknown preset '" + o.preset + "'");
    spec = *p;
  } else {
    spec = io::parse_toric(io::read_file(o.inputs[0]));
  }
  return mfcat::build_superpotential(spec);
}

Report run_mirror_build(const Options& o) {
  auto w = superpotential(o);
  Report r;
  r.payload["superpotential"] = w.to_string();
  r.payload["variables"] = w.variables;
  r.payload["parameters"] = w.parameters;
  return r;
}

Report run_mirror_count(const Options& o) {
  auto w = superpotential(o);
  Report r;
  r.payload["count"] = mfcat::critical_count(w, parameter_values(o, w));
  return r;
}

Report run_mirror_values(const Options& o) {
  auto w = superpotential(o);
  auto rep = mfcat::critical_values(w, parameter_values(o, w));
  Report r;
  r.payload["count"] = rep.count;
  r.payload["value_polynomial"] = rep.value_polynomial.to_string();
  r.payload["degree"] = rep.value_polynomial.total_degree();
  r.payload["distinct_values"] = rep.distinct_values;
  return r;
}

Report run_mirror_fiber(const Options& o) {
  if (o.at.empty()) throw UsageError("mirror fiber needs --at <value>");
  mfcat::Rational at;
  try {
    at = io::parse_rational(o.at);
  } catch (const Error& e) {
    throw UsageError(std::string("--at: ") + e.what());
  }
  auto w = superpotential(o);
  Report r;
  r.payload["value"] = at.get_str();
  r.payload["cardinality"] = mfcat::fiber_cardinality(w, parameter_values(o, w), at);
  return r;
}

void flatten(const ojson& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, rows);
  } else if (j.is_string()) {
    rows.emplace_back(prefix, j.get<std::string>());
  } else {
    rows.emplace_back(prefix, j.dump());
  }
}

std::string human(const Report& r) {
  if (r.text) return *r.text;
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(r.payload, "", rows);
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, k.size());
  std::string out;
  for (const auto& [k, v] : rows) out += k + std::string(width - k.size() + 2, ' ') + v + "\n";
  for (const auto& d : r.diagnostics) out += "note: " + d + "\n";
  return out;
}

std::string machine(const std::string& verb, const std::string& status, const ojson& payload,
                    const std::vector<std::string>& diagnostics) {
  ojson doc;
  doc["schema_version"] = kSchemaVersion;
  doc["status"] = status;
  doc["verb"] = verb;
  doc["payload"] = payload;
  doc["diagnostics"] = diagnostics;
  return doc.dump(2) + "\n";
}

int fail(const Options& o, const std::string& verb, const std::string& code, const std::string& message, int exit) {
  if (o.format == "machine") {
    std::cerr << machine(verb, "error", ojson::object(), {code + ": " + message});
  } else {
    std::cerr << "error: " << code << ": " << message << "\n";
  }
  return exit;
}

int usage_exit(ErrorCode code) {
  return code == ErrorCode::InvalidArgument ? 2 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix factorizations and Hori-Vafa mirrors"};
  app.require_subcommand(1);
  Options o;
  std::string verb;
  std::function<Report(const Options&)> handler;

  auto common = [&](CLI::App* sub, const std::string& name, std::function<Report(const Options&)> fn) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"human", "machine"}));
    sub->add_option("--field", o.field, "Coefficient field override: Q or Fp:<p>");
    sub->callback([&, name, fn] {
      verb = name;
      handler = fn;
    });
  };
  auto inputs = [&](CLI::App* sub, std::size_t n, const std::string& what) {
    sub->add_option("inputs", o.inputs, what)->required()->expected(static_cast<int>(n));
  };

  auto* validate = app.add_subcommand("validate", "Parse and validate an input file or built-in object");
  inputs(validate, 1, "Factorization, morphism, complex or toric file; or a built-in name");
  common(validate, "validate", run_validate);

  auto* shift = app.add_subcommand("shift", "Shift functor E -> E[1]");
  inputs(shift, 1, "Factorization");
  shift->add_flag("--twice", o.twice, "Apply the shift twice");
  shift->add_option("-o,--output", o.output, "Write the result to this file");
  common(shift, "shift", run_shift);

  auto* sum = app.add_subcommand("sum", "Direct sum");
  inputs(sum, 2, "Two factorizations");
  sum->add_option("-o,--output", o.output, "Write the result to this file");
  common(sum, "sum", [](const Options& opt) { return object_report(opt, mfcat::direct_sum(object(opt, 0), object(opt, 1))); });

  auto* cone = app.add_subcommand("cone", "Mapping cone of a morphism");
  inputs(cone, 1, "Morphism file");
  cone->add_option("-o,--output", o.output, "Write the result to this file");
  common(cone, "cone", [](const Options& opt) { return object_report(opt, mfcat::cone(morphism(opt)).object); });

  auto* tensor = app.add_subcommand("tensor", "Tensor product over disjoint variables");
  inputs(tensor, 2, "Two factorizations");
  tensor->add_option("-o,--output", o.output, "Write the result to this file");
  common(tensor, "tensor", [](const Options& opt) { return object_report(opt, mfcat::tensor(object(opt, 0), object(opt, 1))); });

  auto* knorrer = app.add_subcommand("knorrer", "Knorrer periodicity: tensor with (u, v) over uv");
  inputs(knorrer, 1, "Factorization");
  knorrer->add_option("--u", o.u, "Name of the first new variable");
  knorrer->add_option("--v", o.v, "Name of the second new variable");
  knorrer->add_option("-o,--output", o.output, "Write the result to this file");
  common(knorrer, "knorrer",
         [](const Options& opt) { return object_report(opt, mfcat::knorrer(object(opt, 0), opt.u, opt.v)); });

  auto* cok = app.add_subcommand("cok", "Cokernel module of e1 over A/(W - lambda)");
  inputs(cok, 1, "Factorization");
  common(cok, "cok", run_cok);

  auto* hom = app.add_subcommand("hom", "Dimensions of Hom(E, F) up to homotopy");
  inputs(hom, 2, "Source and target factorizations");
  hom->add_flag("--oracle", o.oracle, "Cross-check against the degree-truncation oracle");
  hom->add_flag("--basis", o.basis, "Print representatives");
  common(hom, "hom", run_hom);

  auto* nullh = app.add_subcommand("nullhomotopic", "Decide whether a morphism is null-homotopic");
  inputs(nullh, 1, "Morphism file");
  common(nullh, "nullhomotopic", run_nullhomotopic);

  auto* equiv = app.add_subcommand("equiv", "Decide whether a morphism is a homotopy equivalence");
  inputs(equiv, 1, "Morphism file");
  common(equiv, "equiv", [](const Options& opt) {
    Report r;
    r.payload["homotopy_equivalence"] = mfcat::is_homotopy_equivalence(morphism(opt));
    return r;
  });

  auto* total = app.add_subcommand("totalize", "Totalization of a complex of pairs");
  inputs(total, 1, "Complex file");
  total->add_option("-o,--output", o.output, "Write the result to this file");
  common(total, "totalize", [](const Options& opt) {
    return object_report(opt, mfcat::totalize(io::parse_complex(io::read_file(require_input(opt, 0)), field_override(opt))));
  });

  auto* mirror = app.add_subcommand("mirror", "Hori-Vafa mirror superpotentials");
  mirror->require_subcommand(1);
  auto mirror_verb = [&](const std::string& name, const std::string& help, std::function<Report(const Options&)> fn) {
    auto* sub = mirror->add_subcommand(name, help);
    sub->add_option("toric", o.inputs, "Toric data file")->expected(0, 1);
    sub->add_option("--preset", o.preset, "Built-in fan: P<n>, F1 or dP6");
    if (name != "build") sub->add_option("--param", o.params, "Parameter value name=v (name * sets all)");
    if (name == "fiber") sub->add_option("--at", o.at, "Fiber value");
    common(sub, "mirror-" + name, std::move(fn));
  };
  mirror_verb("build", "Build the superpotential", run_mirror_build);
  mirror_verb("count", "Number of critical points with multiplicity", run_mirror_count);
  mirror_verb("values", "Critical values", run_mirror_values);
  mirror_verb("fiber", "Number of points in a one-dimensional fiber", run_mirror_fiber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n" << "run with --help for usage\n";
    return 2;
  }

  try {
    Report r = handler(o);
    std::cout << (o.format == "machine" ? machine(verb, "ok", r.payload, r.diagnostics) : human(r));
    return 0;
  } catch (const UsageError& e) {
    return fail(o, verb, "USAGE_ERROR", e.what(), 2);
  } catch (const Error& e) {
    return fail(o, verb, std::string(mfcat::code_name(e.code())), e.what(), usage_exit(e.code()));
  } catch (const std::exception& e) {
    return fail(o, verb, "INTERNAL_ERROR", e.what(), 1);
  }
}
