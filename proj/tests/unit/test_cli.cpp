#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

using json = nlohmann::json;

namespace {

const std::string binary = MFCAT_BINARY;
const std::filesystem::path data_dir = MFCAT_DATA_DIR;

struct Run {
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Run run(const std::string& args) {
  auto tmp = std::filesystem::temp_directory_path();
  auto err_path = tmp / ("mfcat_cli_err_" + std::to_string(::getpid()));
  std::string cmd = "cd '" + data_dir.string() + "' && '" + binary + "' " + args + " 2>'" + err_path.string() + "'";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  int status = ::pclose(pipe);
  Run r{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, slurp(err_path)};
  std::filesystem::remove(err_path);
  return r;
}

json machine(const std::string& args) {
  Run r = run(args + " --format machine");
  INFO(args << "\n" << r.err);
  REQUIRE(r.exit_code == 0);
  return json::parse(r.out);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("hom A1 A1") {
  auto j = machine("hom A1.mf A1.mf");
  CHECK(j["schema_version"] == 1);
  CHECK(j["status"] == "ok");
  CHECK(j["verb"] == "hom");
  CHECK(j["payload"]["h0"] == 1);
  CHECK(j["payload"]["h1"] == 1);
  CHECK(j["diagnostics"].empty());
  auto o = machine("hom A1.mf A1.mf --oracle");
  CHECK(o["payload"]["oracle"] == "agrees");
  auto b = machine("hom An:3:2 An:3:2 --basis");
  CHECK(b["payload"]["h0"] == 2);
  CHECK(b["payload"]["basis_even"].size() == 2);
}

TEST_CASE("hom on the ODP examples") {
  auto j = machine("hom UV.mf VU.mf");
  CHECK(j["payload"]["h0"] == 0);
  CHECK(j["payload"]["h1"] == 1);
  auto xy = machine("hom XY_sum_squares.mf XY_sum_squares.mf --oracle");
  CHECK(xy["payload"]["h0"] == 2);
  CHECK(xy["payload"]["h1"] == 2);
  CHECK(xy["payload"]["oracle"] == "agrees");
}

TEST_CASE("mirror verbs") {
  CHECK(machine("mirror count --preset P2 --param q=1")["payload"]["count"] == 3);
  CHECK(machine("mirror count F1.toric --param '*=1'")["payload"]["count"] == 4);
  CHECK(machine("mirror count --preset dP6 --param q_r=2 --param q_s=3 --param q_t=1/2")["payload"]["count"] == 6);
  auto b = machine("mirror build --preset F1");
  CHECK(b["payload"]["superpotential"] == "Y1 + Y2 + q_t/(Y1*Y2) + q_s/Y2");
  auto v = machine("mirror values --preset P1 --param q=1");
  CHECK(v["payload"]["value_polynomial"] == "w^2 - 4");
  CHECK(v["payload"]["distinct_values"] == true);
  CHECK(machine("mirror fiber --preset P1 --param q=1 --at 0")["payload"]["cardinality"] == 2);
  Run crit = run("mirror fiber --preset P1 --param q=1 --at 2");
  CHECK(crit.exit_code == 1);
  CHECK(crit.out.empty());
  CHECK(crit.err.find("CRITICAL_VALUE") != std::string::npos);
  Run missing = run("mirror count --preset F1 --param q_t=1");
  CHECK(missing.exit_code == 1);
  CHECK(missing.err.find("MISSING_PARAMETER") != std::string::npos);
}

TEST_CASE("shift twice is byte-identical") {
  for (const char* name : {"A1.mf", "A2_1.mf", "UV.mf", "XY_sum_squares.mf"}) {
    Run r = run(std::string("shift ") + name + " --twice");
    CHECK(r.exit_code == 0);
    CHECK(r.out == slurp(data_dir / name));
  }
  auto tmp = std::filesystem::temp_directory_path() / "mfcat_cli_shift.mf";
  Run r = run("shift A2_2.mf -o '" + tmp.string() + "'");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("output") != std::string::npos);
  Run back = run("shift '" + tmp.string() + "'");
  CHECK(back.out == slurp(data_dir / "A2_2.mf"));
  std::filesystem::remove(tmp);
}

TEST_CASE("object verbs") {
  CHECK(machine("validate A1.mf")["payload"]["valid"] == true);
  CHECK(machine("validate P2")["payload"]["rays"] == 3);
  CHECK(machine("validate P2")["payload"]["relations"] == 1);
  CHECK(machine("validate A1_identity.cx")["status"] == "ok");
  CHECK(run("sum A1.mf A1.mf").exit_code == 0);
  CHECK(run("cone A1_identity.mor").exit_code == 0);
  CHECK(run("tensor A1.mf UV.mf").exit_code == 0);
  CHECK(run("knorrer A1.mf").exit_code == 0);
  CHECK(machine("cok An:3:2")["payload"]["dimension"] == 2);
  CHECK(machine("cok UV.mf")["payload"]["dimension"] == "INFINITE");
  CHECK(machine("nullhomotopic A1_identity.mor")["payload"]["null_homotopic"] == false);
  CHECK(machine("nullhomotopic A1_times_x.mor")["payload"]["null_homotopic"] == true);
  CHECK(machine("equiv A1_identity.mor")["payload"]["homotopy_equivalence"] == true);
  CHECK(machine("equiv A2_1_to_2.mor")["payload"]["homotopy_equivalence"] == false);
  auto t = machine("totalize A1_identity.cx");
  CHECK(t["payload"]["object"]["e1"].size() == 2);
}

TEST_CASE("human output is tabular") {
  Run r = run("hom A1.mf A1.mf");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "h0  1\nh1  1\n");
}

TEST_CASE("determinism") {
  for (const char* args : {"hom An:4:2 An:4:3 --basis --format machine", "mirror values --preset dP6 --param '*=2'",
                           "cok An:4:2 --format machine"}) {
    Run a = run(args);
    Run b = run(args);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("exit codes and error streams") {
  Run bad = run("validate bad_product.mf");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.empty());
  CHECK(bad.err.find("VALIDATION_ERROR") != std::string::npos);

  Run mismatch = run("hom A1.mf UV.mf --format machine");
  CHECK(mismatch.exit_code == 1);
  CHECK(mismatch.out.empty());
  auto j = json::parse(mismatch.err);
  CHECK(j["status"] == "error");
  CHECK(j["diagnostics"][0].get<std::string>().starts_with("CONTEXT_MISMATCH"));

  CHECK(run("").exit_code == 2);
  CHECK(run("bogus").exit_code == 2);
  CHECK(run("hom A1.mf").exit_code == 2);
  CHECK(run("hom A1.mf A1.mf --bogus").exit_code == 2);
  CHECK(run("hom A1.mf A1.mf --format xml").exit_code == 2);
  Run unknown = run("hom nowhere.mf A1.mf");
  CHECK(unknown.exit_code == 2);
  CHECK(unknown.out.empty());

  auto tmp = std::filesystem::temp_directory_path() / "mfcat_cli_broken.mf";
  std::ofstream(tmp) << "{\n  \"field\": \"Q\",\n  oops\n}\n";
  Run parse = run("validate '" + tmp.string() + "'");
  CHECK(parse.exit_code == 1);
  CHECK(parse.err.find("PARSE_ERROR") != std::string::npos);
  CHECK(parse.err.find(":3:") != std::string::npos);
  std::filesystem::remove(tmp);
}

TEST_CASE("field override") {
  auto j = machine("hom A1.mf A1.mf --field Fp:5");
  CHECK(j["payload"]["h0"] == 1);
  Run bad = run("hom A1.mf A1.mf --field Fp:6");
  CHECK(bad.exit_code == 2);
}

}  // TEST_SUITE
