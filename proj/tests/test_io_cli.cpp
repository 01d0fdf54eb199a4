#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "grank/catalog.hpp"
#include "grank/tensor_io.hpp"

using namespace grank;

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const char* bin = std::getenv("GRANK_CLI");
  REQUIRE(bin != nullptr);
  std::string cmd = std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string temp_path(const std::string& name) {
  return std::string("grank_test_") + name;
}

}  // namespace

TEST_CASE("parse the W tensor") {
  Tensor3 t = parse_tensor_file("t3 2 2 2\n0 0 1 1\n0 1 0 1\n1 0 0 1\n");
  CHECK(t == catalog_make("W", {}));
  Tensor3 one = parse_tensor_file("t3 1 1 1\n0 0 0 1\n");
  CHECK(one.entry_count() == 1);
}

TEST_CASE("parse errors carry positions and classes") {
  try {
    parse_tensor_file("t3 2 2 2\n0 0 5 1\n");
    FAIL("expected IndexOutOfRange");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::IndexOutOfRange);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
  try {
    parse_tensor_file("t3 2 2 2\n0 0 0 1\n0 0 0 2\n");
    FAIL("expected DuplicateEntry");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DuplicateEntry);
  }
  CHECK_THROWS_AS(parse_tensor_file("hello\n"), Error);
  CHECK_THROWS_AS(parse_tensor_file("t3 2 2 2\n0 0 0 x\n"), Error);
  CHECK_THROWS_AS(parse_tensor_file(""), Error);
  // comments and blank lines are fine
  CHECK(parse_tensor_file("# comment\nt3 2 2 2\n\n# more\n0 0 0 3\n").entry_count() == 1);
}

TEST_CASE("round trip and deterministic emission") {
  for (const char* name : {"W", "skew3"}) {
    Tensor3 t = catalog_make(name, {});
    CHECK(parse_tensor_file(emit_tensor_file(t)) == t);
    CHECK(emit_tensor_file(t) == emit_tensor_file(t));
  }
  for (long m : {3L, 5L}) {
    Tensor3 t = catalog_make("utriv", {m});
    CHECK(parse_tensor_file(emit_tensor_file(t)) == t);
  }
  Tensor3 big({2, 2, 2}, {{0, 0, 0, Rat(Int("123456789012345678901234567890"))}});
  CHECK(parse_tensor_file(emit_tensor_file(big)) == big);
}

TEST_CASE("cli: gen + gr --json reports the geometric rank") {
  const std::string f = temp_path("m2.t3");
  auto gen = run_cli("gen matmul 2 -o " + f);
  CHECK(gen.exit_code == 0);
  auto gr = run_cli("gr " + f + " --json");
  CHECK(gr.exit_code == 0);
  CHECK(gr.out.find("\"gr\": 3") != std::string::npos);
  CHECK(gr.out.find("\"certified\": true") != std::string::npos);
  CHECK(gr.out.find("\"schema\": 1") != std::string::npos);
  std::remove(f.c_str());
}

TEST_CASE("cli: classify recovers the catalog form") {
  const std::string f = temp_path("u4.t3");
  CHECK(run_cli("gen utriv 4 -o " + f).exit_code == 0);
  auto res = run_cli("classify " + f);
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("UtrivM") != std::string::npos);
  auto js = run_cli("classify " + f + " --json");
  CHECK(js.out.find("\"variant\": \"UtrivM\"") != std::string::npos);
  CHECK(js.out.find("\"witness\"") != std::string::npos);
  std::remove(f.c_str());
}

TEST_CASE("cli: kron and dsum compose files") {
  const std::string w = temp_path("w.t3"), ww = temp_path("ww.t3"), ds = temp_path("ds.t3");
  CHECK(run_cli("gen W -o " + w).exit_code == 0);
  CHECK(run_cli("kron " + w + " " + w + " -o " + ww).exit_code == 0);
  CHECK(read_tensor_file(ww) == kronecker(catalog_make("W", {}), catalog_make("W", {})));
  CHECK(run_cli("dsum " + w + " " + w + " -o " + ds).exit_code == 0);
  CHECK(read_tensor_file(ds).dims() == std::array<int, 3>{4, 4, 4});
  std::remove(w.c_str()); std::remove(ww.c_str()); std::remove(ds.c_str());
}

TEST_CASE("cli: exit codes per error class") {
  const std::string f = temp_path("m3.t3");
  CHECK(run_cli("gen matmul 3 -o " + f).exit_code == 0);
  // p^9 with a tiny budget: BudgetExceeded -> 3
  CHECK(run_cli("gr " + f + " --budget 10").exit_code == 3);
  std::remove(f.c_str());
  // parse failure -> 2
  const std::string bad = temp_path("bad.t3");
  std::ofstream(bad) << "not a tensor\n";
  CHECK(run_cli("info " + bad).exit_code == 2);
  std::remove(bad.c_str());
  CHECK(run_cli("gen nonsense 3 -o x.t3").exit_code == 2);
  CHECK(run_cli("info does_not_exist.t3").exit_code == 2);
}

TEST_CASE("cli: strata fixture through the pipe") {
  const std::string f = temp_path("mm2.t3");
  CHECK(run_cli("gen matmul 2 -o " + f).exit_code == 0);
  auto res = run_cli("strata " + f + " --axis A --prime 3 --json");
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("\"2\": 32") != std::string::npos);
  CHECK(res.out.find("\"4\": 48") != std::string::npos);
  std::remove(f.c_str());
}
