#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace {

struct CliResult {
  int exit_code;
  std::string out;
};

CliResult run_cli(const std::string& args) {
  const std::string cmd = std::string(CATLIFT_BIN) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name) {
  return std::string(CATLIFT_FIXTURES) + "/" + name;
}

}  // namespace

TEST_CASE("check passes on the shipped verified fixtures") {
  for (const char* name : {"poset_max2.cat", "poset_max3.cat", "idmonad3.cat",
                           "finset2.cat", "bz4.cat"}) {
    CAPTURE(name);
    CliResult r = run_cli("check " + fixture(name) + " law");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("OK") != std::string::npos);
  }
  CliResult lin = run_cli("check " + fixture("linear_f3.cat") + " lin");
  CHECK(lin.exit_code == 0);
}

TEST_CASE("check reports violations with exit 1") {
  CliResult r = run_cli("check " + fixture("broken_law.cat") + " law");
  CHECK(r.exit_code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("malformed input exits 2") {
  CliResult r = run_cli("check " + fixture("broken_ref.cat") + " c");
  CHECK(r.exit_code == 2);
  CliResult missing = run_cli("check " + fixture("poset_max2.cat") + " ghost");
  CHECK(missing.exit_code == 2);
  CliResult nofile = run_cli("check /nonexistent.cat law");
  CHECK(nofile.exit_code == 2);
}

TEST_CASE("cap overruns exit 3") {
  CliResult r = run_cli("roundtrip " + fixture("poset_max3.cat") +
                        " act mon --caps index=2");
  CHECK(r.exit_code == 3);
}

TEST_CASE("roundtrip reports both counts") {
  CliResult r = run_cli("roundtrip " + fixture("bz4.cat") + " act mon");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("laws") != std::string::npos);
  CHECK(r.out.find("lifts") != std::string::npos);

  CliResult none = run_cli("roundtrip " + fixture("poset_min2.cat") + " act mon");
  CHECK(none.exit_code == 0);
}

TEST_CASE("machine format emits structured results") {
  CliResult r =
      run_cli("--format machine check " + fixture("bz4.cat") + " law");
  CHECK(r.exit_code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "check");
  CHECK(j["status"] == 0);
  CHECK(j["violations"].empty());

  CliResult bad =
      run_cli("--format machine check " + fixture("broken_law.cat") + " law");
  CHECK(bad.exit_code == 1);
  auto jb = nlohmann::json::parse(bad.out);
  CHECK(jb["status"] == 1);
  CHECK_FALSE(jb["violations"].empty());
  CHECK(jb["violations"][0].contains("check"));
}

TEST_CASE("lift writes a loadable declaration") {
  namespace fs = std::filesystem;
  const std::string out =
      (fs::temp_directory_path() / "catlift_lift_out.cat").string();
  CliResult r =
      run_cli("lift " + fixture("poset_max3.cat") + " law --out " + out);
  CHECK(r.exit_code == 0);
  // the written file contains the module category and the lifted action,
  // and checks clean
  CliResult back = run_cli("check " + out + " law_lifted");
  CHECK(back.exit_code == 0);
  fs::remove(out);
}

TEST_CASE("lift of a broken law exits 1") {
  CliResult r = run_cli("lift " + fixture("broken_law.cat") + " law");
  CHECK(r.exit_code == 1);
}

TEST_CASE("unlift enumerates strict lifts and derives their laws") {
  CliResult r = run_cli("unlift " + fixture("bz4.cat") + " act mon");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("law0") != std::string::npos);

  CliResult none = run_cli("unlift " + fixture("poset_min2.cat") + " act mon");
  CHECK(none.exit_code == 0);
  CHECK(none.out.find("law0") == std::string::npos);
}

TEST_CASE("witnesses can be switched off") {
  CliResult on = run_cli("check " + fixture("broken_law.cat") + " law");
  CliResult off = run_cli("--witnesses off check " + fixture("broken_law.cat") +
                          " law");
  CHECK(off.exit_code == 1);
  CHECK(off.out.size() < on.out.size());
}

TEST_CASE("linear demo runs clean") {
  CliResult r = run_cli("linear-demo");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS") != std::string::npos);
}
