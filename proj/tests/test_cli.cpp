#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "oracle.hpp"

namespace fs = std::filesystem;

namespace {

const fs::path kDir = fs::temp_directory_path() / "cuboid_cli_tests";

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  fs::create_directories(kDir);
  const fs::path out = kDir / "stdout.txt";
  const std::string cmd = std::string(CUBOID_CLI) + " " + args + " > " + out.string() + " 2> " +
                          (kDir / "stderr.txt").string();
  const int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, oracle::read_text(out.string())};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST_CASE("cli identities") {
  const Run small = run("identities --p-max 2 --q-max 1");
  CHECK(small.code == 0);
  CHECK(parse(small)["pairs_checked"] == 1);
  CHECK(run("identities --p-max 50 --q-max 50").code == 0);
  CHECK(run("identities --p-max 6 --q-max 6 --inject-corruption").code == 1);
}

TEST_CASE("cli regions and intervals") {
  CHECK(parse(run("regions --p 59 --q 1"))["region"] == "no_cuboid");
  CHECK(parse(run("regions --p 178 --q 3"))["region"] == "nonlinear");
  CHECK(parse(run("regions --p 2 --q 1"))["region"] == "linear");
  const auto iv = parse(run("intervals --p 59 --q 1"));
  CHECK(iv["forward"][2]["lo"] == "3597/1");
  CHECK(iv["forward"][2]["hi"] == "212232/59");
  CHECK(iv["forward"][1]["hi"] == "3361/1");
  CHECK(run("intervals --p 58 --q 1").code == 2);
}

TEST_CASE("cli certify") {
  const Run r = run("certify --p 59 --q 1 --width 1/1048576");
  const auto j = parse(r);
  CHECK(j["roots"].size() == 5);
  CHECK(j["correspondence_ok"] == true);
  // The t4 root misses its printed interval, which is a verification failure.
  CHECK(j["roots"][3]["contained"] == false);
  CHECK(r.code == 1);
  CHECK(run("certify --p 58 --q 1").code == 2);
  CHECK(run("certify --p 118 --q 2").code == 2);
  CHECK(run("certify --p 59 --q 1 --width 0/1").code == 2);
}

TEST_CASE("cli sign checks") {
  const Run r = run("sign-checks --p 590 --q 7");
  const auto j = parse(r);
  REQUIRE(j["labels"].size() == 5);
  for (int k : {0, 1, 2, 4}) CHECK(j["labels"][k]["sign_change"] == "PASS");
  CHECK(j["labels"][3]["sign_change"] == "FAIL");
  CHECK(r.code == 1);
  CHECK(run("sign-checks --p 58 --q 1").code == 2);
}

TEST_CASE("cli search with resume") {
  const fs::path report = kDir / "report.jsonl";
  const fs::path ckpt = kDir / "search.ckpt";
  fs::remove(report);
  fs::remove(ckpt);
  const std::string base = "search --q-max 3 --p-max 100 --report " + report.string() + " --resume " + ckpt.string();
  CHECK(run(base + " --stop-after-rows 2").code == 0);
  const Run resumed = run(base + " --workers 2");
  CHECK(resumed.code == 0);
  CHECK(parse(resumed)["resumed"] == true);
  CHECK(parse(resumed)["candidates_found"] == 0);
  CHECK(run("search --q-max 3 --p-max 101 --report " + report.string() + " --resume " + ckpt.string()).code == 3);
  CHECK(run("search --q-max 3 --p-max 100").code == 2);  // --report missing
}

TEST_CASE("cli usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("regions --p x --q 1").code == 2);
}
