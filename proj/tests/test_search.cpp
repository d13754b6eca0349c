#include <doctest.h>

#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cuboid/errors.hpp"
#include "cuboid/search.hpp"
#include "oracle.hpp"

using namespace cuboid;
namespace fs = std::filesystem;

namespace {

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "cuboid_search_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  fs::remove(p);
  return p;
}

// Report lines with the elapsed field dropped.
std::vector<std::string> stable_lines(const fs::path& path) {
  std::vector<std::string> out;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    auto j = nlohmann::ordered_json::parse(line);
    j.erase("elapsed_ms");
    out.push_back(j.dump());
  }
  return out;
}

}  // namespace

TEST_CASE("factorization and divisors") {
  const auto f = factorize(Integer(360));
  REQUIRE(f.size() == 3);
  CHECK(f[0].prime == 2);
  CHECK(f[0].exponent == 3);
  CHECK(f[2].prime == 5);
  const auto d = divisors_up_to(f, Integer(12));
  CHECK(d == std::vector<Integer>{1, 2, 3, 4, 5, 6, 8, 9, 10, 12});
  CHECK(divisors_up_to({}, Integer(5)) == std::vector<Integer>{1});
  CHECK(factorize(Integer(97)).size() == 1);
}

TEST_CASE("divisor sieve finds planted roots") {
  // Roots p^i q^j and a composite divisor 2 * 3 * 5 with p = 6, q = 5.
  const IntPolynomial planted = oracle::planted({36, 125, 30, -6}) * IntPolynomial{1, 0, 1};
  const auto f = factorize(Integer(36 * 125 * 30 * 6));
  const SieveResult r = divisor_sieve(planted, f, Integer(1000));
  CHECK(r.roots == std::vector<Integer>{30, 36, 125});
  CHECK(divisor_sieve(planted, f, Integer(100)).roots == std::vector<Integer>{30, 36});
}

TEST_CASE("linear seeds go through the sieve") {
  const SearchRecord r = search_seed(SeedPair(6, 5), Rational(1, 1024));
  CHECK(r.region == RegionClass::linear);
  CHECK(r.checks_passed == std::vector<std::string>{"divisor_sieve"});
  CHECK(r.candidates_found.empty());
  // Divisors of 6^10 5^10 up to the bound, including mixed ones like 30.
  CHECK(std::find(r.integer_points_tested.begin(), r.integer_points_tested.end(), Integer(30)) !=
        r.integer_points_tested.end());
  for (const auto& t : r.integer_points_tested) CHECK(upper_bound_holds(SeedPair(6, 5), t));
}

TEST_CASE("nonlinear seed matches a brute-force scan") {
  const SeedPair s(178, 3);
  const SearchRecord r = search_seed(s, Rational(1, 1 << 20));
  CHECK(r.region == RegionClass::nonlinear);
  CHECK(r.integer_points_tested == std::vector<Integer>{32735});
  CHECK(r.candidates_found.empty());
  const IntPolynomial q = build_Qpq(s).poly;
  const long p = 178, qq = 3;
  const long top = (p * p + p * qq) / 2 + p * (integer_sqrt_floor(Integer(p * p + 6 * p * qq + qq * qq)).get_si() + 1);
  long roots = 0;
  for (long t = qq * qq + 1; t < top; ++t) {
    if (q.evaluate(Integer(t)) == 0) ++roots;
  }
  CHECK(roots == 0);
}

TEST_CASE("excluded seeds are recorded and skipped") {
  const SearchRecord big_p = search_seed(SeedPair(59, 1), Rational(1, 1024));
  CHECK(big_p.region == RegionClass::no_cuboid);
  CHECK(big_p.integer_points_tested.empty());
  CHECK(big_p.checks_passed.back() == "third_interval_integer_free");
  const SearchRecord big_q = search_seed(SeedPair(1, 59), Rational(1, 1024));
  CHECK(big_q.checks_passed == std::vector<std::string>{"large_q_exclusion"});
}

TEST_CASE("report line layout") {
  const std::string line = to_report_line(search_seed(SeedPair(2, 1), Rational(1, 1024)));
  const auto j = nlohmann::ordered_json::parse(line);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  CHECK(keys == std::vector<std::string>{"p", "q", "region", "checks_passed", "integer_points_tested",
                                         "candidates_found", "elapsed_ms"});
  CHECK(j["p"] == "2");
  CHECK(j["region"] == "linear");
  CHECK(line.find('\n') == std::string::npos);
}

TEST_CASE("config hash and checkpoint") {
  SearchConfig a;
  a.q_max = 3;
  a.p_max = 250;
  SearchConfig b = a;
  b.workers = 8;
  b.report_path = "elsewhere";
  CHECK(config_hash(a) == config_hash(b));
  b.p_max = 251;
  CHECK(config_hash(a) != config_hash(b));
  CHECK(config_hash(a).size() == 16);
  const Checkpoint c{{Integer(2), Integer(249)}, config_hash(a)};
  const Checkpoint back = parse_checkpoint(to_json(c));
  CHECK(back.last_completed == c.last_completed);
  CHECK(back.config_hash == c.config_hash);
}

TEST_CASE("runs are deterministic across worker counts") {
  SearchConfig c;
  c.q_max = 4;
  c.p_max = 120;
  c.workers = 1;
  c.report_path = scratch("serial.jsonl").string();
  const SearchSummary s1 = run_search(c);
  CHECK(s1.complete);
  CHECK(s1.candidates_found == 0);
  SearchConfig par = c;
  par.workers = 4;
  par.report_path = scratch("parallel.jsonl").string();
  run_search(par);
  CHECK(stable_lines(c.report_path) == stable_lines(par.report_path));
  CHECK(stable_lines(c.report_path).size() == s1.records_written);
}

TEST_CASE("kill and resume reproduce the uninterrupted report") {
  SearchConfig full;
  full.q_max = 3;
  full.p_max = 200;
  full.report_path = scratch("full.jsonl").string();
  run_search(full);

  SearchConfig part = full;
  part.workers = 3;
  part.report_path = scratch("part.jsonl").string();
  part.resume_path = scratch("part.ckpt").string();
  const SearchSummary first = run_search(part, SearchControl{1});
  CHECK(first.rows_written == 1);
  CHECK_FALSE(first.complete);
  CHECK(parse_checkpoint(oracle::read_text(*part.resume_path)).last_completed.first == 1);
  // Simulate a torn write after the checkpoint.
  { std::ofstream(part.report_path, std::ios::app) << "{\"p\":\"1\",\"q\":\"2\",\"reg"; }
  const SearchSummary second = run_search(part);
  CHECK(second.resumed);
  CHECK(second.complete);
  CHECK(stable_lines(part.report_path) == stable_lines(full.report_path));
}

TEST_CASE("resuming with a different configuration is refused") {
  SearchConfig c;
  c.q_max = 2;
  c.p_max = 30;
  c.report_path = scratch("mismatch.jsonl").string();
  c.resume_path = scratch("mismatch.ckpt").string();
  run_search(c, SearchControl{1});
  SearchConfig other = c;
  other.p_max = 31;
  CHECK_THROWS_AS(run_search(other), CheckpointMismatch);
}

TEST_CASE("identity batches") {
  CHECK(run_identities(Integer(2), Integer(1)).pairs_checked == 1);
  const IdentitySummary ok = run_identities(Integer(20), Integer(20));
  CHECK(ok.ok());
  const IdentitySummary bad = run_identities(Integer(5), Integer(5), true);
  CHECK_FALSE(bad.ok());
  CHECK(bad.factorization_failures.size() == bad.pairs_checked);
}

TEST_CASE("invalid search configurations") {
  SearchConfig c;
  c.report_path = scratch("invalid.jsonl").string();
  c.q_max = 0;
  CHECK_THROWS_AS(run_search(c), std::invalid_argument);
  c.q_max = 1;
  c.width = 0;
  CHECK_THROWS_AS(run_search(c), std::invalid_argument);
}
