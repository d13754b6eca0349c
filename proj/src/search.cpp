#include "cuboid/search.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "cuboid/asymptotics.hpp"
#include "cuboid/errors.hpp"
#include "cuboid/rootcert.hpp"

namespace cuboid {

using ordered_json = nlohmann::ordered_json;

std::vector<PrimePower> factorize(const Integer& n) {
  if (n <= 0) throw std::invalid_argument("factorize needs a positive integer");
  std::vector<PrimePower> out;
  Integer rest = n;
  for (Integer d = 2; d * d <= rest; ++d) {
    if (rest % d != 0) continue;
    PrimePower pp{d, 0};
    while (rest % d == 0) {
      rest /= d;
      ++pp.exponent;
    }
    out.push_back(std::move(pp));
  }
  if (rest > 1) out.push_back({rest, 1});
  return out;
}

std::vector<Integer> divisors_up_to(const std::vector<PrimePower>& factorization, const Integer& bound) {
  std::vector<Integer> out;
  if (bound < 1) return out;
  out.emplace_back(1);
  for (const auto& [prime, exponent] : factorization) {
    const std::size_t existing = out.size();
    for (std::size_t i = 0; i < existing; ++i) {
      Integer d = out[i];
      for (unsigned e = 1; e <= exponent; ++e) {
        d *= prime;
        if (d > bound) break;
        out.push_back(d);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

SieveResult divisor_sieve(const IntPolynomial& poly, const std::vector<PrimePower>& constant_factorization,
                          const Integer& bound) {
  SieveResult r;
  r.tested = divisors_up_to(constant_factorization, bound);
  for (const auto& d : r.tested) {
    if (poly.evaluate(d) == 0) r.roots.push_back(d);
  }
  return r;
}

namespace {

std::vector<PrimePower> tenth_power_factorization(const SeedPair& seed) {
  std::vector<PrimePower> f = factorize(seed.p());
  if (seed.q() > 1) {
    auto fq = factorize(seed.q());
    f.insert(f.end(), fq.begin(), fq.end());
  }
  for (auto& pp : f) pp.exponent *= 10;
  return f;
}

FoundRoot examine_root(const SeedPair& seed, const Integer& t) {
  FoundRoot f;
  f.t = t;
  f.admissible = admissible(seed, t);
  f.upper_bound = upper_bound_holds(seed, t);
  if (f.admissible) {
    for (Branch b : {Branch::first, Branch::second}) {
      f.reconstructions.push_back(reconstruct(CuboidCandidate(seed, t, b)));
    }
  }
  return f;
}

}  // namespace

SearchRecord search_seed(const SeedPair& seed, const Rational& width) {
  const auto start = std::chrono::steady_clock::now();
  SearchRecord rec{seed, classify_region(seed), {}, {}, {}, 0.0};
  const IntPolynomial qpq = build_Qpq(seed).poly;

  switch (rec.region) {
    case RegionClass::no_cuboid: {
      if (seed.large_p()) {
        const ExclusionReport ex = exclusion_check(seed);
        if (ex.second_interval_excluded) rec.checks_passed.emplace_back("second_interval_excluded");
        if (ex.first_interval_excluded) rec.checks_passed.emplace_back("first_interval_excluded");
        if (ex.full_exclusion) rec.checks_passed.emplace_back("third_interval_integer_free");
        if (!ex.full_exclusion) {
          // Not expected: fall back to testing the third interval directly.
          for (const auto& t : ex.third_interval_integer_points) {
            rec.integer_points_tested.push_back(t);
            if (qpq.evaluate(t) == 0) rec.candidates_found.push_back(examine_root(seed, t));
          }
        }
      } else {
        rec.checks_passed.emplace_back("large_q_exclusion");
      }
      break;
    }
    case RegionClass::nonlinear: {
      const ExclusionReport ex = exclusion_check(seed);
      if (ex.second_interval_excluded) rec.checks_passed.emplace_back("second_interval_excluded");
      if (ex.first_interval_excluded) rec.checks_passed.emplace_back("first_interval_excluded");
      const auto roots = certify_roots(seed, width, CertifyOptions{false});
      if (roots[2].contained) rec.checks_passed.emplace_back("third_root_certified");
      for (const auto& t : ex.third_interval_integer_points) {
        rec.integer_points_tested.push_back(t);
        if (qpq.evaluate(t) == 0) rec.candidates_found.push_back(examine_root(seed, t));
      }
      rec.checks_passed.emplace_back("third_interval_scanned");
      break;
    }
    case RegionClass::linear: {
      const SieveResult s = divisor_sieve(qpq, tenth_power_factorization(seed), upper_bound_floor(seed));
      rec.integer_points_tested = s.tested;
      for (const auto& t : s.roots) rec.candidates_found.push_back(examine_root(seed, t));
      rec.checks_passed.emplace_back("divisor_sieve");
      break;
    }
  }
  rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

namespace {

ordered_json reconstruction_json(const CuboidReconstruction& r) {
  ordered_json j;
  j["a"] = r.a.get_str();
  j["b"] = r.b.get_str();
  j["u"] = r.u.get_str();
  j["t"] = r.t.get_str();
  j["alpha"] = to_string(r.alpha);
  j["beta"] = to_string(r.beta);
  j["upsilon"] = to_string(r.upsilon);
  j["z"] = to_string(r.z_param);
  for (auto [name, v] : {std::pair{"x1", &r.x1}, {"x2", &r.x2}, {"x3", &r.x3}, {"d1", &r.d1}, {"d2", &r.d2},
                         {"d3", &r.d3}}) {
    j[name] = to_string(*v);
  }
  ordered_json res = ordered_json::array();
  for (const auto& v : r.residuals) res.push_back(to_string(v));
  j["residuals"] = res;
  j["common_denominator"] = r.common_denominator.get_str();
  j["perfect"] = r.satisfies_cuboid_equations();
  return j;
}

}  // namespace

std::string to_report_line(const SearchRecord& record) {
  ordered_json j;
  j["p"] = record.seed.p().get_str();
  j["q"] = record.seed.q().get_str();
  j["region"] = to_string(record.region);
  j["checks_passed"] = record.checks_passed;
  ordered_json tested = ordered_json::array();
  for (const auto& t : record.integer_points_tested) tested.push_back(t.get_str());
  j["integer_points_tested"] = tested;
  ordered_json found = ordered_json::array();
  for (const auto& f : record.candidates_found) {
    ordered_json c;
    c["t"] = f.t.get_str();
    c["admissible"] = f.admissible;
    c["upper_bound"] = f.upper_bound;
    ordered_json recon = ordered_json::array();
    for (const auto& r : f.reconstructions) recon.push_back(reconstruction_json(r));
    c["reconstructions"] = recon;
    found.push_back(c);
  }
  j["candidates_found"] = found;
  j["elapsed_ms"] = record.elapsed_ms;
  return j.dump();
}

// --- checkpointed batch ------------------------------------------------------

std::string config_hash(const SearchConfig& config) {
  // FNV-1a over a canonical text form.
  const std::string text =
      "q_max=" + config.q_max.get_str() + ";p_max=" + config.p_max.get_str() + ";width=" + to_string(config.width);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string to_json(const Checkpoint& checkpoint) {
  ordered_json j;
  j["last_completed"] = {{"q", checkpoint.last_completed.first.get_str()},
                         {"p", checkpoint.last_completed.second.get_str()}};
  j["config_hash"] = checkpoint.config_hash;
  return j.dump();
}

Checkpoint parse_checkpoint(const std::string& json_text) {
  const auto j = nlohmann::json::parse(json_text);
  Checkpoint c;
  c.last_completed = {parse_integer(j.at("last_completed").at("q").get<std::string>()),
                      parse_integer(j.at("last_completed").at("p").get<std::string>())};
  c.config_hash = j.at("config_hash").get<std::string>();
  return c;
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomically(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << text << '\n';
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

// Keeps the records of rows <= last_row, dropping any partial tail.
void truncate_report(const std::string& path, const Integer& last_row) {
  std::vector<std::string> kept;
  if (std::filesystem::exists(path)) {
    std::ifstream in(path);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(line);
      } catch (const nlohmann::json::parse_error&) {
        break;  // torn write at the tail
      }
      if (parse_integer(j.at("q").get<std::string>()) > last_row) break;
      kept.push_back(line);
    }
  }
  std::string text;
  for (const auto& l : kept) text += l + '\n';
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp);
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

struct RowResult {
  std::vector<std::string> lines;
  Integer last_p{0};
  unsigned long candidates = 0;
};

RowResult run_row(const Integer& q, const SearchConfig& config) {
  RowResult row;
  for (Integer p = 1; p <= config.p_max; ++p) {
    if (!is_valid_seed(p, q)) continue;
    SearchRecord rec = search_seed(SeedPair(p, q), config.width);
    row.candidates += rec.candidates_found.size();
    row.lines.push_back(to_report_line(rec));
    row.last_p = p;
  }
  return row;
}

}  // namespace

SearchSummary run_search(const SearchConfig& config, const SearchControl& control) {
  if (config.q_max < 1 || config.p_max < 1) throw std::invalid_argument("search bounds must be positive");
  if (!(config.width > 0)) throw std::invalid_argument("search width must be positive");
  if (config.workers < 1) throw std::invalid_argument("search needs at least one worker");
  if (config.report_path.empty()) throw std::invalid_argument("search needs a report path");

  const std::string hash = config_hash(config);
  SearchSummary summary;
  Integer first_row = 1;
  if (config.resume_path && std::filesystem::exists(*config.resume_path)) {
    const Checkpoint cp = parse_checkpoint(read_file(*config.resume_path));
    if (cp.config_hash != hash) {
      throw CheckpointMismatch("checkpoint " + *config.resume_path + " was written for config " + cp.config_hash +
                               ", current config is " + hash);
    }
    first_row = cp.last_completed.first + 1;
    truncate_report(config.report_path, cp.last_completed.first);
    summary.resumed = true;
  } else {
    truncate_report(config.report_path, Integer(0));
  }

  std::ofstream report(config.report_path, std::ios::app);
  if (!report) throw std::runtime_error("cannot open report " + config.report_path);

  std::vector<Integer> rows;
  for (Integer q = first_row; q <= config.q_max; ++q) rows.push_back(q);

  std::mutex mu;
  std::condition_variable ready;
  std::map<std::size_t, RowResult> done;
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;

  auto worker = [&] {
    while (!stop.load()) {
      const std::size_t i = next.fetch_add(1);
      if (i >= rows.size()) return;
      try {
        RowResult r = run_row(rows[i], config);
        std::lock_guard lock(mu);
        done.emplace(i, std::move(r));
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        stop = true;
      }
      ready.notify_all();
    }
  };

  const unsigned n_workers = std::min<unsigned>(config.workers, std::max<std::size_t>(rows.size(), 1));
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(worker);

  std::exception_ptr writer_failure;
  try {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      RowResult r;
      {
        std::unique_lock lock(mu);
        ready.wait(lock, [&] { return done.count(i) != 0 || failure != nullptr; });
        if (done.count(i) == 0) break;
        r = std::move(done.at(i));
        done.erase(i);
      }
      for (const auto& line : r.lines) report << line << '\n';
      report.flush();
      if (!report) throw std::runtime_error("write failed for report " + config.report_path);
      summary.records_written += r.lines.size();
      summary.candidates_found += r.candidates;
      ++summary.rows_written;
      if (config.resume_path) {
        write_file_atomically(*config.resume_path, to_json(Checkpoint{{rows[i], r.last_p}, hash}));
      }
      if (control.stop_after_rows && summary.rows_written >= *control.stop_after_rows) break;
    }
  } catch (...) {
    writer_failure = std::current_exception();
  }
  stop = true;
  for (auto& t : pool) t.join();
  if (writer_failure) std::rethrow_exception(writer_failure);
  if (failure) std::rethrow_exception(failure);
  summary.complete = first_row + summary.rows_written > config.q_max;
  return summary;
}

// --- identity batch ----------------------------------------------------------

IdentitySummary run_identities(const Integer& p_max, const Integer& q_max, bool inject_corruption) {
  IdentitySummary s;
  for (Integer q = 1; q <= q_max; ++q) {
    for (Integer p = 1; p <= p_max; ++p) {
      if (!is_valid_seed(p, q)) continue;
      const SeedPair seed(p, q);
      IntPolynomial qpq = build_Qpq(seed).poly;
      const IntPolynomial qqp = build_Qpq(seed.swapped()).poly;
      if (inject_corruption) qpq += IntPolynomial::monomial(Integer(1), 2);
      ++s.pairs_checked;
      if (!verify_factorization(seed, Branch::first, qpq) || !verify_factorization(seed, Branch::second, qpq)) {
        s.factorization_failures.emplace_back(p, q);
      }
      if (!verify_reversion(seed, qpq, qqp)) s.reversion_failures.emplace_back(p, q);
    }
  }
  return s;
}

}  // namespace cuboid
