// Command-line front end. Reports go to stdout as JSON, diagnostics to stderr.
//
// Exit codes: 0 success, 1 verification failure, 2 hypothesis not met or
// usage error, 3 checkpoint mismatch, 4 I/O failure.

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "cuboid/errors.hpp"
#include "cuboid/report.hpp"

namespace {

using cuboid::report::Json;

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;
constexpr int kCheckpointMismatch = 3;
constexpr int kIoFailure = 4;

void emit(const Json& j) { std::cout << j.dump(2) << '\n'; }

cuboid::SeedPair seed_from(const std::string& p, const std::string& q) {
  return cuboid::SeedPair(cuboid::parse_integer(p), cuboid::parse_integer(q));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cuboid characteristic polynomial toolkit"};
  app.require_subcommand(1);

  std::string p_text, q_text, p_max_text, q_max_text;
  std::string width_text = "1/1048576";
  unsigned workers = 1;
  unsigned samples = 64;
  std::string resume_path, report_path;
  bool inject_corruption = false;
  std::optional<unsigned> stop_after_rows;

  auto add_seed = [&](CLI::App* sub) {
    sub->add_option("--p", p_text, "seed p")->required();
    sub->add_option("--q", q_text, "seed q")->required();
  };

  auto* identities = app.add_subcommand("identities", "Check the factorization and reversion identities");
  identities->add_option("--p-max", p_max_text)->required();
  identities->add_option("--q-max", q_max_text)->required();
  identities->add_flag("--inject-corruption", inject_corruption, "test hook: perturb every Q_pq");

  auto* intervals = app.add_subcommand("intervals", "Print the asymptotic intervals of a seed");
  add_seed(intervals);

  auto* certify = app.add_subcommand("certify", "Isolate and certify the five roots");
  add_seed(certify);
  certify->add_option("--width", width_text, "target width NUM/DEN");

  auto* sign_checks = app.add_subcommand("sign-checks", "Sign changes and residual bounds of the shifted equations");
  add_seed(sign_checks);
  sign_checks->add_option("--samples", samples, "points per c-range for the residual scan");

  auto* regions = app.add_subcommand("regions", "Classify a seed");
  add_seed(regions);

  auto* search = app.add_subcommand("search", "Checkpointed integer-root sieve");
  search->add_option("--q-max", q_max_text)->required();
  search->add_option("--p-max", p_max_text)->required();
  search->add_option("--width", width_text, "root isolation width NUM/DEN");
  search->add_option("--workers", workers)->check(CLI::PositiveNumber);
  search->add_option("--resume", resume_path, "checkpoint file");
  search->add_option("--report", report_path, "line-delimited report file")->required();
  search->add_option("--stop-after-rows", stop_after_rows, "test hook: stop after N rows");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*identities) {
      const auto p_max = cuboid::parse_integer(p_max_text);
      const auto q_max = cuboid::parse_integer(q_max_text);
      if (p_max < 1 || q_max < 1) throw std::invalid_argument("bounds must be positive");
      const auto summary = cuboid::run_identities(p_max, q_max, inject_corruption);
      emit(cuboid::report::identities(summary, p_max, q_max));
      return summary.ok() ? kOk : kVerificationFailed;
    }
    if (*intervals) {
      emit(cuboid::report::intervals(seed_from(p_text, q_text)));
      return kOk;
    }
    if (*regions) {
      emit(cuboid::report::regions(seed_from(p_text, q_text)));
      return kOk;
    }
    if (*certify) {
      const auto width = cuboid::parse_rational(width_text);
      if (!(width > 0)) throw std::invalid_argument("width must be positive");
      const auto verdict = cuboid::report::certify(seed_from(p_text, q_text), width);
      emit(verdict.body);
      return verdict.ok ? kOk : kVerificationFailed;
    }
    if (*sign_checks) {
      const auto seed = seed_from(p_text, q_text);
      if (!seed.large_p()) throw cuboid::HypothesisNotMet("sign checks need p >= 59 q");
      const auto verdict = cuboid::report::sign_checks(seed, samples);
      emit(verdict.body);
      return verdict.ok ? kOk : kVerificationFailed;
    }
    if (*search) {
      cuboid::SearchConfig config;
      config.q_max = cuboid::parse_integer(q_max_text);
      config.p_max = cuboid::parse_integer(p_max_text);
      config.width = cuboid::parse_rational(width_text);
      config.workers = workers;
      if (!resume_path.empty()) config.resume_path = resume_path;
      config.report_path = report_path;
      const auto summary = cuboid::run_search(config, cuboid::SearchControl{stop_after_rows});
      if (summary.candidates_found > 0) {
        std::cerr << "*** integer roots of Q_pq found: see " << report_path << " ***\n";
      }
      emit(cuboid::report::search_summary(summary, config));
      return kOk;
    }
  } catch (const cuboid::CheckpointMismatch& e) {
    std::cerr << "checkpoint mismatch: " << e.what() << '\n';
    return kCheckpointMismatch;
  } catch (const cuboid::HypothesisNotMet& e) {
    std::cerr << "hypothesis not met: " << e.what() << '\n';
    return kUsage;
  } catch (const cuboid::InvalidSeed& e) {
    std::cerr << "invalid seed: " << e.what() << '\n';
    return kUsage;
  } catch (const cuboid::ContainmentFailure& e) {
    std::cerr << "certification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return kUsage;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "i/o: " << e.what() << '\n';
    return kIoFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIoFailure;
  }
  return kUsage;
}
