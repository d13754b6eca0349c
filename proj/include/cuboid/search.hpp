#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cuboid/charpoly.hpp"
#include "cuboid/cuboid_filter.hpp"
#include "cuboid/exact.hpp"
#include "cuboid/polynomial.hpp"

namespace cuboid {

// --- divisor sieve -----------------------------------------------------------

struct PrimePower {
  Integer prime;
  unsigned exponent = 0;
};

// Trial-division factorization of n > 0, primes ascending.
std::vector<PrimePower> factorize(const Integer& n);

// Positive divisors of prod prime^exponent not exceeding bound, ascending.
std::vector<Integer> divisors_up_to(const std::vector<PrimePower>& factorization, const Integer& bound);

struct SieveResult {
  std::vector<Integer> tested;
  std::vector<Integer> roots;
};

// Evaluates poly at every positive divisor of the factored constant up to
// bound. For a monic integer polynomial whose constant term has the given
// factorization this finds every positive integer root <= bound.
SieveResult divisor_sieve(const IntPolynomial& poly, const std::vector<PrimePower>& constant_factorization,
                          const Integer& bound);

// --- per-seed search ---------------------------------------------------------

struct FoundRoot {
  Integer t;
  bool admissible = false;
  bool upper_bound = false;
  // Present for admissible roots only, one per branch.
  std::vector<CuboidReconstruction> reconstructions;
};

struct SearchRecord {
  SeedPair seed;
  RegionClass region = RegionClass::linear;
  std::vector<std::string> checks_passed;
  std::vector<Integer> integer_points_tested;
  std::vector<FoundRoot> candidates_found;
  double elapsed_ms = 0.0;
};

SearchRecord search_seed(const SeedPair& seed, const Rational& width);

// One line of the report: fields in declaration order, rationals as "num/den",
// integers as decimal strings.
std::string to_report_line(const SearchRecord& record);

// --- checkpointed batch ------------------------------------------------------

struct SearchConfig {
  Integer q_max{1};
  Integer p_max{1};
  Rational width{1, 1048576};
  unsigned workers = 1;
  std::optional<std::string> resume_path;
  std::string report_path;
};

// Digest of the fields that determine the report contents (bounds, width).
std::string config_hash(const SearchConfig& config);

struct Checkpoint {
  // (q, p) of the last record of the last completed row.
  std::pair<Integer, Integer> last_completed;
  std::string config_hash;
};

std::string to_json(const Checkpoint& checkpoint);
Checkpoint parse_checkpoint(const std::string& json_text);

struct SearchControl {
  // Stop after this many rows have been written in this invocation, leaving
  // the checkpoint behind as if the process had been killed there.
  std::optional<unsigned> stop_after_rows;
};

struct SearchSummary {
  unsigned rows_written = 0;
  unsigned long records_written = 0;
  unsigned long candidates_found = 0;
  bool resumed = false;
  bool complete = false;
};

// Runs rows q = 1..q_max (p = 1..p_max within each row) in (q, p) order.
// Rows may run concurrently; records are flushed in order and a checkpoint
// is written after every completed row. Throws CheckpointMismatch when the
// checkpoint at resume_path belongs to a different configuration.
SearchSummary run_search(const SearchConfig& config, const SearchControl& control = {});

// --- identity batch ----------------------------------------------------------

struct IdentitySummary {
  unsigned long pairs_checked = 0;
  std::vector<std::pair<Integer, Integer>> factorization_failures;
  std::vector<std::pair<Integer, Integer>> reversion_failures;

  bool ok() const { return factorization_failures.empty() && reversion_failures.empty(); }
};

// Every valid seed with 1 <= p <= p_max, 1 <= q <= q_max. With
// inject_corruption the t^2 coefficient of each Q_pq is bumped by one before
// checking, which must make every check fail.
IdentitySummary run_identities(const Integer& p_max, const Integer& q_max, bool inject_corruption = false);

}  // namespace cuboid
