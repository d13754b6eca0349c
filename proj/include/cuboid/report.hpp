#pragma once

#include <json.hpp>

#include "cuboid/asymptotics.hpp"
#include "cuboid/charpoly.hpp"
#include "cuboid/cuboid_filter.hpp"
#include "cuboid/rootcert.hpp"
#include "cuboid/search.hpp"

// Structured reports shared by the CLI and the Python module. Exact values
// are strings ("num/den", or "a+b*sqrt2" on the imaginary axis); doubles are
// approximations for reading only.
namespace cuboid::report {

using Json = nlohmann::ordered_json;

std::string exact(const QuadRational& x);

Json seed_json(const SeedPair& seed);
Json interval_json(const AsymptoticInterval& interval);
Json root_json(const IsolatedRoot& root);

Json identities(const IdentitySummary& summary, const Integer& p_max, const Integer& q_max);
Json intervals(const SeedPair& seed);
Json regions(const SeedPair& seed);

struct Verdict {
  Json body;
  bool ok = false;
};

// Roots plus containment and correspondence; ok when everything holds.
Verdict certify(const SeedPair& seed, const Rational& width);
// Sign change and residual bound per shifted equation; ok when every sign
// change holds.
Verdict sign_checks(const SeedPair& seed, unsigned samples = 64);

Json search_summary(const SearchSummary& summary, const SearchConfig& config);

}  // namespace cuboid::report
