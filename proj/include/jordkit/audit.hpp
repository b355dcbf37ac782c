#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "jordkit/heisenberg.hpp"

// Seeded audit suites over the library's quantitative claims. Each suite
// counts checks and violations; the first few failures are kept verbatim.
namespace jordkit::audit {

struct Report {
  std::string suite;
  std::uint64_t seed = 0;
  std::int64_t trials = 0;
  std::int64_t checked = 0;
  std::int64_t violations = 0;
  std::vector<std::string> failures;
  // Suite-specific totals, e.g. the largest measured index.
  std::map<std::string, std::int64_t> stats;

  void expect(bool ok, const std::string& what);
};

const std::vector<std::string_view>& suite_names();

// trials <= 0 selects the suite default. Throws InvalidArgument for an
// unknown suite.
Report run_suite(std::string_view name, std::int64_t trials, std::uint64_t seed);

// A spec for H(r) passing validation, coefficients in [-6, 6] and
// |D| c <= max_order.
heis::SubgroupSpec random_valid_spec(std::mt19937_64& rng, std::int64_t r, std::int64_t max_order);

Report heis_subgroups(std::int64_t trials, std::uint64_t seed);
Report heis_quotients(std::int64_t trials, std::uint64_t seed);
Report heis_direct(std::int64_t trials, std::uint64_t seed);
Report semidirect_center(std::int64_t trials, std::uint64_t seed);
Report matrix_root(std::int64_t trials, std::uint64_t seed);
Report quasiunipotent_oracle(std::int64_t trials, std::uint64_t seed);
Report group_axioms(std::int64_t trials, std::uint64_t seed);
Report classification_table(std::int64_t trials, std::uint64_t seed);

}  // namespace jordkit::audit
