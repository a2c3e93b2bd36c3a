#pragma once

// Verification suites behind `astute verify`.

#include "astute/extremal.hpp"
#include "astute/rules.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace astute::suites {

struct Check {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;
};

inline constexpr std::uint64_t kCustomRuleSeed = 0x5eed'a57u;
inline constexpr std::size_t kCustomRulesPerShape = 5;

/// Rules of the counting lattice: for b in {2,3} and n <= 4 the pure and
/// incremented cycling registers plus kCustomRulesPerShape sampled affine
/// rules, then the xor register for b = 2, n <= 5. Counts use every k <= 6.
std::vector<SuccessionRule> counting_rules();
inline constexpr std::uint32_t kLatticeMaxK = 6;

struct Instance {
  std::uint32_t b, n, k;
};
/// The (b, n, k) triples on which extremality is checked by search.
const std::vector<Instance>& theorem1_instances();

std::vector<Check> lemmas(const SearchBudget& budget);
std::vector<Check> theorem1(const SearchBudget& budget);
std::vector<Check> counterexample(const SearchBudget& budget);

/// "lemmas", "theorem1", "counterexample" or "all".
std::vector<Check> run_suite(std::string_view suite, const SearchBudget& budget);

}  // namespace astute::suites
