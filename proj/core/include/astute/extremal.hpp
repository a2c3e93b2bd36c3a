#pragma once

// Exact search for factors of Gamma(n, k) with the most cycles.

#include "astute/graph.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>

namespace astute {

struct SearchBudget {
  std::uint64_t max_vertices = 32;
  std::uint64_t max_nodes = 100'000'000;
  std::optional<double> time_cap_seconds;
  /// Parallel workers sharing the incumbent bound. The certificate is
  /// deterministic only with a single worker.
  unsigned workers = 1;
};

struct SearchResult {
  std::uint64_t best_count = 0;
  Factor certificate;
  bool optimal = false;
  std::uint64_t nodes_explored = 0;
};

/// Branch and bound over successor assignments. Vertices are assigned in
/// ascending index order, successors in ascending appended-symbol order; the
/// pure cycling register factor is the initial incumbent, so a certificate is
/// replaced only by a strictly larger factor. If the node or time cap is hit
/// the best factor so far comes back with optimal = false.
/// Throws BudgetExceeded if b^n * k > budget.max_vertices.
SearchResult search_extremal(const GraphParams& p, const SearchBudget& budget = {});

struct Theorem1Report {
  bool holds = false;
  std::uint64_t search_count = 0;
  std::uint64_t pcr_count = 0;
  SearchResult search;
};

/// Compares the exact optimum with the pure cycling register count.
/// Throws PreconditionViolated unless k | n or n | k, and Inconclusive when
/// the search could not finish within budget.
Theorem1Report verify_theorem1(const GraphParams& p, const SearchBudget& budget = {});

inline constexpr std::uint64_t kExhaustiveVertexLimit = 20;

/// Calls `visit` with every factor of Gamma(n, k) in a fixed order until it
/// returns false. Returns the number of factors visited.
/// Throws BudgetExceeded when b^n * k > kExhaustiveVertexLimit.
std::uint64_t exhaustive_factors(const GraphParams& p,
                                 const std::function<bool(const Factor&)>& visit);

/// A uniformly random factor: vertices sharing their last n-1 symbols and
/// phase have the same b successors, and each such block gets a random
/// bijection onto them.
Factor random_factor(const GraphParams& p, std::mt19937_64& rng);

/// Builds the factor of a successor permutation given on vertex indices.
Factor factor_from_successors(const GraphParams& p, const std::vector<std::uint64_t>& next);

}  // namespace astute
