#pragma once

// Affine succession rules on Sigma^n (Sigma = Z/bZ) and their action on the
// astute graph.

#include "astute/algebra.hpp"
#include "astute/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace astute {

/// The relation  c = sum_{i=0..n} lambda_i a_i  read as a shift register:
/// a_n = lambda_n^{-1} (c - sum_{i<n} lambda_i a_i). lambda_0 and lambda_n must
/// be units so the rule is a bijection.
class AffineRule {
 public:
  AffineRule(std::uint32_t b, std::vector<std::int64_t> lambdas, std::int64_t c);

  std::uint32_t b() const noexcept { return b_; }
  std::uint32_t n() const noexcept { return static_cast<std::uint32_t>(lambdas_.size() - 1); }
  const std::vector<std::uint32_t>& lambdas() const noexcept { return lambdas_; }
  ModInt constant() const { return ModInt(c_, b_); }

  /// sum_i lambda_i X^{n-i}.
  ModPoly characteristic_polynomial() const;

  std::uint64_t apply(std::uint64_t word) const;
  std::vector<Symbol> apply(const std::vector<Symbol>& word) const;

  bool operator==(const AffineRule&) const = default;

 private:
  std::uint32_t b_;
  std::vector<std::uint32_t> lambdas_;
  std::uint32_t c_;
  std::uint32_t inv_last_;
  std::uint64_t top_;  // b^{n-1}
};

enum class RuleKind { Pcr, Icr, Xor, Custom };

std::string_view to_string(RuleKind kind) noexcept;

struct SuccessionRule {
  RuleKind kind;
  AffineRule affine;

  std::uint32_t b() const noexcept { return affine.b(); }
  std::uint32_t n() const noexcept { return affine.n(); }
  /// Mini-grammar form: pcr, icr, xor or affine:c;l0,...,ln.
  std::string spec() const;
};

/// a_n = a_0.
SuccessionRule make_pcr(std::uint32_t b, std::uint32_t n);
/// a_n = a_0 + 1, stored as lambda = (1, 0, ..., 0, -1), c = -1 so that the
/// characteristic polynomial is exactly X^n - 1.
SuccessionRule make_icr(std::uint32_t b, std::uint32_t n);
/// a_n = a_0 + ... + a_{n-1} over Z/2Z; characteristic polynomial U_{n+1}.
SuccessionRule make_xor(std::uint32_t b, std::uint32_t n);
SuccessionRule make_custom(AffineRule rule);

/// Parses `pcr`, `icr`, `xor` or `affine:c;l0,l1,...,ln` (decimal, reduced mod b).
SuccessionRule parse_rule(std::string_view spec, std::uint32_t b, std::uint32_t n);

/// Deterministic pseudo-random affine rules of order n over Z/bZ (units at
/// both ends, arbitrary middle coefficients and constant). The same seed gives
/// the same rules on every platform.
std::vector<SuccessionRule> sample_custom_rules(std::uint32_t b, std::uint32_t n,
                                                std::size_t count, std::uint64_t seed);

/// Image of every packed word; entry w is apply(w).
std::vector<std::uint64_t> rule_table(const AffineRule& rule);

Vertex act(const AffineRule& rule, std::uint32_t k, const Vertex& v);

/// Default ceiling on b^n * k for enumeration.
inline constexpr std::uint64_t kDefaultEnumerationBudget = std::uint64_t{1} << 26;

/// Orbits of the action on Gamma(n, k); each cycle starts at its smallest
/// vertex and cycles appear in ascending order of that vertex.
Factor enumerate_factor(const AffineRule& rule, std::uint32_t k,
                        std::uint64_t max_vertices = kDefaultEnumerationBudget);

/// |{ s : sigma^i(s) = s }| by exhaustive evaluation of sigma^i.
std::uint64_t fix_count_bruteforce(const AffineRule& rule, std::uint64_t i,
                                   std::uint64_t max_words = kDefaultEnumerationBudget);

/// Lengths of the cycles of sigma on Sigma^n, one entry per cycle.
std::vector<std::uint64_t> cycle_lengths(const AffineRule& rule,
                                         std::uint64_t max_words = kDefaultEnumerationBudget);

}  // namespace astute
