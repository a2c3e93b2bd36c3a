#pragma once

// Cycle counts of rule-generated factors: direct orbit enumeration, Burnside
// averaging of brute-force fixed points, the ideal-quotient formula, and the
// closed forms for the pure, incremented and xor cycling registers.

#include "astute/algebra.hpp"
#include "astute/rules.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace astute {

enum class CountMethod { Enumeration, BurnsideDirect, Theorem2, ClosedForm };

std::string_view to_string(CountMethod m) noexcept;

struct DivisorTerm {
  std::uint64_t d = 0;
  std::uint64_t phi = 0;  // euler_phi(omega / d)
  BigInt ideal_size;      // |Z/bZ[X] / (lambda, X^d - 1)|
};

struct CountWitness {
  std::uint64_t omega = 0;  // multiple of the order of X mod lambda actually used
  std::uint64_t s = 0;      // smallest cycle length of the factor
  std::vector<DivisorTerm> terms;
};

struct CountReport {
  std::uint64_t value = 0;
  CountMethod method = CountMethod::Enumeration;
  std::string rule;  // rule spec, or a description for closed forms
  std::uint32_t b = 0;
  std::uint32_t n = 0;
  std::uint32_t k = 0;
  std::optional<CountWitness> witness;
};

CountReport count_enumeration(const SuccessionRule& rule, std::uint32_t k);

/// (k / M) * sum_{i<M, k|i} |Fix(sigma^i)| with M = lcm(k, l_sigma, omega);
/// l_sigma is the smallest cycle length found from brute-force fixed points.
CountReport count_burnside_direct(const SuccessionRule& rule, std::uint32_t k);

struct Theorem2Options {
  /// Evaluate with omega replaced by this multiple of the order of X.
  std::uint64_t omega_multiplier = 1;
};

/// k gcd(s,w) / (s w) * sum_{gcd(s,w) | d | w} phi(w/d) |Z/bZ[X]/(lambda, X^d - 1)|.
CountReport count_theorem2(const ModPoly& lambda, const ModInt& c, std::uint32_t k,
                           Theorem2Options options = {});
CountReport count_theorem2(const SuccessionRule& rule, std::uint32_t k,
                           Theorem2Options options = {});

/// Smallest divisor d of n such that n / d is coprime with b.
std::uint64_t d_b(std::uint64_t n, std::uint64_t b);

CountReport closed_form_pcr(std::uint32_t n, std::uint32_t k, std::uint32_t b);
CountReport closed_form_icr(std::uint32_t n, std::uint32_t k, std::uint32_t b);
/// Binary xor register with omega = n + 1:
/// gcd(k,w)/w * sum_{gcd(k,w) | d | w} phi(w/d) 2^{d - 1 + [2 | w/d]}.
/// For k = 1 this is k/(2(n+1)) * sum_{d | n+1} phi(2d) 2^{(n+1)/d}.
CountReport closed_form_xor(std::uint32_t n, std::uint32_t k);

/// The closed form matching the rule's kind, if there is one.
std::optional<CountReport> closed_form_for(const SuccessionRule& rule, std::uint32_t k);

}  // namespace astute
