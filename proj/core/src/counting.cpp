#include "astute/counting.hpp"

#include "astute/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace astute {

namespace {

std::uint64_t exact_quotient(const BigInt& num, const BigInt& den, std::string_view what) {
  if (den == 0 || num % den != 0)
    throw Error(ErrorKind::NonIntegerResult,
                std::string(what) + ": " + num.str() + " / " + den.str() + " is not an integer");
  const BigInt q = num / den;
  if (q < 1 || q > BigInt(std::numeric_limits<std::uint64_t>::max()))
    throw Error(ErrorKind::NonIntegerResult, std::string(what) + ": count out of range");
  return static_cast<std::uint64_t>(q);
}

BigInt power(std::uint64_t base, std::uint64_t exp) {
  return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(exp));
}

CountReport make_report(std::uint64_t value, CountMethod method, std::string rule,
                        std::uint32_t b, std::uint32_t n, std::uint32_t k) {
  CountReport r;
  r.value = value;
  r.method = method;
  r.rule = std::move(rule);
  r.b = b;
  r.n = n;
  r.k = k;
  return r;
}

void require_positive(std::uint32_t n, std::uint32_t k) {
  if (n < 1 || k < 1) throw Error(ErrorKind::InvalidArgument, "n and k must be positive");
}

}  // namespace

std::string_view to_string(CountMethod m) noexcept {
  switch (m) {
    case CountMethod::Enumeration: return "enumeration";
    case CountMethod::BurnsideDirect: return "burnside_direct";
    case CountMethod::Theorem2: return "theorem2";
    case CountMethod::ClosedForm: return "closed_form";
  }
  return "unknown";
}

CountReport count_enumeration(const SuccessionRule& rule, std::uint32_t k) {
  const Factor f = enumerate_factor(rule.affine, k);
  return make_report(f.size(), CountMethod::Enumeration, rule.spec(), rule.b(), rule.n(), k);
}

CountReport count_burnside_direct(const SuccessionRule& rule, std::uint32_t k) {
  require_positive(rule.n(), k);
  const auto lengths = cycle_lengths(rule.affine);
  const std::uint64_t smallest = *std::min_element(lengths.begin(), lengths.end());
  const std::uint64_t omega = order_of_x(rule.affine.characteristic_polynomial());
  const std::uint64_t period = std::lcm(std::lcm(std::uint64_t{k}, smallest), omega);

  BigInt sum = 0;
  for (std::uint64_t i = 0; i < period; i += k) sum += fix_count_bruteforce(rule.affine, i);

  CountReport r = make_report(exact_quotient(sum * k, BigInt(period), "burnside"),
                              CountMethod::BurnsideDirect, rule.spec(), rule.b(), rule.n(), k);
  r.witness = CountWitness{omega, std::lcm(std::uint64_t{k}, smallest), {}};
  return r;
}

CountReport count_theorem2(const ModPoly& lambda, const ModInt& c, std::uint32_t k,
                           Theorem2Options options) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  if (options.omega_multiplier < 1)
    throw Error(ErrorKind::InvalidArgument, "omega multiplier must be positive");
  const std::uint64_t omega = order_of_x(lambda) * options.omega_multiplier;
  const std::uint64_t s = smallest_cycle_length(lambda, c, k);
  const std::uint64_t g = std::gcd(s, omega);

  CountWitness w{omega, s, {}};
  BigInt sum = 0;
  for (std::uint64_t d : divisors(omega)) {
    if (d % g != 0) continue;
    DivisorTerm t{d, euler_phi(omega / d), ideal_quotient_size(lambda, d)};
    sum += t.ideal_size * t.phi;
    w.terms.push_back(std::move(t));
  }
  const BigInt num = sum * k * g;
  const BigInt den = BigInt(s) * omega;

  const std::uint32_t n = lambda.is_zero() ? 0 : static_cast<std::uint32_t>(lambda.degree());
  CountReport r = make_report(exact_quotient(num, den, "theorem2"), CountMethod::Theorem2,
                              "lambda=" + lambda.to_string() + ";c=" + std::to_string(c.value()),
                              lambda.modulus(), n, k);
  r.witness = std::move(w);
  return r;
}

CountReport count_theorem2(const SuccessionRule& rule, std::uint32_t k, Theorem2Options options) {
  CountReport r =
      count_theorem2(rule.affine.characteristic_polynomial(), rule.affine.constant(), k, options);
  r.rule = rule.spec();
  return r;
}

std::uint64_t d_b(std::uint64_t n, std::uint64_t b) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  for (std::uint64_t d : divisors(n))
    if (std::gcd(n / d, b) == 1) return d;
  return n;
}

CountReport closed_form_pcr(std::uint32_t n, std::uint32_t k, std::uint32_t b) {
  require_positive(n, k);
  check_modulus(b);
  const std::uint64_t g = std::gcd(n, k);
  BigInt sum = 0;
  for (std::uint64_t d : divisors(n))
    if (d % g == 0) sum += power(b, d) * euler_phi(n / d);
  return make_report(exact_quotient(sum * g, BigInt(n), "closed_form_pcr"),
                     CountMethod::ClosedForm, "pcr", b, n, k);
}

CountReport closed_form_icr(std::uint32_t n, std::uint32_t k, std::uint32_t b) {
  require_positive(n, k);
  check_modulus(b);
  const std::uint64_t s = std::lcm(std::uint64_t{k}, std::uint64_t{b} * d_b(n, b));
  const std::uint64_t g = std::gcd(s, std::uint64_t{n});
  BigInt sum = 0;
  for (std::uint64_t d : divisors(n))
    if (d % g == 0) sum += power(b, d) * euler_phi(n / d);
  CountReport r = make_report(exact_quotient(sum * k * g, BigInt(s) * n, "closed_form_icr"),
                              CountMethod::ClosedForm, "icr", b, n, k);
  r.witness = CountWitness{n, s, {}};
  return r;
}

CountReport closed_form_xor(std::uint32_t n, std::uint32_t k) {
  require_positive(n, k);
  const std::uint64_t omega = std::uint64_t{n} + 1;
  const std::uint64_t g = std::gcd(std::uint64_t{k}, omega);
  BigInt sum = 0;
  for (std::uint64_t d : divisors(omega)) {
    if (d % g != 0) continue;
    const std::uint64_t exponent = d - 1 + ((omega / d) % 2 == 0 ? 1 : 0);
    sum += power(2, exponent) * euler_phi(omega / d);
  }
  CountReport r = make_report(exact_quotient(sum * g, BigInt(omega), "closed_form_xor"),
                              CountMethod::ClosedForm, "xor", 2, n, k);
  r.witness = CountWitness{omega, k, {}};
  return r;
}

std::optional<CountReport> closed_form_for(const SuccessionRule& rule, std::uint32_t k) {
  switch (rule.kind) {
    case RuleKind::Pcr: return closed_form_pcr(rule.n(), k, rule.b());
    case RuleKind::Icr: return closed_form_icr(rule.n(), k, rule.b());
    case RuleKind::Xor: return closed_form_xor(rule.n(), k);
    case RuleKind::Custom: return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace astute
