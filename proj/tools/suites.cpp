#include "suites.hpp"

#include "astute/algebra.hpp"
#include "astute/counting.hpp"
#include "astute/error.hpp"
#include "astute/spectral.hpp"

#include <numeric>
#include <random>
#include <sstream>

namespace astute::suites {

namespace {

// Counts cases and keeps the first failure for the report.
class Tally {
 public:
  Tally(std::string suite, std::string name) : check_{std::move(suite), std::move(name), true, {}} {}

  void expect(bool ok, const std::string& what) {
    ++cases_;
    if (!ok && check_.pass) {
      check_.pass = false;
      first_ = what;
    }
    failures_ += !ok;
  }

  Check done() {
    std::ostringstream os;
    if (check_.pass) os << cases_ << " cases";
    else os << failures_ << " of " << cases_ << " cases fail, first: " << first_;
    check_.detail = os.str();
    return check_;
  }

 private:
  Check check_;
  std::uint64_t cases_ = 0, failures_ = 0;
  std::string first_;
};

std::string describe(const SuccessionRule& r) {
  return r.spec() + " b=" + std::to_string(r.affine.b()) + " n=" + std::to_string(r.affine.n());
}

std::string describe(const GraphParams& p) {
  return "b=" + std::to_string(p.b) + " n=" + std::to_string(p.n) + " k=" + std::to_string(p.k);
}

constexpr std::uint32_t kGcdBases[] = {2, 3, 5};
constexpr std::uint32_t kGcdMax = 12;

Check gcd_u_u() {
  Tally t("lemmas", "gcd(U_n, U_m) = U_gcd(n,m)");
  for (auto b : kGcdBases)
    for (std::uint32_t n = 1; n <= kGcdMax; ++n)
      for (std::uint32_t m = 1; m <= kGcdMax; ++m)
        t.expect(poly_gcd_field(u_poly(n, b), u_poly(m, b)) == u_poly(std::gcd(n, m), b),
                 "b=" + std::to_string(b) + " n=" + std::to_string(n) + " m=" + std::to_string(m));
  return t.done();
}

Check gcd_x_x() {
  Tally t("lemmas", "gcd(X^n - 1, X^m - 1) = X^gcd(n,m) - 1");
  for (auto b : kGcdBases)
    for (std::uint32_t n = 1; n <= kGcdMax; ++n)
      for (std::uint32_t m = 1; m <= kGcdMax; ++m)
        t.expect(poly_gcd_field(x_pow_minus_one(n, b), x_pow_minus_one(m, b)) ==
                     x_pow_minus_one(std::gcd(n, m), b),
                 "b=" + std::to_string(b) + " n=" + std::to_string(n) + " m=" + std::to_string(m));
  return t.done();
}

Check gcd_u_x() {
  Tally t("lemmas", "gcd(U_n, X^m - 1) = X^g - 1 if b | n/g else U_g");
  for (auto b : kGcdBases)
    for (std::uint32_t n = 1; n <= kGcdMax; ++n)
      for (std::uint32_t m = 1; m <= kGcdMax; ++m) {
        const std::uint32_t g = std::gcd(n, m);
        const ModPoly expected = (n / g) % b == 0 ? x_pow_minus_one(g, b) : u_poly(g, b);
        t.expect(poly_gcd_field(u_poly(n, b), x_pow_minus_one(m, b)) == expected,
                 "b=" + std::to_string(b) + " n=" + std::to_string(n) + " m=" + std::to_string(m));
      }
  return t.done();
}

Check fixed_points(const std::vector<SuccessionRule>& rules) {
  Tally t("lemmas", "|Fix(sigma^i)| = [l | i] * |Z_b[X]/(lambda, X^gcd(i,omega) - 1)|");
  for (const auto& r : rules) {
    const ModPoly lambda = r.affine.characteristic_polynomial();
    const std::uint64_t omega = order_of_x(lambda);
    const std::uint64_t ell = smallest_cycle_length(lambda, r.affine.constant(), 1);
    for (std::uint64_t i = 0; i <= 24; ++i) {
      const BigInt expected =
          i % ell == 0 ? ideal_quotient_size(lambda, std::gcd(i, omega)) : BigInt(0);
      t.expect(BigInt(fix_count_bruteforce(r.affine, i)) == expected,
               describe(r) + " i=" + std::to_string(i));
    }
  }
  return t.done();
}

Check count_agreement(const std::vector<SuccessionRule>& rules) {
  Tally t("lemmas", "enumeration = burnside = ideal formula = closed form");
  for (const auto& r : rules)
    for (std::uint32_t k = 1; k <= kLatticeMaxK; ++k) {
      const auto e = count_enumeration(r, k).value;
      const auto bd = count_burnside_direct(r, k).value;
      const auto th = count_theorem2(r, k).value;
      const auto cf = closed_form_for(r, k);
      const bool ok = e == bd && e == th && (!cf || cf->value == e);
      t.expect(ok, describe(r) + " k=" + std::to_string(k) + ": " + std::to_string(e) + "/" +
                       std::to_string(bd) + "/" + std::to_string(th) + "/" +
                       (cf ? std::to_string(cf->value) : std::string("-")));
    }
  return t.done();
}

Check omega_multiples(const std::vector<SuccessionRule>& rules) {
  Tally t("lemmas", "ideal formula unchanged for omega multiples 2, 3, 4");
  for (const auto& r : rules)
    for (std::uint32_t k = 1; k <= kLatticeMaxK; ++k) {
      const auto base = count_theorem2(r, k).value;
      for (std::uint64_t m = 2; m <= 4; ++m)
        t.expect(count_theorem2(r, k, {m}).value == base,
                 describe(r) + " k=" + std::to_string(k) + " m=" + std::to_string(m));
    }
  return t.done();
}

Check rotation_identity() {
  Tally t("lemmas", "C(rotate(s)) = mu^-1 C(s)");
  for (std::uint32_t b = 2; b <= 4; ++b)
    for (std::uint32_t n = 1; n <= 8; ++n) {
      const std::uint64_t words = GraphParams{b, n, 1}.word_count();
      for (std::uint64_t w = 0; w < words; ++w)
        t.expect(rotation_identity_check(unpack_word(w, b, n)), format_word(w, b, n));
    }
  return t.done();
}

Check cycle_sums() {
  Tally t("lemmas", "transforms along any cycle sum to 0 (n >= 2)");
  std::mt19937_64 rng(kCustomRuleSeed);
  for (std::uint32_t b = 2; b <= 3; ++b)
    for (std::uint32_t n = 2; n <= 6; ++n)
      for (std::uint32_t k = 1; k <= 3; ++k) {
        const GraphParams p{b, n, k};
        std::vector<Factor> factors;
        factors.push_back(enumerate_factor(make_pcr(b, n).affine, k));
        factors.push_back(enumerate_factor(make_icr(b, n).affine, k));
        if (b == 2) factors.push_back(enumerate_factor(make_xor(b, n).affine, k));
        for (const auto& r : sample_custom_rules(b, n, 2, kCustomRuleSeed))
          factors.push_back(enumerate_factor(r.affine, k));
        for (int i = 0; i < 5; ++i) factors.push_back(random_factor(p, rng));
        for (const auto& f : factors)
          for (const auto& c : f.cycles)
            t.expect(cycle_sum_check(c, p), describe(p) + " cycle at " + format_vertex(c.front(), p));
      }
  return t.done();
}

Check arc_differences() {
  Tally t("lemmas", "C(s) - C(r^-1(t)) real, zero iff s = r^-1(t)");
  for (std::uint32_t b = 2; b <= 3; ++b)
    for (std::uint32_t n = 1; n <= 6; ++n) {
      const std::uint64_t words = GraphParams{b, n, 1}.word_count();
      for (std::uint64_t w = 0; w < words; ++w)
        for (std::uint32_t x = 0; x < b; ++x) {
          const std::uint64_t next = (w * b) % words + x;
          t.expect(arc_difference(unpack_word(w, b, n), unpack_word(next, b, n)).holds(),
                   format_word(w, b, n) + " -> " + format_word(next, b, n));
        }
    }
  return t.done();
}

Check distinguished_unique() {
  Tally t("lemmas", "one sign crossing per non-real PCR orbit, of length n, when k | n");
  for (std::uint32_t b = 2; b <= 3; ++b)
    for (std::uint32_t n = 1; n <= 6; ++n)
      for (std::uint32_t k = 1; k <= n; ++k) {
        if (n % k != 0) continue;
        const GraphParams p{b, n, k};
        for (const auto& c : enumerate_factor(make_pcr(b, n).affine, k).cycles) {
          std::vector<int> sign(c.size());
          for (std::size_t i = 0; i < c.size(); ++i) sign[i] = imag_sign(unpack_word(c[i].word, b, n));
          std::size_t crossings = 0;
          bool all_real = true;
          for (std::size_t i = 0; i < c.size(); ++i) {
            all_real &= sign[i] == 0;
            crossings += sign[i] < 0 && sign[(i + c.size() - 1) % c.size()] >= 0;
          }
          if (all_real) continue;
          t.expect(crossings == 1 && c.size() == n,
                   describe(p) + " orbit at " + format_vertex(c.front(), p));
        }
      }
  return t.done();
}

}  // namespace

std::vector<SuccessionRule> counting_rules() {
  std::vector<SuccessionRule> rules;
  for (std::uint32_t b = 2; b <= 3; ++b)
    for (std::uint32_t n = 1; n <= 4; ++n) {
      rules.push_back(make_pcr(b, n));
      rules.push_back(make_icr(b, n));
      for (auto& r : sample_custom_rules(b, n, kCustomRulesPerShape, kCustomRuleSeed))
        rules.push_back(std::move(r));
    }
  for (std::uint32_t n = 1; n <= 5; ++n) rules.push_back(make_xor(2, n));
  return rules;
}

const std::vector<Instance>& theorem1_instances() {
  static const std::vector<Instance> list = {
      {2, 1, 1}, {2, 2, 1}, {2, 3, 1}, {2, 4, 1}, {2, 2, 2}, {2, 3, 3}, {2, 1, 2},
      {2, 1, 3}, {2, 2, 4}, {2, 4, 2}, {3, 1, 1}, {3, 2, 1}, {3, 2, 2},
  };
  return list;
}

std::vector<Check> lemmas(const SearchBudget&) {
  const auto rules = counting_rules();
  return {gcd_u_u(),         gcd_x_x(),          gcd_u_x(),           fixed_points(rules),
          count_agreement(rules), omega_multiples(rules), rotation_identity(), cycle_sums(),
          arc_differences(), distinguished_unique()};
}

std::vector<Check> theorem1(const SearchBudget& budget) {
  std::vector<Check> out;
  for (const auto& in : theorem1_instances()) {
    const GraphParams p{in.b, in.n, in.k};
    Check c{"theorem1", "pcr extremal " + describe(p), false, {}};
    try {
      const auto r = verify_theorem1(p, budget);
      const bool valid = static_cast<bool>(validate_factor(r.search.certificate));
      const bool covered = valid && covering_check(r.search.certificate);
      c.pass = r.holds && valid && covered;
      c.detail = "search=" + std::to_string(r.search_count) + " pcr=" + std::to_string(r.pcr_count) +
                 " nodes=" + std::to_string(r.search.nodes_explored) +
                 (valid ? "" : " invalid certificate") + (covered ? "" : " certificate not covered");
    } catch (const Error& e) {
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Check> counterexample(const SearchBudget& budget) {
  const GraphParams p{2, 3, 2};
  std::vector<Check> out;
  const auto pcr = enumerate_factor(make_pcr(2, 3).affine, 2);
  out.push_back({"counterexample", "pcr factor of Gamma(3,2) has 4 cycles", pcr.size() == 4,
                 "pcr=" + std::to_string(pcr.size())});
  Check s{"counterexample", "extremal factor of Gamma(3,2) has 6 cycles", false, {}};
  try {
    const auto r = search_extremal(p, budget);
    const auto v = validate_factor(r.certificate);
    s.pass = r.optimal && r.best_count == 6 && v.ok && r.certificate.size() == 6;
    s.detail = "extremal=" + std::to_string(r.best_count) + (r.optimal ? " optimal" : " not proven") +
               (v.ok ? "" : " invalid certificate: " + v.diagnostic);
  } catch (const Error& e) {
    s.detail = e.what();
  }
  out.push_back(std::move(s));
  return out;
}

std::vector<Check> run_suite(std::string_view suite, const SearchBudget& budget) {
  if (suite == "lemmas") return lemmas(budget);
  if (suite == "theorem1") return theorem1(budget);
  if (suite == "counterexample") return counterexample(budget);
  if (suite == "all") {
    auto out = lemmas(budget);
    for (auto* f : {&theorem1, &counterexample})
      for (auto& c : f(budget)) out.push_back(std::move(c));
    return out;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown suite '" + std::string(suite) + "'");
}

}  // namespace astute::suites
