#include "astute/rules.hpp"

#include "astute/error.hpp"

#include <charconv>
#include <numeric>
#include <random>
#include <sstream>

namespace astute {

AffineRule::AffineRule(std::uint32_t b, std::vector<std::int64_t> lambdas, std::int64_t c)
    : b_(b), c_(0), inv_last_(0), top_(1) {
  check_modulus(b);
  if (lambdas.size() < 2)
    throw Error(ErrorKind::InvalidArgument, "an affine rule needs lambda_0..lambda_n with n >= 1");
  for (auto l : lambdas) lambdas_.push_back(ModInt(l, b).value());
  c_ = ModInt(c, b).value();
  const ModInt first(lambdas_.front(), b), last(lambdas_.back(), b);
  if (!last.is_unit())
    throw Error(ErrorKind::NotInvertible, "lambda_n must be invertible mod " + std::to_string(b));
  if (!first.is_unit())
    throw Error(ErrorKind::NotInvertible, "lambda_0 must be invertible mod " + std::to_string(b));
  inv_last_ = mod_inverse(last).value();
  for (std::uint32_t i = 1; i < n(); ++i) top_ *= b;
}

ModPoly AffineRule::characteristic_polynomial() const {
  std::vector<std::int64_t> co(lambdas_.size());
  for (std::size_t i = 0; i < lambdas_.size(); ++i) co[n() - i] = lambdas_[i];
  return ModPoly(std::move(co), b_);
}

std::uint64_t AffineRule::apply(std::uint64_t word) const {
  std::uint64_t sum = 0, rest = word;
  // Symbols come out least significant first: a_{n-1}, ..., a_0.
  for (std::uint32_t i = n(); i-- > 0;) {
    sum = (sum + std::uint64_t{lambdas_[i]} * (rest % b_)) % b_;
    rest /= b_;
  }
  const std::uint64_t next = (std::uint64_t{c_} + b_ - sum) % b_ * inv_last_ % b_;
  return (word % top_) * b_ + next;
}

std::vector<Symbol> AffineRule::apply(const std::vector<Symbol>& word) const {
  if (word.size() != n()) throw Error(ErrorKind::InvalidArgument, "word length must equal n");
  return unpack_word(apply(pack_word(word, b_)), b_, n());
}

std::string_view to_string(RuleKind kind) noexcept {
  switch (kind) {
    case RuleKind::Pcr: return "pcr";
    case RuleKind::Icr: return "icr";
    case RuleKind::Xor: return "xor";
    case RuleKind::Custom: return "affine";
  }
  return "affine";
}

std::string SuccessionRule::spec() const {
  if (kind != RuleKind::Custom) return std::string(to_string(kind));
  std::ostringstream os;
  os << "affine:" << affine.constant().value() << ';';
  for (std::size_t i = 0; i < affine.lambdas().size(); ++i)
    os << (i ? "," : "") << affine.lambdas()[i];
  return os.str();
}

SuccessionRule make_pcr(std::uint32_t b, std::uint32_t n) {
  std::vector<std::int64_t> l(n + 1, 0);
  l.front() = 1;
  l.back() = -1;
  return {RuleKind::Pcr, AffineRule(b, std::move(l), 0)};
}

SuccessionRule make_icr(std::uint32_t b, std::uint32_t n) {
  std::vector<std::int64_t> l(n + 1, 0);
  l.front() = 1;
  l.back() = -1;
  return {RuleKind::Icr, AffineRule(b, std::move(l), -1)};
}

SuccessionRule make_xor(std::uint32_t b, std::uint32_t n) {
  if (b != 2) throw Error(ErrorKind::InvalidArgument, "xor requires b=2");
  std::vector<std::int64_t> l(n + 1, 1);
  l.back() = -1;
  return {RuleKind::Xor, AffineRule(b, std::move(l), 0)};
}

SuccessionRule make_custom(AffineRule rule) { return {RuleKind::Custom, std::move(rule)}; }

namespace {

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end || text.empty())
    throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(text) + "'");
  return v;
}

}  // namespace

SuccessionRule parse_rule(std::string_view spec, std::uint32_t b, std::uint32_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  if (spec == "pcr") return make_pcr(b, n);
  if (spec == "icr") return make_icr(b, n);
  if (spec == "xor") return make_xor(b, n);

  constexpr std::string_view prefix = "affine:";
  if (spec.substr(0, prefix.size()) != prefix)
    throw Error(ErrorKind::ParseError,
                "unknown rule '" + std::string(spec) + "' (expected pcr, icr, xor or affine:c;l0,...,ln)");
  spec.remove_prefix(prefix.size());
  const auto semi = spec.find(';');
  if (semi == std::string_view::npos)
    throw Error(ErrorKind::ParseError, "affine rule needs 'c;l0,...,ln'");
  const std::int64_t c = parse_int(spec.substr(0, semi));
  std::vector<std::int64_t> lambdas;
  std::string_view rest = spec.substr(semi + 1);
  for (;;) {
    const auto comma = rest.find(',');
    lambdas.push_back(parse_int(rest.substr(0, comma)));
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  if (lambdas.size() != n + 1)
    throw Error(ErrorKind::ParseError, "affine rule of order " + std::to_string(n) + " needs " +
                                           std::to_string(n + 1) + " coefficients, got " +
                                           std::to_string(lambdas.size()));
  return make_custom(AffineRule(b, std::move(lambdas), c));
}

std::vector<SuccessionRule> sample_custom_rules(std::uint32_t b, std::uint32_t n,
                                                std::size_t count, std::uint64_t seed) {
  check_modulus(b);
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  std::vector<std::int64_t> units;
  for (std::uint32_t u = 1; u < b; ++u)
    if (std::gcd(u, b) == 1) units.push_back(u);
  // mt19937_64 output is fully specified; distributions are not, so reduce by hand.
  std::mt19937_64 rng(seed ^ (std::uint64_t{b} << 32) ^ n);
  std::vector<SuccessionRule> rules;
  rules.reserve(count);
  for (std::size_t r = 0; r < count; ++r) {
    std::vector<std::int64_t> lambdas(n + 1);
    lambdas.front() = units[rng() % units.size()];
    for (std::uint32_t i = 1; i < n; ++i) lambdas[i] = static_cast<std::int64_t>(rng() % b);
    lambdas.back() = units[rng() % units.size()];
    const auto c = static_cast<std::int64_t>(rng() % b);
    rules.push_back(make_custom(AffineRule(b, std::move(lambdas), c)));
  }
  return rules;
}

std::vector<std::uint64_t> rule_table(const AffineRule& rule) {
  const std::uint64_t words = GraphParams{rule.b(), rule.n(), 1}.word_count();
  std::vector<std::uint64_t> table(words);
  for (std::uint64_t w = 0; w < words; ++w) table[w] = rule.apply(w);
  return table;
}

Vertex act(const AffineRule& rule, std::uint32_t k, const Vertex& v) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "k must be positive");
  return {rule.apply(v.word), (v.phase + 1) % k};
}

Factor enumerate_factor(const AffineRule& rule, std::uint32_t k, std::uint64_t max_vertices) {
  const GraphParams p{rule.b(), rule.n(), k};
  const std::uint64_t count = p.vertex_count();
  if (count > max_vertices)
    throw Error(ErrorKind::BudgetExceeded, "b^n * k = " + std::to_string(count) +
                                               " exceeds the enumeration budget");
  const auto table = rule_table(rule);
  std::vector<bool> visited(count, false);
  Factor f{p, {}};
  for (std::uint64_t start = 0; start < count; ++start) {
    if (visited[start]) continue;
    Cycle c;
    Vertex v = vertex_at(start, p);
    while (!visited[vertex_index(v, p)]) {
      visited[vertex_index(v, p)] = true;
      c.push_back(v);
      v = {table[v.word], (v.phase + 1) % k};
    }
    f.cycles.push_back(std::move(c));
  }
  return f;
}

std::uint64_t fix_count_bruteforce(const AffineRule& rule, std::uint64_t i,
                                   std::uint64_t max_words) {
  const std::uint64_t words = GraphParams{rule.b(), rule.n(), 1}.word_count();
  if (words > max_words)
    throw Error(ErrorKind::BudgetExceeded, "b^n exceeds the enumeration budget");
  std::vector<std::uint64_t> power(words), base = rule_table(rule), tmp(words);
  for (std::uint64_t w = 0; w < words; ++w) power[w] = w;
  for (; i != 0; i >>= 1) {
    if (i & 1) {
      for (std::uint64_t w = 0; w < words; ++w) tmp[w] = base[power[w]];
      power.swap(tmp);
    }
    for (std::uint64_t w = 0; w < words; ++w) tmp[w] = base[base[w]];
    base.swap(tmp);
  }
  std::uint64_t fixed = 0;
  for (std::uint64_t w = 0; w < words; ++w) fixed += power[w] == w;
  return fixed;
}

std::vector<std::uint64_t> cycle_lengths(const AffineRule& rule, std::uint64_t max_words) {
  const std::uint64_t words = GraphParams{rule.b(), rule.n(), 1}.word_count();
  if (words > max_words)
    throw Error(ErrorKind::BudgetExceeded, "b^n exceeds the enumeration budget");
  const auto table = rule_table(rule);
  std::vector<bool> visited(words, false);
  std::vector<std::uint64_t> lengths;
  for (std::uint64_t w = 0; w < words; ++w) {
    if (visited[w]) continue;
    std::uint64_t len = 0;
    for (std::uint64_t v = w; !visited[v]; v = table[v]) {
      visited[v] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return lengths;
}

}  // namespace astute
