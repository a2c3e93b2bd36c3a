#include "astute/graph.hpp"

#include "astute/error.hpp"

#include <limits>

namespace astute {

namespace {

constexpr std::uint64_t kMaxVertices = std::uint64_t{1} << 40;

char symbol_char(Symbol s) { return s < 10 ? static_cast<char>('0' + s) : static_cast<char>('a' + s - 10); }

}  // namespace

void GraphParams::validate() const {
  if (b < 2) throw Error(ErrorKind::InvalidArgument, "b must be >= 2");
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be >= 1");
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "k must be >= 1");
  std::uint64_t v = k;
  for (std::uint32_t i = 0; i < n; ++i) {
    v *= b;
    if (v >= kMaxVertices)
      throw Error(ErrorKind::InvalidArgument, "b^n * k is too large to index");
  }
}

std::uint64_t GraphParams::word_count() const {
  validate();
  std::uint64_t w = 1;
  for (std::uint32_t i = 0; i < n; ++i) w *= b;
  return w;
}

std::uint64_t GraphParams::vertex_count() const { return word_count() * k; }

bool is_valid_vertex(const Vertex& v, const GraphParams& p) {
  return v.phase < p.k && v.word < p.word_count();
}

std::vector<Symbol> unpack_word(std::uint64_t word, std::uint32_t b, std::uint32_t n) {
  std::vector<Symbol> s(n);
  for (std::uint32_t i = n; i-- > 0;) {
    s[i] = static_cast<Symbol>(word % b);
    word /= b;
  }
  return s;
}

std::uint64_t pack_word(const std::vector<Symbol>& symbols, std::uint32_t b) {
  std::uint64_t w = 0;
  for (auto s : symbols) {
    if (s >= b) throw Error(ErrorKind::InvalidArgument, "symbol out of range");
    w = w * b + s;
  }
  return w;
}

std::string format_word(std::uint64_t word, std::uint32_t b, std::uint32_t n) {
  if (b > 36) throw Error(ErrorKind::InvalidArgument, "text form of words needs b <= 36");
  std::string out;
  for (auto s : unpack_word(word, b, n)) out.push_back(symbol_char(s));
  return out;
}

std::uint64_t parse_word(std::string_view text, std::uint32_t b, std::uint32_t n) {
  if (text.size() != n)
    throw Error(ErrorKind::ParseError, "word '" + std::string(text) + "' must have length " +
                                           std::to_string(n));
  std::uint64_t w = 0;
  for (char ch : text) {
    Symbol s = 0;
    if (ch >= '0' && ch <= '9') s = static_cast<Symbol>(ch - '0');
    else if (ch >= 'a' && ch <= 'z') s = static_cast<Symbol>(ch - 'a' + 10);
    else throw Error(ErrorKind::ParseError, "bad symbol in word '" + std::string(text) + "'");
    if (s >= b) throw Error(ErrorKind::ParseError, "symbol out of range in '" + std::string(text) + "'");
    w = w * b + s;
  }
  return w;
}

std::string format_vertex(const Vertex& v, const GraphParams& p) {
  return format_word(v.word, p.b, p.n) + "@" + std::to_string(v.phase);
}

std::vector<Vertex> successors(const Vertex& v, const GraphParams& p) {
  const std::uint64_t words = p.word_count();
  const std::uint64_t base = (v.word * p.b) % words;
  const std::uint32_t phase = (v.phase + 1) % p.k;
  std::vector<Vertex> out;
  out.reserve(p.b);
  for (Symbol x = 0; x < p.b; ++x) out.push_back({base + x, phase});
  return out;
}

std::vector<Vertex> predecessors(const Vertex& v, const GraphParams& p) {
  const std::uint64_t top = p.word_count() / p.b;
  const std::uint32_t phase = (v.phase + p.k - 1) % p.k;
  std::vector<Vertex> out;
  out.reserve(p.b);
  for (Symbol x = 0; x < p.b; ++x) out.push_back({x * top + v.word / p.b, phase});
  return out;
}

bool is_arc(const Vertex& u, const Vertex& v, const GraphParams& p) {
  if (!is_valid_vertex(u, p) || !is_valid_vertex(v, p)) return false;
  return v.phase == (u.phase + 1) % p.k && v.word / p.b == (u.word * p.b) % p.word_count() / p.b;
}

Validation validate_factor(const Factor& f) {
  const GraphParams& p = f.params;
  p.validate();
  std::vector<bool> seen(p.vertex_count(), false);
  for (std::size_t ci = 0; ci < f.cycles.size(); ++ci) {
    const Cycle& c = f.cycles[ci];
    const std::string where = " in cycle " + std::to_string(ci);
    if (c.empty()) return {false, "empty cycle" + where};
    for (std::size_t i = 0; i < c.size(); ++i) {
      const Vertex& v = c[i];
      if (!is_valid_vertex(v, p)) return {false, "invalid vertex" + where};
      const std::uint64_t idx = vertex_index(v, p);
      if (seen[idx]) return {false, "repeated vertex " + format_vertex(v, p) + where};
      seen[idx] = true;
      const Vertex& next = c[(i + 1) % c.size()];
      if (!is_arc(v, next, p))
        return {false, "broken arc " + format_vertex(v, p) + " -> " +
                           (is_valid_vertex(next, p) ? format_vertex(next, p) : "?") + where};
    }
  }
  for (std::uint64_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) return {false, "uncovered vertex " + format_vertex(vertex_at(i, p), p)};
  return {};
}

std::vector<std::uint64_t> successor_map(const Factor& f) {
  if (!validate_factor(f)) return {};
  constexpr auto unset = std::numeric_limits<std::uint64_t>::max();
  std::vector<std::uint64_t> next(f.params.vertex_count(), unset);
  for (const auto& c : f.cycles)
    for (std::size_t i = 0; i < c.size(); ++i)
      next[vertex_index(c[i], f.params)] = vertex_index(c[(i + 1) % c.size()], f.params);
  return next;
}

}  // namespace astute
