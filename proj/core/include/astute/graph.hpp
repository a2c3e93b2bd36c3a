#pragma once

// The astute graph: de Bruijn graph of order n tensored with a directed k-cycle.
// Adjacency is computed on demand; the graph is never stored as an arc list.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace astute {

using Symbol = std::uint32_t;

/// Words are packed as base-b integers with symbol 0 in the most significant
/// digit, so the left shift of the graph is plain arithmetic.
struct GraphParams {
  std::uint32_t b = 2;
  std::uint32_t n = 1;
  std::uint32_t k = 1;

  /// Throws InvalidArgument for b < 2, n < 1, k < 1, or b^n * k >= 2^40.
  void validate() const;
  std::uint64_t word_count() const;    // b^n
  std::uint64_t vertex_count() const;  // b^n * k

  bool operator==(const GraphParams&) const = default;
};

struct Vertex {
  std::uint64_t word = 0;
  std::uint32_t phase = 0;

  bool operator==(const Vertex&) const = default;
  auto operator<=>(const Vertex&) const = default;
};

/// Dense index word * k + phase; orders vertices by (word, phase).
inline std::uint64_t vertex_index(const Vertex& v, const GraphParams& p) {
  return v.word * p.k + v.phase;
}
inline Vertex vertex_at(std::uint64_t index, const GraphParams& p) {
  return {index / p.k, static_cast<std::uint32_t>(index % p.k)};
}

bool is_valid_vertex(const Vertex& v, const GraphParams& p);

std::vector<Symbol> unpack_word(std::uint64_t word, std::uint32_t b, std::uint32_t n);
std::uint64_t pack_word(const std::vector<Symbol>& symbols, std::uint32_t b);

/// Symbols render as 0-9 then a-z, so text forms need b <= 36.
std::string format_word(std::uint64_t word, std::uint32_t b, std::uint32_t n);
std::uint64_t parse_word(std::string_view text, std::uint32_t b, std::uint32_t n);
std::string format_vertex(const Vertex& v, const GraphParams& p);  // "word@phase"

std::vector<Vertex> successors(const Vertex& v, const GraphParams& p);
std::vector<Vertex> predecessors(const Vertex& v, const GraphParams& p);
bool is_arc(const Vertex& u, const Vertex& v, const GraphParams& p);

using Cycle = std::vector<Vertex>;

struct Factor {
  GraphParams params;
  std::vector<Cycle> cycles;

  std::size_t size() const noexcept { return cycles.size(); }
};

struct Validation {
  bool ok = true;
  std::string diagnostic;

  explicit operator bool() const noexcept { return ok; }
};

/// Checks arcs, disjointness and total coverage; the diagnostic names the
/// first violation ("broken arc", "repeated vertex", "uncovered vertex", ...).
Validation validate_factor(const Factor& f);

/// Successor of every vertex index under the factor, or empty if the factor
/// does not describe a permutation of the vertex set.
std::vector<std::uint64_t> successor_map(const Factor& f);

}  // namespace astute
