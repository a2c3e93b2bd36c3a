#include "doctest.h"
#include "oracles.hpp"

#include "astute/error.hpp"
#include "astute/extremal.hpp"
#include "astute/graph.hpp"
#include "astute/rules.hpp"

#include <algorithm>

using namespace astute;

namespace {

Vertex vx(const char* word, std::uint32_t phase, const GraphParams& p) {
  return {parse_word(word, p.b, p.n), phase};
}

bool has(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("params") {
    CHECK(GraphParams{3, 2, 4}.word_count() == 9);
    CHECK(GraphParams{3, 2, 4}.vertex_count() == 36);
    CHECK_THROWS_AS(GraphParams({1, 2, 1}).validate(), Error);
    CHECK_THROWS_AS(GraphParams({2, 0, 1}).validate(), Error);
    CHECK_THROWS_AS(GraphParams({2, 1, 0}).validate(), Error);
    CHECK_THROWS_AS(GraphParams({2, 40, 1}).validate(), Error);
    CHECK_NOTHROW(GraphParams({2, 20, 4}).validate());
  }

  TEST_CASE("word packing puts symbol 0 first") {
    CHECK(pack_word({0, 1, 1}, 2) == 3);
    CHECK(unpack_word(6, 2, 3) == std::vector<Symbol>{1, 1, 0});
    CHECK(format_word(5, 3, 2) == "12");
    CHECK(parse_word("12", 3, 2) == 5);
    CHECK(format_word(35, 36, 1) == "z");
    CHECK_THROWS_AS(parse_word("2", 2, 1), Error);
    CHECK_THROWS_AS(parse_word("01", 2, 3), Error);
    CHECK_THROWS_AS(format_word(0, 37, 1), Error);
    CHECK(format_vertex({5, 2}, {3, 2, 3}) == "12@2");
    for (std::uint64_t w = 0; w < 81; ++w) CHECK(pack_word(unpack_word(w, 3, 4), 3) == w);
  }

  TEST_CASE("vertex index is word-major") {
    const GraphParams p{2, 3, 2};
    CHECK(vertex_index({3, 1}, p) == 7);
    CHECK(vertex_at(7, p) == Vertex{3, 1});
    CHECK(is_valid_vertex({7, 1}, p));
    CHECK_FALSE(is_valid_vertex({8, 0}, p));
    CHECK_FALSE(is_valid_vertex({0, 2}, p));
  }

  TEST_CASE("successors") {
    const GraphParams a{2, 3, 2};
    CHECK(successors(vx("010", 0, a), a) == std::vector<Vertex>{vx("100", 1, a), vx("101", 1, a)});
    const GraphParams c{2, 1, 1};
    CHECK(successors(vx("0", 0, c), c) == std::vector<Vertex>{vx("0", 0, c), vx("1", 0, c)});
    const GraphParams d{3, 2, 3};
    CHECK(successors(vx("12", 2, d), d) ==
          std::vector<Vertex>{vx("20", 0, d), vx("21", 0, d), vx("22", 0, d)});
  }

  TEST_CASE("is_arc") {
    const GraphParams p{2, 3, 2};
    CHECK(is_arc(vx("010", 0, p), vx("100", 1, p), p));
    CHECK_FALSE(is_arc(vx("010", 0, p), vx("100", 0, p), p));
    CHECK_FALSE(is_arc(vx("010", 0, p), vx("001", 1, p), p));
  }

  TEST_CASE("every vertex has b successors and b predecessors") {
    for (const GraphParams p : {GraphParams{2, 3, 2}, GraphParams{3, 2, 3}, GraphParams{4, 2, 1}}) {
      std::vector<std::size_t> indeg(p.vertex_count(), 0);
      for (std::uint64_t i = 0; i < p.vertex_count(); ++i) {
        const Vertex v = vertex_at(i, p);
        const auto out = successors(v, p);
        const auto in = predecessors(v, p);
        CHECK(out.size() == p.b);
        CHECK(in.size() == p.b);
        for (const auto& u : out) {
          ++indeg[vertex_index(u, p)];
          const auto back = predecessors(u, p);
          CHECK(std::find(back.begin(), back.end(), v) != back.end());
        }
      }
      CHECK(std::all_of(indeg.begin(), indeg.end(), [&](std::size_t d) { return d == p.b; }));
    }
  }

  TEST_CASE("k = 1 gives the de Bruijn graph") {
    for (std::uint32_t b = 2; b <= 4; ++b)
      for (std::uint32_t n = 1; oracle::ipow(b, n) <= 256; ++n) {
        const GraphParams p{b, n, 1};
        std::set<std::pair<std::string, std::string>> arcs;
        for (std::uint64_t w = 0; w < p.word_count(); ++w)
          for (const auto& u : successors({w, 0}, p))
            arcs.insert({format_word(w, b, n), format_word(u.word, b, n)});
        CHECK(arcs == oracle::de_bruijn_arcs(b, n));
      }
  }

  TEST_CASE("validate_factor") {
    const GraphParams p{2, 3, 2};
    const Factor pcr = enumerate_factor(make_pcr(2, 3).affine, 2);
    CHECK(pcr.size() == 4);
    CHECK(validate_factor(pcr));

    Factor missing = pcr;
    missing.cycles.pop_back();
    auto v = validate_factor(missing);
    CHECK_FALSE(v);
    CHECK(has(v.diagnostic, "uncovered vertex"));

    Factor broken = pcr;
    std::swap(broken.cycles[1][0], broken.cycles[1][1]);
    v = validate_factor(broken);
    CHECK_FALSE(v);
    CHECK(has(v.diagnostic, "broken arc"));

    Factor repeated = pcr;
    repeated.cycles.push_back(pcr.cycles.front());
    v = validate_factor(repeated);
    CHECK_FALSE(v);
    CHECK(has(v.diagnostic, "repeated vertex"));

    Factor empty = pcr;
    empty.cycles.push_back({});
    CHECK(has(validate_factor(empty).diagnostic, "empty cycle"));

    Factor invalid = pcr;
    invalid.cycles[0][0].phase = 5;
    CHECK(has(validate_factor(invalid).diagnostic, "invalid vertex"));

    CHECK(successor_map(broken).empty());
    const auto next = successor_map(pcr);
    REQUIRE(next.size() == p.vertex_count());
    CHECK(next[vertex_index(vx("000", 0, p), p)] == vertex_index(vx("000", 1, p), p));
  }

  TEST_CASE("cycles of any factor have length divisible by k") {
    std::mt19937_64 rng(41);
    for (const GraphParams p : {GraphParams{2, 3, 2}, GraphParams{2, 2, 3}, GraphParams{3, 2, 4}})
      for (int t = 0; t < 30; ++t) {
        const Factor f = random_factor(p, rng);
        REQUIRE(validate_factor(f));
        for (const auto& c : f.cycles) CHECK(c.size() % p.k == 0);
      }
  }
}
