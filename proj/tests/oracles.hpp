#pragma once

// Brute-force reference implementations. They share no code with the library
// beyond plain data types and are only usable on tiny instances.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using Vec = std::vector<std::int64_t>;

inline std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

inline std::uint64_t encode(const Vec& v, std::int64_t b) {
  std::uint64_t x = 0;
  for (auto it = v.rbegin(); it != v.rend(); ++it) x = x * b + static_cast<std::uint64_t>(*it);
  return x;
}

// Subgroup of (Z/bZ)^d generated by the d cyclic shifts of lambda (ascending
// coefficients) folded mod X^d - 1, i.e. the ideal (lambda, X^d - 1).
inline std::set<std::uint64_t> ideal_elements(const Vec& lambda, std::size_t d, std::int64_t b) {
  std::vector<Vec> gens;
  for (std::size_t shift = 0; shift < d; ++shift) {
    Vec g(d, 0);
    for (std::size_t i = 0; i < lambda.size(); ++i)
      g[(i + shift) % d] = (g[(i + shift) % d] + lambda[i] % b + b) % b;
    gens.push_back(g);
  }
  std::set<std::uint64_t> seen{0};
  std::vector<Vec> frontier{Vec(d, 0)};
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const auto& v : frontier)
      for (const auto& g : gens) {
        Vec w(d);
        for (std::size_t i = 0; i < d; ++i) w[i] = (v[i] + g[i]) % b;
        if (seen.insert(encode(w, b)).second) next.push_back(w);
      }
    frontier = std::move(next);
  }
  return seen;
}

inline std::uint64_t ideal_quotient_size(const Vec& lambda, std::size_t d, std::int64_t b) {
  return ipow(b, d) / ideal_elements(lambda, d, b).size();
}

// c * (1 + X + ... + X^{s-1}) in (lambda, X^s - 1).
inline bool contains_cU(const Vec& lambda, std::int64_t c, std::size_t s, std::int64_t b) {
  return ideal_elements(lambda, s, b).count(encode(Vec(s, ((c % b) + b) % b), b)) > 0;
}

inline std::int64_t det(const std::vector<Vec>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  std::int64_t total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Vec> minor;
    for (std::size_t i = 1; i < n; ++i) {
      Vec row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[i][c]);
      minor.push_back(row);
    }
    total += (j % 2 ? -1 : 1) * m[0][j] * det(minor);
  }
  return total;
}

inline void choose(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
                   std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Invariant factors as ratios of determinantal divisors (gcd of all j x j minors).
inline Vec invariant_factors(const std::vector<Vec>& m) {
  const std::size_t r = m.size(), c = m[0].size();
  Vec out;
  std::int64_t prev = 1;
  for (std::size_t j = 1; j <= std::min(r, c); ++j) {
    std::vector<std::vector<std::size_t>> rows, cols;
    std::vector<std::size_t> cur;
    choose(r, j, 0, cur, rows);
    choose(c, j, 0, cur, cols);
    std::int64_t g = 0;
    for (const auto& rs : rows)
      for (const auto& cs : cols) {
        std::vector<Vec> sub;
        for (auto ri : rs) {
          Vec row;
          for (auto ci : cs) row.push_back(m[ri][ci]);
          sub.push_back(row);
        }
        g = std::gcd(g, std::abs(det(sub)));
      }
    if (g == 0) {
      out.resize(std::min(r, c), 0);
      return out;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

// Next word of the rule  c = sum lambda_i a_i  by trying every last symbol.
inline Vec step(const Vec& lambdas, std::int64_t c, std::int64_t b, const Vec& word) {
  const std::size_t n = word.size();
  std::int64_t partial = 0;
  for (std::size_t i = 0; i < n; ++i) partial += lambdas[i] * word[i];
  Vec next(word.begin() + 1, word.end());
  for (std::int64_t x = 0; x < b; ++x)
    if ((((partial + lambdas[n] * x - c) % b) + b) % b == 0) {
      next.push_back(x);
      return next;
    }
  return {};
}

inline std::vector<Vec> all_words(std::int64_t b, std::size_t n) {
  std::vector<Vec> out{Vec{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vec> grown;
    for (const auto& w : out)
      for (std::int64_t x = 0; x < b; ++x) {
        Vec v = w;
        v.push_back(x);
        grown.push_back(v);
      }
    out = std::move(grown);
  }
  return out;
}

// Number of orbits of (word, phase) -> (step(word), phase + 1 mod k).
inline std::uint64_t orbit_count(const Vec& lambdas, std::int64_t c, std::int64_t b, std::size_t n,
                                 std::int64_t k) {
  std::set<std::pair<Vec, std::int64_t>> seen;
  std::uint64_t orbits = 0;
  for (const auto& w : all_words(b, n))
    for (std::int64_t ph = 0; ph < k; ++ph) {
      if (seen.count({w, ph})) continue;
      ++orbits;
      Vec cur = w;
      std::int64_t p = ph;
      while (seen.insert({cur, p}).second) {
        cur = step(lambdas, c, b, cur);
        p = (p + 1) % k;
      }
    }
  return orbits;
}

inline std::uint64_t necklaces(std::int64_t b, std::size_t n) {
  std::set<Vec> reps;
  for (auto w : all_words(b, n)) {
    Vec best = w;
    for (std::size_t r = 0; r < n; ++r) {
      std::rotate(w.begin(), w.begin() + 1, w.end());
      best = std::min(best, w);
    }
    reps.insert(best);
  }
  return reps.size();
}

// Arcs of the de Bruijn graph as (word, word) string pairs, by comparing every pair.
inline std::set<std::pair<std::string, std::string>> de_bruijn_arcs(std::int64_t b, std::size_t n) {
  std::vector<std::string> words;
  for (const auto& w : all_words(b, n)) {
    std::string s;
    for (auto x : w) s.push_back(static_cast<char>('0' + x));
    words.push_back(s);
  }
  std::set<std::pair<std::string, std::string>> arcs;
  for (const auto& s : words)
    for (const auto& t : words)
      if (s.substr(1) == t.substr(0, n - 1)) arcs.insert({s, t});
  return arcs;
}

// Successor choices (one out-arc per vertex) that form a permutation, counted
// by trying all b^V choices. Vertex v = word * k + phase.
inline std::uint64_t permutation_factors(std::uint64_t b, std::uint64_t n, std::uint64_t k) {
  const std::uint64_t words = ipow(b, n), count = words * k;
  std::uint64_t total = 0;
  std::vector<std::uint64_t> choice(count, 0);
  for (;;) {
    std::vector<bool> hit(count, false);
    bool perm = true;
    for (std::uint64_t v = 0; v < count && perm; ++v) {
      const std::uint64_t w = v / k, ph = v % k;
      const std::uint64_t u = ((w * b) % words + choice[v]) * k + (ph + 1) % k;
      perm = !hit[u];
      hit[u] = true;
    }
    total += perm;
    std::uint64_t i = 0;
    while (i < count && ++choice[i] == b) choice[i++] = 0;
    if (i == count) return total;
  }
}

// Largest cycle count over all permutation factors, by the same brute force.
inline std::uint64_t max_cycles(std::uint64_t b, std::uint64_t n, std::uint64_t k) {
  const std::uint64_t words = ipow(b, n), count = words * k;
  std::uint64_t best = 0;
  std::vector<std::uint64_t> choice(count, 0), next(count);
  for (;;) {
    std::vector<bool> hit(count, false);
    bool perm = true;
    for (std::uint64_t v = 0; v < count && perm; ++v) {
      const std::uint64_t w = v / k, ph = v % k;
      next[v] = ((w * b) % words + choice[v]) * k + (ph + 1) % k;
      perm = !hit[next[v]];
      hit[next[v]] = true;
    }
    if (perm) {
      std::vector<bool> seen(count, false);
      std::uint64_t cycles = 0;
      for (std::uint64_t v = 0; v < count; ++v) {
        if (seen[v]) continue;
        ++cycles;
        for (std::uint64_t u = v; !seen[u]; u = next[u]) seen[u] = true;
      }
      best = std::max(best, cycles);
    }
    std::uint64_t i = 0;
    while (i < count && ++choice[i] == b) choice[i++] = 0;
    if (i == count) return best;
  }
}

}  // namespace oracle
