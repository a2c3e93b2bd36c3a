#include "astute/extremal.hpp"

#include "astute/counting.hpp"
#include "astute/error.hpp"
#include "astute/rules.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <thread>

namespace astute {

namespace {

constexpr std::uint64_t kNone = ~std::uint64_t{0};

struct SharedState {
  std::atomic<std::uint64_t> best{0};
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> capped{false};
  std::uint64_t max_nodes = 0;
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

// Partial successor permutation with path bookkeeping so that closing a
// cycle and the number of vertices still outside closed cycles are O(1).
class Searcher {
 public:
  Searcher(const GraphParams& p, SharedState& shared)
      : p_(p),
        words_(p.word_count()),
        count_(p.vertex_count()),
        shared_(shared),
        succ_(count_, kNone),
        has_pred_(count_, false),
        start_of_(count_),
        end_of_(count_),
        length_(count_, 1) {
    for (std::uint64_t v = 0; v < count_; ++v) start_of_[v] = end_of_[v] = v;
  }

  std::uint64_t successor_index(std::uint64_t v, std::uint32_t symbol) const {
    const Vertex x = vertex_at(v, p_);
    return vertex_index({(x.word * p_.b) % words_ + symbol, (x.phase + 1) % p_.k}, p_);
  }

  bool can_assign(std::uint64_t v, std::uint32_t symbol) const {
    return !has_pred_[successor_index(v, symbol)];
  }

  struct Undo {
    std::uint64_t v, u, s, e, old_len;
    bool closed;
  };

  Undo assign(std::uint64_t v, std::uint64_t u) {
    const std::uint64_t s = start_of_[v];
    Undo undo{v, u, s, kNone, length_[s], s == u};
    succ_[v] = u;
    has_pred_[u] = true;
    if (undo.closed) {
      ++cycles_;
      closed_ += length_[s];
    } else {
      const std::uint64_t e = end_of_[u];
      undo.e = e;
      end_of_[s] = e;
      start_of_[e] = s;
      length_[s] += length_[u];
    }
    return undo;
  }

  void revert(const Undo& undo) {
    succ_[undo.v] = kNone;
    has_pred_[undo.u] = false;
    if (undo.closed) {
      --cycles_;
      closed_ -= undo.old_len;
    } else {
      end_of_[undo.s] = undo.v;
      start_of_[undo.e] = undo.u;
      length_[undo.s] = undo.old_len;
    }
  }

  // Local best (count, successor map) found by this searcher.
  std::uint64_t found_count = 0;
  std::vector<std::uint64_t> found_succ;

  void run(std::uint64_t pos) {
    if (shared_.capped.load(std::memory_order_relaxed)) return;
    const std::uint64_t nodes = shared_.nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    if (nodes > shared_.max_nodes) {
      shared_.capped = true;
      return;
    }
    if (shared_.deadline && (nodes & 0x3fff) == 0 &&
        std::chrono::steady_clock::now() > *shared_.deadline) {
      shared_.capped = true;
      return;
    }

    const std::uint64_t best = shared_.best.load(std::memory_order_relaxed);
    const std::uint64_t unassigned = count_ - pos;
    const std::uint64_t open = count_ - closed_;
    if (cycles_ + std::min(unassigned, open / p_.k) <= best) return;

    if (pos == count_) {
      record();
      return;
    }
    for (std::uint32_t x = 0; x < p_.b; ++x) {
      const std::uint64_t u = successor_index(pos, x);
      if (has_pred_[u]) continue;
      const Undo undo = assign(pos, u);
      run(pos + 1);
      revert(undo);
      if (shared_.capped.load(std::memory_order_relaxed)) return;
    }
  }

  std::uint64_t cycles() const { return cycles_; }

 private:
  void record() {
    std::uint64_t best = shared_.best.load();
    while (cycles_ > best && !shared_.best.compare_exchange_weak(best, cycles_)) {
    }
    if (cycles_ > found_count) {
      found_count = cycles_;
      found_succ = succ_;
    }
  }

  GraphParams p_;
  std::uint64_t words_;
  std::uint64_t count_;
  SharedState& shared_;
  std::vector<std::uint64_t> succ_;
  std::vector<bool> has_pred_;
  std::vector<std::uint64_t> start_of_, end_of_, length_;
  std::uint64_t cycles_ = 0;
  std::uint64_t closed_ = 0;
};

// Successor choices (appended symbols) for the first `depth` vertices.
using Prefix = std::vector<std::uint32_t>;

}  // namespace

Factor factor_from_successors(const GraphParams& p, const std::vector<std::uint64_t>& next) {
  const std::uint64_t count = p.vertex_count();
  if (next.size() != count)
    throw Error(ErrorKind::InvalidArgument, "successor map has the wrong size");
  std::vector<bool> visited(count, false);
  Factor f{p, {}};
  for (std::uint64_t start = 0; start < count; ++start) {
    if (visited[start]) continue;
    Cycle c;
    for (std::uint64_t v = start; v < count && !visited[v]; v = next[v]) {
      visited[v] = true;
      c.push_back(vertex_at(v, p));
    }
    f.cycles.push_back(std::move(c));
  }
  return f;
}

SearchResult search_extremal(const GraphParams& p, const SearchBudget& budget) {
  const std::uint64_t count = p.vertex_count();
  if (count > budget.max_vertices)
    throw Error(ErrorKind::BudgetExceeded, "b^n * k = " + std::to_string(count) +
                                               " exceeds max_vertices = " +
                                               std::to_string(budget.max_vertices));

  SearchResult result;
  result.certificate = enumerate_factor(make_pcr(p.b, p.n).affine, p.k);
  result.best_count = result.certificate.size();

  SharedState shared;
  shared.best = result.best_count;
  shared.max_nodes = budget.max_nodes;
  if (budget.time_cap_seconds)
    shared.deadline = std::chrono::steady_clock::now() +
                      std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                          std::chrono::duration<double>(*budget.time_cap_seconds));

  const unsigned workers = std::max(1u, budget.workers);
  if (workers == 1) {
    Searcher s(p, shared);
    s.run(0);
    if (s.found_count > result.best_count) {
      result.best_count = s.found_count;
      result.certificate = factor_from_successors(p, s.found_succ);
    }
  } else {
    // Split the tree on the choices of the first vertices; tasks are claimed
    // in order and the best result from the lowest task index wins ties.
    std::vector<Prefix> tasks{Prefix{}};
    std::uint64_t depth = 0;
    while (depth < count && tasks.size() < 8 * std::uint64_t{workers}) {
      std::vector<Prefix> next;
      for (const auto& t : tasks) {
        Searcher probe(p, shared);
        for (std::uint64_t v = 0; v < t.size(); ++v) probe.assign(v, probe.successor_index(v, t[v]));
        for (std::uint32_t x = 0; x < p.b; ++x) {
          if (!probe.can_assign(depth, x)) continue;
          Prefix e = t;
          e.push_back(x);
          next.push_back(std::move(e));
        }
      }
      tasks = std::move(next);
      ++depth;
    }

    std::atomic<std::size_t> cursor{0};
    std::mutex guard;
    std::uint64_t winner_count = result.best_count;
    std::size_t winner_task = tasks.size();
    std::vector<std::uint64_t> winner_succ;

    auto work = [&] {
      for (;;) {
        const std::size_t ti = cursor.fetch_add(1);
        if (ti >= tasks.size()) return;
        Searcher s(p, shared);
        for (std::uint64_t v = 0; v < tasks[ti].size(); ++v)
          s.assign(v, s.successor_index(v, tasks[ti][v]));
        s.run(tasks[ti].size());
        if (s.found_count == 0) continue;
        std::lock_guard lock(guard);
        if (s.found_count > winner_count ||
            (s.found_count == winner_count && ti < winner_task && !winner_succ.empty())) {
          winner_count = s.found_count;
          winner_task = ti;
          winner_succ = s.found_succ;
        }
      }
    };
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
    pool.clear();

    if (!winner_succ.empty()) {
      result.best_count = winner_count;
      result.certificate = factor_from_successors(p, winner_succ);
    }
  }

  result.nodes_explored = std::min(shared.nodes.load(), budget.max_nodes);
  result.optimal = !shared.capped.load();
  return result;
}

Theorem1Report verify_theorem1(const GraphParams& p, const SearchBudget& budget) {
  p.validate();
  if (p.n % p.k != 0 && p.k % p.n != 0)
    throw Error(ErrorKind::PreconditionViolated,
                "the pure cycling register is only claimed extremal when k | n or n | k (n=" +
                    std::to_string(p.n) + ", k=" + std::to_string(p.k) + ")");
  Theorem1Report r;
  r.search = search_extremal(p, budget);
  if (!r.search.optimal)
    throw Error(ErrorKind::Inconclusive,
                "search hit its budget after " + std::to_string(r.search.nodes_explored) + " nodes");
  r.search_count = r.search.best_count;
  r.pcr_count = closed_form_pcr(p.n, p.k, p.b).value;
  r.holds = r.search_count == r.pcr_count;
  return r;
}

std::uint64_t exhaustive_factors(const GraphParams& p,
                                 const std::function<bool(const Factor&)>& visit) {
  const std::uint64_t count = p.vertex_count();
  if (count > kExhaustiveVertexLimit)
    throw Error(ErrorKind::BudgetExceeded, "exhaustive enumeration is limited to " +
                                               std::to_string(kExhaustiveVertexLimit) + " vertices");
  const std::uint64_t words = p.word_count();
  std::vector<std::uint64_t> next(count, kNone);
  std::vector<bool> taken(count, false);
  std::uint64_t visited = 0;
  bool stop = false;

  std::function<void(std::uint64_t)> rec = [&](std::uint64_t v) {
    if (stop) return;
    if (v == count) {
      ++visited;
      stop = !visit(factor_from_successors(p, next));
      return;
    }
    const Vertex x = vertex_at(v, p);
    for (std::uint32_t sym = 0; sym < p.b && !stop; ++sym) {
      const std::uint64_t u = vertex_index({(x.word * p.b) % words + sym, (x.phase + 1) % p.k}, p);
      if (taken[u]) continue;
      taken[u] = true;
      next[v] = u;
      rec(v + 1);
      taken[u] = false;
    }
  };
  rec(0);
  return visited;
}

Factor random_factor(const GraphParams& p, std::mt19937_64& rng) {
  const std::uint64_t words = p.word_count();
  const std::uint64_t top = words / p.b;  // b^{n-1}
  std::vector<std::uint64_t> next(p.vertex_count(), kNone);
  std::vector<std::uint64_t> targets(p.b);
  for (std::uint32_t phase = 0; phase < p.k; ++phase) {
    for (std::uint64_t suffix = 0; suffix < top; ++suffix) {
      for (std::uint32_t x = 0; x < p.b; ++x)
        targets[x] = vertex_index({suffix * p.b + x, (phase + 1) % p.k}, p);
      std::shuffle(targets.begin(), targets.end(), rng);
      for (std::uint32_t a = 0; a < p.b; ++a)
        next[vertex_index({a * top + suffix, phase}, p)] = targets[a];
    }
  }
  return factor_from_successors(p, next);
}

}  // namespace astute
