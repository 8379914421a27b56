#include "forcing/solver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <thread>

#include "cycles_internal.hpp"

namespace forcing {

namespace {

// Iterative-deepening search for a minimum hitting set of the alternating
// cycles. Each node finds one remaining cycle (shortest first, for a small
// branching factor), branches on which of its matching edges joins the
// set, and excludes the edges of earlier siblings so no set is visited
// twice. Disjoint cycles found greedily below a node bound how many more
// edges the node still needs.
class ExactSolver {
 public:
  ExactSolver(const Graph& g, const Matching& m)
      : g_(g),
        m_(m),
        bip_(is_bipartite(g)),
        banned_(g.vertex_count(), 0),
        excluded_(m.size(), 0) {}

  bool unique_matching() {
    return !internal::find_cycle_banned(g_, m_, banned_, bip_, true)
                .has_value();
  }

  // Number of vertex-disjoint cycles a greedy shortest-first sweep packs
  // on top of the currently banned vertices; a lower bound on the edges
  // any forcing completion still needs.
  int greedy_lower_bound() {
    std::vector<char> blocked(banned_);
    int count = 0;
    while (auto c =
               internal::find_cycle_banned(g_, m_, blocked, bip_, true)) {
      ++count;
      for (VertexId v : c->vertices()) blocked[v] = 1;
    }
    return count;
  }

  // Complete search for a forcing set of at most `target` edges. True iff
  // one exists within the node budget; it is then available in chosen().
  bool try_target(int target) {
    chosen_.clear();
    std::fill(banned_.begin(), banned_.end(), 0);
    std::fill(excluded_.begin(), excluded_.end(), 0);
    return extend(target);
  }

  bool exhausted() const { return exhausted_; }
  void set_budget(long long budget) { budget_ = budget; }
  const std::vector<Edge>& chosen() const { return chosen_; }

 private:
  bool extend(int target) {
    ++nodes_;
    if (budget_ >= 0 && nodes_ > budget_) {
      exhausted_ = true;
      return false;
    }
    auto cyc = internal::find_cycle_banned(g_, m_, banned_, bip_, true);
    if (!cyc) return true;
    int used = static_cast<int>(chosen_.size());
    if (used >= target) return false;
    if (used + greedy_lower_bound() > target) return false;
    std::vector<Edge> cand = cyc->matching_edges();
    std::vector<int> newly_excluded;
    bool found = false;
    for (const Edge& e : cand) {
      int idx = m_.index_of(e);
      if (excluded_[idx]) continue;
      banned_[e.a] = banned_[e.b] = 1;
      chosen_.push_back(e);
      if (extend(target)) {
        found = true;
        break;
      }
      chosen_.pop_back();
      banned_[e.a] = banned_[e.b] = 0;
      if (exhausted_) break;
      excluded_[idx] = 1;
      newly_excluded.push_back(idx);
    }
    if (!found) {
      for (int idx : newly_excluded) excluded_[idx] = 0;
    }
    return found;
  }

  const Graph& g_;
  const Matching& m_;
  bool bip_;
  std::vector<char> banned_;
  std::vector<char> excluded_;
  std::vector<Edge> chosen_;
  long long nodes_ = 0;
  long long budget_ = -1;
  bool exhausted_ = false;
};

// Exact forcing number of m, assuming it is already known to be at least
// `floor`. Deepening from max(floor, greedy bound): the first target that
// admits a forcing set is the forcing number, because every smaller target
// was searched completely.
int exact_from_floor(ExactSolver& solver, int floor,
                     std::vector<Edge>* set_out) {
  if (floor <= 0) {
    if (solver.unique_matching()) {
      if (set_out) set_out->clear();
      return 0;
    }
    floor = 1;
  }
  int start = std::max(floor, std::max(solver.greedy_lower_bound(), 1));
  for (int target = start;; ++target) {
    if (solver.try_target(target)) {
      if (set_out) {
        *set_out = solver.chosen();
        std::sort(set_out->begin(), set_out->end());
      }
      return target;
    }
    if (solver.exhausted()) {
      throw BudgetExhaustedError();
    }
  }
}

}  // namespace

bool is_forcing_set(const Graph& g, const Matching& m,
                    const std::vector<Edge>& s) {
  return !find_alternating_cycle_avoiding(g, m, s).has_value();
}

int forcing_number(const Graph& g, const Matching& m) {
  require_matching_of(g, m);
  ExactSolver solver(g, m);
  return exact_from_floor(solver, 0, nullptr);
}

std::optional<ForcingCertificate> forcing_certificate(
    const Graph& g, const Matching& m, const SolveOptions& opts) {
  require_matching_of(g, m);
  ExactSolver solver(g, m);
  solver.set_budget(opts.node_budget);
  ForcingCertificate cert;
  try {
    cert.forcing_number = exact_from_floor(solver, 0, &cert.forcing_set);
  } catch (const BudgetExhaustedError&) {
    return std::nullopt;
  }
  cert.verified = is_forcing_set(g, m, cert.forcing_set);
  return cert;
}

SpectrumResult forcing_spectrum(const Graph& g, const SolveOptions& opts) {
  std::vector<Matching> matchings = all_perfect_matchings(g);
  std::vector<int> numbers(matchings.size(), -1);
  int jobs = std::max(1, opts.jobs);
  if (jobs > static_cast<int>(matchings.size())) {
    jobs = static_cast<int>(matchings.size());
  }
  auto run = [&](int offset, int stride) {
    for (std::size_t i = offset; i < matchings.size();
         i += static_cast<std::size_t>(stride)) {
      ExactSolver solver(g, matchings[i]);
      solver.set_budget(opts.node_budget);
      try {
        numbers[i] = exact_from_floor(solver, 0, nullptr);
      } catch (const BudgetExhaustedError&) {
        numbers[i] = -2;
        return;
      }
    }
  };
  if (jobs <= 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> workers;
    workers.reserve(jobs);
    for (int t = 0; t < jobs; ++t) workers.emplace_back(run, t, jobs);
    for (std::thread& w : workers) w.join();
  }
  std::map<int, std::pair<std::uint64_t, std::size_t>> buckets;
  for (std::size_t i = 0; i < matchings.size(); ++i) {
    if (numbers[i] == -2) throw BudgetExhaustedError();
    auto [it, fresh] = buckets.try_emplace(numbers[i], 0, i);
    ++it->second.first;
    if (fresh) it->second.second = i;
  }
  SpectrumResult result;
  result.matching_count = matchings.size();
  for (const auto& [value, bucket] : buckets) {
    result.values.push_back(value);
    result.counts.push_back(bucket.first);
    result.witnesses.push_back(matchings[bucket.second]);
  }
  return result;
}

std::optional<int> min_forcing_number(const Graph& g) {
  std::optional<int> best;
  enumerate_perfect_matchings(g, [&](const Matching& m) {
    ExactSolver solver(g, m);
    if (!best) {
      best = exact_from_floor(solver, 0, nullptr);
      return *best > 0;
    }
    int lb = std::max(solver.greedy_lower_bound(), 1);
    for (int target = lb; target < *best; ++target) {
      if (solver.try_target(target)) {
        best = target;
        break;
      }
    }
    return *best > 1;
  });
  return best;
}

std::optional<int> max_forcing_number(const Graph& g) {
  std::optional<int> best;
  enumerate_perfect_matchings(g, [&](const Matching& m) {
    ExactSolver solver(g, m);
    if (!best) {
      best = exact_from_floor(solver, 0, nullptr);
    } else if (!solver.try_target(*best)) {
      best = exact_from_floor(solver, *best + 1, nullptr);
    }
    return true;
  });
  return best;
}

}  // namespace forcing
