#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "forcing/cycles.hpp"
#include "forcing/graph.hpp"
#include "forcing/matching.hpp"

namespace forcing {

struct SolveOptions {
  // Maximum number of branch nodes to expand per solved matching; negative
  // means unlimited.
  long long node_budget = -1;
  // Worker threads for whole-spectrum scans. Results are independent of
  // this value.
  int jobs = 1;
};

// Raised when the node budget stops a search before it proves a result.
// forcing_certificate converts it into nullopt; forcing_spectrum lets it
// propagate.
struct BudgetExhaustedError : std::runtime_error {
  BudgetExhaustedError() : std::runtime_error("node budget exhausted") {}
};

struct ForcingCertificate {
  std::vector<Edge> forcing_set;  // sorted
  int forcing_number = -1;
  // Maximum number of vertex-disjoint alternating cycles; -1 when the
  // caller did not request it.
  int packing_number = -1;
  // Set when the forcing set passed the independent no-remaining-cycle
  // check after the search.
  bool verified = false;
};

// True iff s (a subset of m's edges) lies in no other perfect matching,
// i.e. no alternating cycle avoids s.
bool is_forcing_set(const Graph& g, const Matching& m,
                    const std::vector<Edge>& s);

// Size of a smallest forcing set of m. Exact; runs without a budget.
int forcing_number(const Graph& g, const Matching& m);

// Smallest forcing set with a proof of minimality, or nullopt if the node
// budget ran out first. packing_number is left at -1.
std::optional<ForcingCertificate> forcing_certificate(
    const Graph& g, const Matching& m, const SolveOptions& opts = {});

struct SpectrumResult {
  std::vector<int> values;                // sorted distinct forcing numbers
  std::vector<std::uint64_t> counts;      // matchings per value, parallel
  std::vector<Matching> witnesses;        // first matching per value, parallel
  std::uint64_t matching_count = 0;
};

// Forcing numbers over every perfect matching of g. Enumeration order is
// lexicographic, and witnesses are the first matching attaining each
// value, so the result is deterministic.
SpectrumResult forcing_spectrum(const Graph& g, const SolveOptions& opts = {});

// Minimum and maximum forcing number over all perfect matchings; nullopt
// if g has none. Faster than a full spectrum because most matchings are
// dismissed by a one-sided test against the current best.
std::optional<int> min_forcing_number(const Graph& g);
std::optional<int> max_forcing_number(const Graph& g);

}  // namespace forcing
