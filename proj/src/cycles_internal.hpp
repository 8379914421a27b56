#pragma once

#include <optional>
#include <vector>

#include "forcing/cycles.hpp"

// Search primitives shared by the cycle module and the solver. Not part of
// the public interface.

namespace forcing::internal {

// Alternating cycle whose vertices all avoid the banned mask. `bipartite`
// must be is_bipartite(g); when it is true and `shortest` is set, the
// result has minimum length (ties broken by ascending root edge). On
// non-bipartite graphs the search is exhaustive and `shortest` is ignored.
std::optional<AlternatingCycle> find_cycle_banned(const Graph& g,
                                                  const Matching& m,
                                                  const std::vector<char>& banned,
                                                  bool bipartite,
                                                  bool shortest);

}  // namespace forcing::internal
