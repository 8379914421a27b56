#pragma once

#include <optional>
#include <vector>

#include "forcing/graph.hpp"
#include "forcing/matching.hpp"

namespace forcing {

// Cycle that alternates between matching and non-matching edges. Stored in
// canonical form: rotated so the smallest vertex comes first, oriented so
// the second vertex is the smaller of its two cycle neighbours.
class AlternatingCycle {
 public:
  // Validates that consecutive vertices (cyclically) are adjacent in g,
  // that vertices are distinct, and that edges alternate with respect to m.
  AlternatingCycle(const Graph& g, const Matching& m,
                   std::vector<VertexId> vertices);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  int length() const { return static_cast<int>(vertices_.size()); }
  bool first_edge_matched() const { return first_edge_matched_; }
  // Both edge lists are returned sorted, not in traversal order.
  std::vector<Edge> matching_edges() const;
  std::vector<Edge> non_matching_edges() const;
  bool uses_vertex(VertexId v) const;
  bool uses_matching_edge(const Edge& e) const;

  friend auto operator<=>(const AlternatingCycle& x,
                          const AlternatingCycle& y) {
    if (auto c = x.vertices_ <=> y.vertices_; c != 0) return c;
    return x.first_edge_matched_ <=> y.first_edge_matched_;
  }
  friend bool operator==(const AlternatingCycle& x, const AlternatingCycle& y) {
    return x.vertices_ == y.vertices_ &&
           x.first_edge_matched_ == y.first_edge_matched_;
  }

 private:
  std::vector<VertexId> vertices_;
  bool first_edge_matched_ = false;
};

// First alternating cycle, in deterministic search order, whose matching
// edges all lie outside `avoid`. Roots are tried in ascending edge order
// and neighbours in ascending order, so the result is reproducible. The
// avoid edges must belong to m. Returns nullopt iff no such cycle exists,
// which is exactly the condition for `avoid` to be a forcing set.
std::optional<AlternatingCycle> find_alternating_cycle_avoiding(
    const Graph& g, const Matching& m, const std::vector<Edge>& avoid);

// Same search but minimising cycle length (ties broken by root order). On
// non-bipartite graphs the minimisation is skipped and this matches
// find_alternating_cycle_avoiding; existence is still decided exactly.
std::optional<AlternatingCycle> shortest_alternating_cycle_avoiding(
    const Graph& g, const Matching& m, const std::vector<Edge>& avoid);

// Every alternating cycle through the matching edge `base` that avoids the
// given vertices, in deterministic order.
std::vector<AlternatingCycle> alternating_cycles_through(
    const Graph& g, const Matching& m, const Edge& base,
    const std::vector<VertexId>& avoid_vertices = {});

// Cycles of the symmetric difference of two perfect matchings, sorted by
// smallest vertex. Alternation flags are taken with respect to m1.
std::vector<AlternatingCycle> symmetric_difference_cycles(const Graph& g,
                                                          const Matching& m1,
                                                          const Matching& m2);

// Maximum set of vertex-disjoint alternating cycles, found by exhaustive
// branch and bound. Its size is a lower bound on the forcing number of m,
// with equality on planar bipartite graphs.
struct CyclePacking {
  std::vector<AlternatingCycle> cycles;
  int size() const { return static_cast<int>(cycles.size()); }
};
CyclePacking max_disjoint_alternating_cycles(const Graph& g,
                                             const Matching& m);

// Matching obtained by exchanging the cycle's matching and non-matching
// edges.
Matching flip_cycle(const Graph& g, const Matching& m,
                    const AlternatingCycle& cycle);

}  // namespace forcing
