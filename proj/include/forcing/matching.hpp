#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "forcing/graph.hpp"

namespace forcing {

// Perfect matching of a graph, stored both as a partner involution and as
// a sorted edge list.
class Matching {
 public:
  Matching() = default;

  // Validates that the edges form a perfect matching of g. Edges outside g
  // raise std::invalid_argument, as do overlapping or non-covering sets.
  static Matching from_edges(const Graph& g, const std::vector<Edge>& edges);

  int vertex_count() const { return static_cast<int>(partner_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }
  VertexId partner(VertexId v) const { return partner_[v]; }
  const std::vector<Edge>& edges() const { return edges_; }
  bool contains(const Edge& e) const;
  // Position of e in the sorted edge list, or -1.
  int index_of(const Edge& e) const;

  // FNV-1a over the edge list; used to key caches.
  std::uint64_t digest() const;

  friend auto operator<=>(const Matching& x, const Matching& y) {
    return x.edges_ <=> y.edges_;
  }
  friend bool operator==(const Matching& x, const Matching& y) {
    return x.edges_ == y.edges_;
  }

 private:
  std::vector<VertexId> partner_;
  std::vector<Edge> edges_;
};

// True iff the edge set is a perfect matching of g. An edge not present in
// g is a contract violation and raises std::invalid_argument instead of
// returning false.
bool is_perfect_matching(const Graph& g, const std::vector<Edge>& edges);

// Cheap revalidation used by operations taking (graph, matching) pairs
// that may come from different sources. Throws on mismatch.
void require_matching_of(const Graph& g, const Matching& m);

// Visit every perfect matching of g in ascending lexicographic order of
// the sorted edge list. The visitor returns false to stop early; the
// function returns false iff it was stopped.
bool enumerate_perfect_matchings(const Graph& g,
                                 const std::function<bool(const Matching&)>& visit);

// Restriction to matchings containing every edge of `required` (which must
// be pairwise disjoint edges of g). Enumerating over the possible first
// edges of vertex 0 with this function partitions the full enumeration,
// which is how callers split the work.
bool enumerate_perfect_matchings_containing(
    const Graph& g, const std::vector<Edge>& required,
    const std::function<bool(const Matching&)>& visit);

std::vector<Matching> all_perfect_matchings(const Graph& g);
std::uint64_t count_perfect_matchings(const Graph& g);
std::uint64_t count_perfect_matchings_containing(const Graph& g,
                                                 const std::vector<Edge>& required);

}  // namespace forcing
