#pragma once

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace forcing {

using VertexId = int;

// Undirected edge stored with a < b, so sorted edge lists compare
// lexicographically.
struct Edge {
  VertexId a = 0;
  VertexId b = 1;

  Edge() = default;
  Edge(VertexId u, VertexId v) : a(u < v ? u : v), b(u < v ? v : u) {
    if (u == v) throw std::invalid_argument("edge endpoints must differ");
  }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// 1-based grid position. Row 1 is the top row, column 1 the left column.
struct Coord {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const Coord&, const Coord&) = default;
};

// Wrap behaviour of the coordinate metric, set by the generator. A cylinder
// wraps columns, a torus wraps both axes.
struct GridMetric {
  bool wrap_rows = false;
  bool wrap_cols = false;
  int row_extent = 0;  // number of distinct rows when wrapping
  int col_extent = 0;
};

// Immutable simple graph over dense vertex ids 0..vertex_count-1.
//
// family/params record which generator built the graph; coords, when
// present, give grid positions for grid-derived families. The planarity
// flag is provenance: generators that provably emit planar graphs set it,
// everything else stays uncertified.
class Graph {
 public:
  Graph(int vertex_count, std::vector<Edge> edges, std::string family,
        std::map<std::string, long long> params,
        std::optional<std::vector<Coord>> coords = std::nullopt,
        GridMetric metric = {}, bool planar_certified = false);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::vector<VertexId>>& adjacency() const { return adj_; }
  const std::vector<VertexId>& neighbors(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;

  const std::string& family() const { return family_; }
  const std::map<std::string, long long>& params() const { return params_; }
  bool has_coords() const { return coords_.has_value(); }
  const std::vector<Coord>& coords() const;
  const GridMetric& metric() const { return metric_; }
  bool planar_certified() const { return planar_certified_; }

  // Equality covers the serialized identity: vertex count, edge set,
  // family, params and coords. Derived data (metric, planarity) is not
  // part of identity.
  friend bool operator==(const Graph& x, const Graph& y) {
    return x.vertex_count_ == y.vertex_count_ && x.edges_ == y.edges_ &&
           x.family_ == y.family_ && x.params_ == y.params_ &&
           x.coords_ == y.coords_;
  }

 private:
  int vertex_count_;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adj_;
  std::string family_;
  std::map<std::string, long long> params_;
  std::optional<std::vector<Coord>> coords_;
  GridMetric metric_;
  bool planar_certified_;
};

// Two-coloring of a connected-or-not graph: color[v] in {0,1}, or nullopt
// if some cycle is odd.
std::optional<std::vector<int>> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

// True only when the generator that built g guarantees planarity. The flag
// travels with the graph through serialization as declared provenance.
bool is_planar_certified(const Graph& g);

// Relabeled disjoint union. Coords survive only if both operands carry
// non-wrapping coords; the right operand is shifted past the left one.
// The union is planar-certified iff both operands are.
Graph disjoint_union(const Graph& g1, const Graph& g2);

}  // namespace forcing
