#include "forcing/graph.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>

namespace forcing {

namespace {

int axis_distance(int x, int y, bool wrap, int extent) {
  int d = std::abs(x - y);
  if (wrap && extent > 0) d = std::min(d, extent - d);
  return d;
}

}  // namespace

Graph::Graph(int vertex_count, std::vector<Edge> edges, std::string family,
             std::map<std::string, long long> params,
             std::optional<std::vector<Coord>> coords, GridMetric metric,
             bool planar_certified)
    : vertex_count_(vertex_count),
      edges_(std::move(edges)),
      family_(std::move(family)),
      params_(std::move(params)),
      coords_(std::move(coords)),
      metric_(metric),
      planar_certified_(planar_certified) {
  if (vertex_count_ < 0) throw std::invalid_argument("negative vertex count");
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.a < 0 || e.b >= vertex_count_)
      throw std::invalid_argument("edge endpoint out of range");
    if (i > 0 && edges_[i - 1] == e)
      throw std::invalid_argument("duplicate edge");
  }
  adj_.assign(vertex_count_, {});
  for (const Edge& e : edges_) {
    adj_[e.a].push_back(e.b);
    adj_[e.b].push_back(e.a);
  }
  for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());

  if (coords_) {
    if (static_cast<int>(coords_->size()) != vertex_count_)
      throw std::invalid_argument("coords size mismatch");
    std::vector<Coord> sorted = *coords_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      throw std::invalid_argument("coords must be injective");
    for (const Edge& e : edges_) {
      const Coord& p = (*coords_)[e.a];
      const Coord& q = (*coords_)[e.b];
      int d = axis_distance(p.row, q.row, metric_.wrap_rows, metric_.row_extent) +
              axis_distance(p.col, q.col, metric_.wrap_cols, metric_.col_extent);
      if (d != 1)
        throw std::invalid_argument("edge joins non-adjacent coordinates");
    }
  }
}

const std::vector<VertexId>& Graph::neighbors(VertexId v) const {
  if (v < 0 || v >= vertex_count_)
    throw std::invalid_argument("vertex id out of range");
  return adj_[v];
}

const std::vector<Coord>& Graph::coords() const {
  if (!coords_) throw std::logic_error("graph carries no coordinates");
  return *coords_;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u == v) return false;
  return std::binary_search(edges_.begin(), edges_.end(), Edge(u, v));
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
  std::vector<int> color(g.vertex_count(), -1);
  std::deque<VertexId> queue;
  for (VertexId s = 0; s < g.vertex_count(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    queue.push_back(s);
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (VertexId u : g.neighbors(v)) {
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return color;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

bool is_planar_certified(const Graph& g) { return g.planar_certified(); }

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  int n1 = g1.vertex_count();
  std::vector<Edge> edges = g1.edges();
  edges.reserve(edges.size() + g2.edges().size());
  for (const Edge& e : g2.edges()) edges.emplace_back(e.a + n1, e.b + n1);

  std::optional<std::vector<Coord>> coords;
  bool wraps = g1.metric().wrap_rows || g1.metric().wrap_cols ||
               g2.metric().wrap_rows || g2.metric().wrap_cols;
  if (g1.has_coords() && g2.has_coords() && !wraps) {
    int max_col = 0;
    for (const Coord& c : g1.coords()) max_col = std::max(max_col, c.col);
    std::vector<Coord> merged = g1.coords();
    merged.reserve(g1.vertex_count() + g2.vertex_count());
    for (const Coord& c : g2.coords())
      merged.push_back({c.row, c.col + max_col + 2});
    coords = std::move(merged);
  }

  return Graph(n1 + g2.vertex_count(), std::move(edges), "disjoint-union", {},
               std::move(coords), GridMetric{},
               g1.planar_certified() && g2.planar_certified());
}

}  // namespace forcing
