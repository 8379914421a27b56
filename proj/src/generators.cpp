#include "forcing/generators.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>

namespace forcing {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument(msg);
}

// Shared builder for the grid-like families. `deleted` marks cells of the
// full rows x cols array to drop; survivors are relabelled row-major.
Graph build_grid_family(int rows, int cols, bool wrap_rows, bool wrap_cols,
                        const std::vector<char>& deleted, std::string family,
                        std::map<std::string, long long> params,
                        bool planar) {
  std::vector<int> id(static_cast<std::size_t>(rows) * cols, -1);
  std::vector<Coord> coords;
  int next = 0;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      std::size_t cell = static_cast<std::size_t>(i) * cols + j;
      if (!deleted.empty() && deleted[cell]) continue;
      id[cell] = next++;
      coords.push_back(Coord{i + 1, j + 1});
    }
  }
  auto at = [&](int i, int j) {
    return id[static_cast<std::size_t>(i) * cols + j];
  };
  std::vector<Edge> edges;
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      if (at(i, j) == -1) continue;
      int right = (j + 1 < cols) ? j + 1 : (wrap_cols ? 0 : -1);
      if (right != -1 && right != j && at(i, right) != -1) {
        edges.emplace_back(at(i, j), at(i, right));
      }
      int down = (i + 1 < rows) ? i + 1 : (wrap_rows ? 0 : -1);
      if (down != -1 && down != i && at(down, j) != -1) {
        edges.emplace_back(at(i, j), at(down, j));
      }
    }
  }
  GridMetric metric{wrap_rows, wrap_cols, rows, cols};
  return Graph(next, std::move(edges), std::move(family), std::move(params),
               std::move(coords), metric, planar);
}

// Appends the edges of the order-n gadget through `remap`, which must send
// cycle positions 0..2n-1 and path vertices 2n..4n-1 to final ids. When
// `skip_base_edge` is set the cycle edge {0,1} is left to the caller.
void append_gadget_edges(int n, bool skip_base_edge,
                         const std::function<VertexId(VertexId)>& remap,
                         std::vector<Edge>& edges) {
  int c = 2 * n;
  for (int t = 0; t < c; ++t) {
    if (skip_base_edge && t == 0) continue;
    edges.emplace_back(remap(t), remap((t + 1) % c));
  }
  for (int s = 0; s < n; ++s) {
    int t = 2 * s + 1;
    VertexId p = remap(c + 2 * s);
    VertexId q = remap(c + 2 * s + 1);
    edges.emplace_back(remap((t + 1) % c), p);
    edges.emplace_back(p, q);
    edges.emplace_back(q, remap(t));
  }
}

}  // namespace

Graph make_grid(int rows, int cols) {
  require(rows >= 1 && cols >= 1, "grid needs rows, cols >= 1");
  return build_grid_family(rows, cols, false, false, {}, "grid",
                           {{"rows", rows}, {"cols", cols}}, true);
}

Graph make_cylinder(int rows, int cols) {
  require(rows >= 1, "cylinder needs rows >= 1");
  require(cols >= 3, "cylinder needs cols >= 3");
  return build_grid_family(rows, cols, false, true, {}, "cylinder",
                           {{"rows", rows}, {"cols", cols}}, true);
}

Graph make_torus(int rows, int cols) {
  require(rows >= 3 && cols >= 3, "torus needs rows, cols >= 3");
  return build_grid_family(rows, cols, true, true, {}, "torus",
                           {{"rows", rows}, {"cols", cols}}, false);
}

Graph make_cycle(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, std::move(edges), "cycle", {{"n", n}}, std::nullopt, {},
               true);
}

Graph make_hypercube(int d) {
  require(d >= 1, "hypercube needs d >= 1");
  require(d <= 20, "hypercube dimension too large");
  int n = 1 << d;
  std::vector<Edge> edges;
  for (int v = 0; v < n; ++v) {
    for (int bit = 0; bit < d; ++bit) {
      int u = v ^ (1 << bit);
      if (u > v) edges.emplace_back(v, u);
    }
  }
  return Graph(n, std::move(edges), "hypercube", {{"d", d}}, std::nullopt, {},
               d <= 3);
}

Graph make_stop_sign(int n, int k) {
  require(n >= 2, "stop sign needs n >= 2");
  require(k >= 1 && k <= n - 1, "stop sign needs 1 <= k <= n - 1");
  int side = 2 * n;
  std::vector<char> deleted(static_cast<std::size_t>(side) * side, 0);
  for (int i = 0; i < side; ++i) {
    for (int j = 0; j < side; ++j) {
      int di = std::min(i, side - 1 - i);
      int dj = std::min(j, side - 1 - j);
      if (di + dj <= k - 1) {
        deleted[static_cast<std::size_t>(i) * side + j] = 1;
      }
    }
  }
  return build_grid_family(side, side, false, false, deleted, "stop-sign",
                           {{"n", n}, {"k", k}}, true);
}

GadgetGraph make_gadget_g(int n) {
  require(n >= 2, "gadget needs n >= 2");
  std::vector<Edge> edges;
  append_gadget_edges(n, false, [](VertexId v) { return v; }, edges);
  std::vector<Edge> forcing;
  for (int s = 0; s < n; ++s) forcing.emplace_back(2 * s, 2 * s + 1);
  Graph g(4 * n, std::move(edges), "gadget", {{"n", n}}, std::nullopt, {},
          true);
  return GadgetGraph{std::move(g), std::move(forcing)};
}

Graph make_glued_spectrum_graph(std::vector<int> values) {
  require(!values.empty(), "spectrum set must be nonempty");
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  require(values.front() >= 1, "spectrum values must be positive");

  std::map<std::string, long long> params;
  for (std::size_t i = 0; i < values.size(); ++i) {
    params["set" + std::to_string(i + 1)] = values[i];
  }

  int shift = values.front() - 1;
  std::vector<Edge> edges;
  int next = 0;
  if (values.size() == 1) {
    // {m} is realised by m disjoint 4-cycles: every perfect matching needs
    // exactly one edge per component.
    shift = values.front();
  } else {
    // Gadgets for the shifted values above 1 share the edge {0,1}; each
    // matching of the glued core picks one gadget to be "active".
    edges.emplace_back(0, 1);
    next = 2;
    for (std::size_t i = 1; i < values.size(); ++i) {
      int nv = values[i] - shift;
      int base = next;
      auto remap = [base](VertexId v) {
        return v < 2 ? v : base + (v - 2);
      };
      append_gadget_edges(nv, true, remap, edges);
      next += 4 * nv - 2;
    }
  }
  for (int c = 0; c < shift; ++c) {
    edges.emplace_back(next, next + 1);
    edges.emplace_back(next + 1, next + 2);
    edges.emplace_back(next + 2, next + 3);
    edges.emplace_back(next, next + 3);
    next += 4;
  }
  return Graph(next, std::move(edges), "glued", std::move(params),
               std::nullopt, {}, true);
}

ReductionH make_reduction_h(const Graph& g, const Matching& m) {
  require_matching_of(g, m);
  require(is_bipartite(g), "reduction input must be bipartite");
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    require(static_cast<int>(g.neighbors(v).size()) <= 3,
            "reduction input must have max degree 3");
  }
  int n = g.vertex_count();
  std::vector<Edge> edges(g.edges());
  std::vector<Edge> gadget;
  for (const Edge& e : g.edges()) {
    if (m.contains(e)) continue;
    int s = static_cast<int>(gadget.size());
    VertexId xe = n + 2 * s;
    VertexId ye = n + 2 * s + 1;
    edges.emplace_back(e.a, ye);
    edges.emplace_back(xe, ye);
    edges.emplace_back(xe, e.b);
    gadget.push_back(e);
  }
  int extra = 2 * static_cast<int>(gadget.size());
  std::map<std::string, long long> params{
      {"source_vertices", n},
      {"gadgets", static_cast<long long>(gadget.size())}};
  Graph h(n + extra, std::move(edges), "reduction-h", std::move(params),
          std::nullopt, {}, g.planar_certified());
  return ReductionH{std::move(h), std::move(gadget)};
}

}  // namespace forcing
