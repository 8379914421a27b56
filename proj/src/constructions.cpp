#include "forcing/constructions.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "forcing/generators.hpp"

namespace forcing {

namespace {

struct CoordEdge {
  Coord u, v;
};

struct GridShape {
  int rows = 0;
  int cols = 0;
};

GridShape require_grid(const Graph& g, const char* what) {
  if (g.family() != "grid") {
    throw std::invalid_argument(std::string(what) + " requires a grid graph");
  }
  GridShape s;
  s.rows = static_cast<int>(g.params().at("rows"));
  s.cols = static_cast<int>(g.params().at("cols"));
  return s;
}

VertexId grid_vertex(const GridShape& s, int row, int col) {
  return (row - 1) * s.cols + (col - 1);
}

Edge to_edge(const GridShape& s, const CoordEdge& e) {
  return Edge(grid_vertex(s, e.u.row, e.u.col), grid_vertex(s, e.v.row, e.v.col));
}

// One nested ring: horizontal pairs along the top and bottom rows,
// vertical pairs down what is left of the two side columns.
void ring_edges(int r1, int r2, int c1, int c2, std::vector<CoordEdge>& out) {
  for (int c = c1; c < c2; c += 2) {
    out.push_back({{r1, c}, {r1, c + 1}});
    out.push_back({{r2, c}, {r2, c + 1}});
  }
  for (int r = r1 + 1; r + 1 <= r2 - 1; r += 2) {
    out.push_back({{r, c1}, {r + 1, c1}});
    out.push_back({{r, c2}, {r + 1, c2}});
  }
}

std::vector<CoordEdge> cacm_coord_edges(int rows, int cols) {
  std::vector<CoordEdge> out;
  int r1 = 1, r2 = rows, c1 = 1, c2 = cols;
  while (r1 < r2 && c1 < c2) {
    ring_edges(r1, r2, c1, c2, out);
    ++r1;
    --r2;
    ++c1;
    --c2;
  }
  return out;
}

// The even-grid matching restricted to the rows that survive deleting the
// first row (shift == 1) or the last row (shift == 0) of a (rows+1)-row
// grid.
std::vector<CoordEdge> trimmed_cacm_coord_edges(int rows, int cols,
                                                bool drop_first) {
  std::vector<CoordEdge> out;
  for (const CoordEdge& e : cacm_coord_edges(rows + 1, cols)) {
    if (drop_first) {
      if (e.u.row == 1 || e.v.row == 1) continue;
      out.push_back({{e.u.row - 1, e.u.col}, {e.v.row - 1, e.v.col}});
    } else {
      if (e.u.row == rows + 1 || e.v.row == rows + 1) continue;
      out.push_back(e);
    }
  }
  return out;
}

// Staircase forcing pattern of the nested-ring matching on an even
// rows x cols block with cols >= rows: the top-left horizontal edge of
// each full ring, then every other horizontal pair along the top row of
// the central two-row band. Emitted in block-local coordinates.
void cacm_coord_staircase(int rows, int cols, std::vector<CoordEdge>& out) {
  int a = rows / 2;
  for (int j = 1; j < a; ++j) out.push_back({{j, j}, {j, j + 1}});
  for (int c = a; c + 1 <= cols - a + 1; c += 2) {
    out.push_back({{a, c}, {a, c + 1}});
  }
}

void offset_cols(std::vector<CoordEdge>& edges, int col_offset) {
  for (CoordEdge& e : edges) {
    e.u.col += col_offset;
    e.v.col += col_offset;
  }
}

}  // namespace

Matching cacm_matching(const Graph& grid) {
  GridShape s = require_grid(grid, "cacm_matching");
  if (s.rows % 2 != 0 || s.cols % 2 != 0) {
    throw std::invalid_argument("cacm_matching needs even rows and cols");
  }
  std::vector<Edge> edges;
  for (const CoordEdge& e : cacm_coord_edges(s.rows, s.cols)) {
    edges.push_back(to_edge(s, e));
  }
  return Matching::from_edges(grid, edges);
}

Matching ucacm_matching(const Graph& grid) {
  GridShape s = require_grid(grid, "ucacm_matching");
  if (s.rows % 2 != 1 || s.cols % 2 != 0) {
    throw std::invalid_argument("ucacm_matching needs odd rows and even cols");
  }
  std::vector<Edge> edges;
  for (const CoordEdge& e : trimmed_cacm_coord_edges(s.rows, s.cols, true)) {
    edges.push_back(to_edge(s, e));
  }
  return Matching::from_edges(grid, edges);
}

Matching dcacm_matching(const Graph& grid) {
  GridShape s = require_grid(grid, "dcacm_matching");
  if (s.rows % 2 != 1 || s.cols % 2 != 0) {
    throw std::invalid_argument("dcacm_matching needs odd rows and even cols");
  }
  std::vector<Edge> edges;
  for (const CoordEdge& e : trimmed_cacm_coord_edges(s.rows, s.cols, false)) {
    edges.push_back(to_edge(s, e));
  }
  return Matching::from_edges(grid, edges);
}

std::vector<Edge> cacm_forcing_set(const Graph& grid) {
  GridShape s = require_grid(grid, "cacm_forcing_set");
  if (s.rows % 2 != 0 || s.cols % 2 != 0) {
    throw std::invalid_argument("cacm_forcing_set needs even rows and cols");
  }
  if (s.cols < s.rows) {
    throw std::invalid_argument("cacm_forcing_set needs cols >= rows");
  }
  std::vector<CoordEdge> coords;
  cacm_coord_staircase(s.rows, s.cols, coords);
  std::vector<Edge> out;
  for (const CoordEdge& e : coords) out.push_back(to_edge(s, e));
  std::sort(out.begin(), out.end());
  return out;
}

Matching all_horizontal_matching(const Graph& g) {
  if (!g.has_coords()) {
    throw std::invalid_argument("all_horizontal_matching needs coordinates");
  }
  std::map<int, std::vector<std::pair<int, VertexId>>> rows;
  const std::vector<Coord>& coords = g.coords();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    rows[coords[v].row].emplace_back(coords[v].col, v);
  }
  std::vector<Edge> edges;
  for (auto& [row, cells] : rows) {
    std::sort(cells.begin(), cells.end());
    if (cells.size() % 2 != 0) {
      throw std::invalid_argument("row " + std::to_string(row) +
                                  " has an odd number of vertices");
    }
    for (std::size_t i = 0; i + 1 < cells.size(); ++i) {
      if (cells[i + 1].first != cells[i].first + 1) {
        throw std::invalid_argument("row " + std::to_string(row) +
                                    " is not a contiguous run of columns");
      }
    }
    for (std::size_t i = 0; i + 1 < cells.size(); i += 2) {
      edges.emplace_back(cells[i].second, cells[i + 1].second);
    }
  }
  return Matching::from_edges(g, edges);
}

int banded_even_bound(int k, int l, int r) {
  // ceil((r - 1) / 2) with ceil(-1/2) = 0.
  return k * l + (r > 0 ? r / 2 : 0);
}

int banded_odd_bound(int k, int l, int r) { return k * l + r; }

BandedInstance make_banded_even(int k, int l, int r) {
  if (k < 1 || l < 1 || r < 0 || r > 2 * k) {
    throw std::invalid_argument(
        "even-height banded instance needs k >= 1, l >= 1, 0 <= r <= 2k");
  }
  int rows = 2 * k;
  int cols = (2 * k + 1) * l + r;
  Graph grid = make_grid(rows, cols);
  GridShape s{rows, cols};

  std::vector<Edge> matching;
  std::vector<Edge> forcing;
  auto add_vertical_column = [&](int c) {
    for (int t = 1; t <= k; ++t) {
      matching.push_back(
          Edge(grid_vertex(s, 2 * t - 1, c), grid_vertex(s, 2 * t, c)));
    }
  };
  bool last_column_vertical = (r % 2 == 1);
  for (int i = 1; i <= l; ++i) add_vertical_column((i - 1) * (2 * k + 1) + 1);
  if (last_column_vertical) add_vertical_column(cols);

  // Ring blocks fill the gaps: width 2k between chosen columns, and the
  // leftover after the last one.
  for (int i = 1; i <= l; ++i) {
    int start = (i - 1) * (2 * k + 1) + 1;  // chosen column
    int width = (i < l) ? 2 * k : cols - start - (last_column_vertical ? 1 : 0);
    std::vector<CoordEdge> block = cacm_coord_edges(rows, width);
    std::vector<CoordEdge> stairs;
    cacm_coord_staircase(rows, width, stairs);
    offset_cols(block, start);
    offset_cols(stairs, start);
    for (const CoordEdge& e : block) matching.push_back(to_edge(s, e));
    for (const CoordEdge& e : stairs) forcing.push_back(to_edge(s, e));
  }

  std::sort(forcing.begin(), forcing.end());
  Matching m = Matching::from_edges(grid, matching);
  return BandedInstance{std::move(grid), std::move(m), std::move(forcing)};
}

BandedInstance make_banded_odd(int k, int l, int r) {
  if (k < 0 || l < 1 || r < 0 || 2 * r > 2 * k + 1) {
    throw std::invalid_argument(
        "odd-height banded instance needs k >= 0, l >= 1, 0 <= 2r <= 2k+1");
  }
  int rows = 2 * k + 1;
  int cols = (2 * k + 2) * l + 2 * r;
  Graph grid = make_grid(rows, cols);
  GridShape s{rows, cols};

  std::vector<Edge> matching;
  std::vector<Edge> forcing;
  for (int b = 1; b <= l; ++b) {
    int offset = (b - 1) * (2 * k + 2);
    int width = (b < l) ? 2 * k + 2 : cols - offset;
    bool up = (b % 2 == 1);  // blocks alternate: ucacm, dcacm, ...
    std::vector<CoordEdge> block =
        trimmed_cacm_coord_edges(rows, width, up);
    offset_cols(block, offset);
    for (const CoordEdge& e : block) matching.push_back(to_edge(s, e));
    if (k == 0) continue;  // single-row blocks force themselves
    // Staircase of the parent even grid, restricted to its intact rings
    // (the outermost ring lost a row, so its edge is skipped). The block's
    // leftover outer cycle closes through the surviving full row, so the
    // stairs shift up one row for ucacm and mirror to the bottom rows for
    // dcacm; either way the band edge lands on that row's side of the
    // central band.
    std::vector<CoordEdge> stairs;
    for (int j = 2; j <= k; ++j) stairs.push_back({{j, j}, {j, j + 1}});
    for (int c = k + 1; c + 1 <= width - k; c += 2) {
      stairs.push_back({{k + 1, c}, {k + 1, c + 1}});
    }
    for (CoordEdge& e : stairs) {
      if (up) {
        e.u.row -= 1;
        e.v.row -= 1;
      } else {
        e.u.row = rows + 2 - e.u.row;
        e.v.row = rows + 2 - e.v.row;
      }
    }
    offset_cols(stairs, offset);
    for (const CoordEdge& e : stairs) forcing.push_back(to_edge(s, e));
  }

  std::sort(forcing.begin(), forcing.end());
  Matching m = Matching::from_edges(grid, matching);
  return BandedInstance{std::move(grid), std::move(m), std::move(forcing)};
}

}  // namespace forcing
