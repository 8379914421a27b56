#include "forcing/brackets.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace forcing {

namespace {

std::array<VertexId, 4> canonical_cycle(std::array<VertexId, 4> c) {
  int lo = 0;
  for (int t = 1; t < 4; ++t)
    if (c[t] < c[lo]) lo = t;
  std::array<VertexId, 4> out;
  VertexId prev = c[(lo + 3) % 4];
  VertexId next = c[(lo + 1) % 4];
  if (next < prev) {
    for (int t = 0; t < 4; ++t) out[t] = c[(lo + t) % 4];
  } else {
    for (int t = 0; t < 4; ++t) out[t] = c[(lo + 4 - t) % 4];
  }
  return out;
}

std::array<Edge, 2> sorted_pair(Edge x, Edge y) {
  if (y < x) std::swap(x, y);
  return {x, y};
}

}  // namespace

TwoSwitchStep make_two_switch(const Graph& g, const Matching& m,
                              std::array<VertexId, 4> cycle) {
  for (VertexId v : cycle)
    if (v < 0 || v >= g.vertex_count())
      throw std::invalid_argument("2-switch vertex out of range");
  for (int s = 0; s < 4; ++s)
    for (int t = s + 1; t < 4; ++t)
      if (cycle[s] == cycle[t])
        throw std::invalid_argument("2-switch vertices repeat");
  for (int t = 0; t < 4; ++t)
    if (!g.has_edge(cycle[t], cycle[(t + 1) % 4]))
      throw std::invalid_argument("2-switch vertices are not a 4-cycle");

  std::array<VertexId, 4> c = canonical_cycle(cycle);
  Edge e01(c[0], c[1]), e12(c[1], c[2]), e23(c[2], c[3]), e30(c[3], c[0]);
  bool m01 = m.contains(e01), m12 = m.contains(e12);
  bool m23 = m.contains(e23), m30 = m.contains(e30);
  TwoSwitchStep step;
  step.cycle = c;
  if (m01 && m23 && !m12 && !m30) {
    step.removed = sorted_pair(e01, e23);
    step.added = sorted_pair(e12, e30);
  } else if (m12 && m30 && !m01 && !m23) {
    step.removed = sorted_pair(e12, e30);
    step.added = sorted_pair(e01, e23);
  } else {
    throw std::invalid_argument("4-cycle does not alternate with the matching");
  }
  return step;
}

TwoSwitchStep inverse_step(const TwoSwitchStep& step) {
  return {step.cycle, step.added, step.removed};
}

Matching apply_two_switch(const Graph& g, const Matching& m,
                          const TwoSwitchStep& step) {
  for (const Edge& e : step.removed)
    if (!m.contains(e))
      throw std::invalid_argument("2-switch removes an edge not in the matching");
  for (const Edge& e : step.added) {
    if (!g.has_edge(e.a, e.b))
      throw std::invalid_argument("2-switch adds an edge not in the graph");
    if (m.contains(e))
      throw std::invalid_argument("2-switch adds an edge already matched");
  }
  std::vector<Edge> want;
  for (int t = 0; t < 4; ++t)
    want.emplace_back(step.cycle[t], step.cycle[(t + 1) % 4]);
  std::sort(want.begin(), want.end());
  std::vector<Edge> have(step.removed.begin(), step.removed.end());
  have.insert(have.end(), step.added.begin(), step.added.end());
  std::sort(have.begin(), have.end());
  if (want != have)
    throw std::invalid_argument("2-switch edges do not cover its 4-cycle");

  std::vector<Edge> next;
  next.reserve(m.edges().size());
  for (const Edge& e : m.edges())
    if (e != step.removed[0] && e != step.removed[1]) next.push_back(e);
  next.push_back(step.added[0]);
  next.push_back(step.added[1]);
  return Matching::from_edges(g, next);
}

std::vector<TwoSwitchStep> enumerate_two_switches(const Graph& g,
                                                  const Matching& m) {
  require_matching_of(g, m);
  const std::vector<Edge>& me = m.edges();
  std::vector<TwoSwitchStep> out;
  for (std::size_t i = 0; i < me.size(); ++i) {
    for (std::size_t j = i + 1; j < me.size(); ++j) {
      VertexId a = me[i].a, b = me[i].b;
      VertexId c = me[j].a, d = me[j].b;
      if (g.has_edge(b, c) && g.has_edge(d, a))
        out.push_back(make_two_switch(g, m, {a, b, c, d}));
      if (g.has_edge(b, d) && g.has_edge(c, a))
        out.push_back(make_two_switch(g, m, {a, b, d, c}));
    }
  }
  return out;
}

Matching replay_switches(const Graph& g, const Matching& m,
                         const std::vector<TwoSwitchStep>& steps) {
  Matching cur = m;
  for (const TwoSwitchStep& s : steps) cur = apply_two_switch(g, cur, s);
  return cur;
}

namespace {

// Dense coordinate-to-vertex table; -1 marks empty cells.
class CoordTable {
 public:
  explicit CoordTable(const Graph& g) {
    if (!g.has_coords())
      throw std::invalid_argument("graph carries no grid coordinates");
    const std::vector<Coord>& coords = g.coords();
    for (const Coord& c : coords) {
      rows_ = std::max(rows_, c.row);
      cols_ = std::max(cols_, c.col);
    }
    table_.assign(static_cast<std::size_t>(rows_) * cols_, -1);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
      table_[index(coords[v].row, coords[v].col)] = v;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  VertexId at(int row, int col) const {
    if (row < 1 || row > rows_ || col < 1 || col > cols_) return -1;
    return table_[index(row, col)];
  }

 private:
  std::size_t index(int row, int col) const {
    return static_cast<std::size_t>(row - 1) * cols_ + (col - 1);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<VertexId> table_;
};

bool matched_pair(const CoordTable& t, const Matching& m, int r1, int c1,
                  int r2, int c2) {
  VertexId a = t.at(r1, c1);
  VertexId b = t.at(r2, c2);
  return a >= 0 && b >= 0 && m.contains(Edge(a, b));
}

Edge cell_edge(const CoordTable& t, int r1, int c1, int r2, int c2) {
  return Edge(t.at(r1, c1), t.at(r2, c2));
}

// Walks the vertical stack below a plain or skew-I top rung. Returns the
// arm length whose closing rung is matched, or -1.
int plain_arm(const CoordTable& t, const Matching& m, int i, int j) {
  for (int k = 0;; ++k) {
    if (matched_pair(t, m, i + 2 * k + 1, j, i + 2 * k + 1, j + 1)) return k;
    if (!matched_pair(t, m, i + 2 * k + 1, j, i + 2 * k + 2, j)) return -1;
  }
}

int skew_one_arm(const CoordTable& t, const Matching& m, int i, int j) {
  int best = -1;
  for (int k = 1;; ++k) {
    if (!matched_pair(t, m, i + 2 * k - 1, j, i + 2 * k, j)) return best;
    if (matched_pair(t, m, i + 2 * k, j + 1, i + 2 * k, j + 2)) best = k;
  }
}

int skew_two_arm(const CoordTable& t, const Matching& m, int i, int j) {
  for (int k = 1;; ++k) {
    if (!matched_pair(t, m, i + 2 * (k - 1), j, i + 2 * k - 1, j)) return -1;
    if (matched_pair(t, m, i + 2 * k, j, i + 2 * k, j + 1)) return k;
  }
}

std::vector<Edge> bracket_edges(const CoordTable& t, BracketKind kind, int i,
                                int j, int k) {
  std::vector<Edge> edges;
  switch (kind) {
    case BracketKind::plain:
      edges.push_back(cell_edge(t, i, j, i, j + 1));
      for (int s = 1; s <= k; ++s)
        edges.push_back(cell_edge(t, i + 2 * s - 1, j, i + 2 * s, j));
      edges.push_back(cell_edge(t, i + 2 * k + 1, j, i + 2 * k + 1, j + 1));
      break;
    case BracketKind::skew_one:
      edges.push_back(cell_edge(t, i, j, i, j + 1));
      for (int s = 1; s <= k; ++s)
        edges.push_back(cell_edge(t, i + 2 * s - 1, j, i + 2 * s, j));
      edges.push_back(cell_edge(t, i + 2 * k, j + 1, i + 2 * k, j + 2));
      break;
    case BracketKind::skew_two:
      edges.push_back(cell_edge(t, i, j + 1, i, j + 2));
      for (int s = 0; s < k; ++s)
        edges.push_back(cell_edge(t, i + 2 * s, j, i + 2 * s + 1, j));
      edges.push_back(cell_edge(t, i + 2 * k, j, i + 2 * k, j + 1));
      break;
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

bool is_column_continuous(const Graph& g) {
  if (!g.has_coords())
    throw std::invalid_argument("graph carries no grid coordinates");
  if (g.metric().wrap_rows || g.metric().wrap_cols) return false;
  CoordTable t(g);
  for (int c = 1; c <= t.cols(); ++c) {
    int lo = 0, hi = 0, count = 0;
    for (int r = 1; r <= t.rows(); ++r) {
      if (t.at(r, c) < 0) continue;
      if (count == 0) lo = r;
      hi = r;
      ++count;
    }
    if (count > 0 && hi - lo + 1 != count) return false;
  }
  for (int r = 1; r <= t.rows(); ++r) {
    for (int c = 1; c <= t.cols(); ++c) {
      VertexId v = t.at(r, c);
      if (v < 0) continue;
      VertexId right = t.at(r, c + 1);
      VertexId down = t.at(r + 1, c);
      if (right >= 0 && !g.has_edge(v, right)) return false;
      if (down >= 0 && !g.has_edge(v, down)) return false;
    }
  }
  return true;
}

std::vector<Bracket> find_brackets(const Graph& g, const Matching& m) {
  require_matching_of(g, m);
  CoordTable t(g);
  std::vector<Bracket> out;
  for (int j = 1; j <= t.cols(); ++j) {
    for (int i = 1; i <= t.rows(); ++i) {
      if (matched_pair(t, m, i, j, i, j + 1)) {
        int k = plain_arm(t, m, i, j);
        if (k >= 0)
          out.push_back({BracketKind::plain, i, j, k,
                         bracket_edges(t, BracketKind::plain, i, j, k)});
        k = skew_one_arm(t, m, i, j);
        if (k >= 1)
          out.push_back({BracketKind::skew_one, i, j, k,
                         bracket_edges(t, BracketKind::skew_one, i, j, k)});
      }
      if (matched_pair(t, m, i, j + 1, i, j + 2)) {
        int k = skew_two_arm(t, m, i, j);
        if (k >= 1)
          out.push_back({BracketKind::skew_two, i, j, k,
                         bracket_edges(t, BracketKind::skew_two, i, j, k)});
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const Bracket& x, const Bracket& y) {
    if (x.kind != y.kind) return x.kind < y.kind;
    if (x.col != y.col) return x.col < y.col;
    return x.row < y.row;
  });
  return out;
}

namespace {

// Removes plain brackets innermost-first. Every switch stays inside the
// window rows [i, i+2k+1], columns >= j of the bracket that triggered it.
class Eliminator {
 public:
  Eliminator(const Graph& g, Matching m) : g_(g), table_(g), m_(std::move(m)) {}

  const Matching& matching() const { return m_; }
  std::vector<TwoSwitchStep> take_steps() { return std::move(steps_); }

  void eliminate(int i, int j, int k) {
    if (k == 0) {
      switch_cells(i, j, i, j + 1, i + 1, j + 1, i + 1, j);
      return;
    }
    // Clear horizontal edges leaving column j+1 inside the arm; each
    // consecutive pair of them is a shorter plain bracket one column over.
    while (true) {
      std::vector<int> rows;
      for (int r = i + 1; r <= i + 2 * k; ++r)
        if (matched_pair(table_, m_, r, j + 1, r, j + 2)) rows.push_back(r);
      if (rows.empty()) break;
      int x = rows[0], y = rows[1];
      eliminate(x, j + 1, (y - x - 1) / 2);
    }
    // Arm and neighbour column are now all vertical; rotate the whole
    // window to verticals in two passes.
    for (int s = 1; s <= k; ++s) {
      int r = i + 2 * s - 1;
      switch_cells(r, j, r + 1, j, r + 1, j + 1, r, j + 1);
    }
    for (int s = 0; s <= k; ++s) {
      int r = i + 2 * s;
      switch_cells(r, j, r, j + 1, r + 1, j + 1, r + 1, j);
    }
  }

 private:
  void switch_cells(int r1, int c1, int r2, int c2, int r3, int c3, int r4,
                    int c4) {
    std::array<VertexId, 4> cyc = {table_.at(r1, c1), table_.at(r2, c2),
                                   table_.at(r3, c3), table_.at(r4, c4)};
    TwoSwitchStep step = make_two_switch(g_, m_, cyc);
    m_ = apply_two_switch(g_, m_, step);
    steps_.push_back(step);
  }

  const Graph& g_;
  CoordTable table_;
  Matching m_;
  std::vector<TwoSwitchStep> steps_;
};

}  // namespace

BracketElimination eliminate_brackets(const Graph& g, const Matching& m) {
  if (!is_column_continuous(g))
    throw std::invalid_argument(
        "bracket elimination needs a column-continuous grid subgraph");
  Eliminator worker(g, m);
  while (true) {
    std::vector<Bracket> found = find_brackets(g, worker.matching());
    const Bracket* pick = nullptr;
    for (const Bracket& b : found) {
      if (b.kind == BracketKind::plain) {
        pick = &b;
        break;
      }
    }
    if (!pick) {
      if (!found.empty())
        throw std::logic_error("skew bracket survived plain elimination");
      break;
    }
    worker.eliminate(pick->row, pick->col, pick->arm);
  }
  return {worker.matching(), worker.take_steps()};
}

std::vector<TwoSwitchStep> connect_matchings(const Graph& g,
                                             const Matching& m1,
                                             const Matching& m2) {
  if (m1 == m2) {
    if (!is_column_continuous(g))
      throw std::invalid_argument(
          "bracket elimination needs a column-continuous grid subgraph");
    require_matching_of(g, m1);
    return {};
  }
  BracketElimination down = eliminate_brackets(g, m1);
  BracketElimination up = eliminate_brackets(g, m2);
  if (!(down.result == up.result))
    throw std::logic_error("bracket-free matchings disagree");
  std::vector<TwoSwitchStep> steps = std::move(down.steps);
  for (auto it = up.steps.rbegin(); it != up.steps.rend(); ++it)
    steps.push_back(inverse_step(*it));
  return steps;
}

}  // namespace forcing
