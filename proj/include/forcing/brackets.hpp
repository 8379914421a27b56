#pragma once

#include <array>
#include <vector>

#include "forcing/graph.hpp"
#include "forcing/matching.hpp"

namespace forcing {

// Exchange of the two matching edges of an alternating 4-cycle for its two
// non-matching edges. `cycle` is in canonical cyclic order (smallest
// vertex first, then its smaller neighbour); removed/added are each sorted.
struct TwoSwitchStep {
  std::array<VertexId, 4> cycle;
  std::array<Edge, 2> removed;
  std::array<Edge, 2> added;

  friend bool operator==(const TwoSwitchStep& x, const TwoSwitchStep& y) {
    return x.cycle == y.cycle && x.removed == y.removed && x.added == y.added;
  }
};

// Builds the step switching m on the given 4-cycle. Throws when the
// vertices do not form a 4-cycle of g or the cycle does not alternate.
TwoSwitchStep make_two_switch(const Graph& g, const Matching& m,
                              std::array<VertexId, 4> cycle);

// The step undoing `step`.
TwoSwitchStep inverse_step(const TwoSwitchStep& step);

// Applies a step after revalidating it against m, naming the violated
// condition on failure.
Matching apply_two_switch(const Graph& g, const Matching& m,
                          const TwoSwitchStep& step);

// Every alternating 4-cycle of m as a ready-to-apply step, in a
// deterministic order.
std::vector<TwoSwitchStep> enumerate_two_switches(const Graph& g,
                                                  const Matching& m);

Matching replay_switches(const Graph& g, const Matching& m,
                         const std::vector<TwoSwitchStep>& steps);

// Matching patterns inside one grid column that block the all-vertical
// layout: two horizontals hooked onto a stack of verticals. The plain kind
// has both horizontals pointing right from column j; the skew kinds shift
// one horizontal a column to the right.
enum class BracketKind { plain, skew_one, skew_two };

struct Bracket {
  BracketKind kind = BracketKind::plain;
  int row = 0;  // anchor row i
  int col = 0;  // anchor column j
  int arm = 0;  // number of vertical pairs k
  std::vector<Edge> edges;  // the matching edges of the pattern, sorted
};

// True iff g's coordinates describe an induced subgraph of a grid whose
// columns are contiguous row intervals. Wrapping metrics are never
// column-continuous.
bool is_column_continuous(const Graph& g);

// All bracket occurrences in m, each anchor reported with its unique (for
// plain and skew-II) or largest (skew-I) arm. Sorted by kind, column, row.
// Requires coordinates.
std::vector<Bracket> find_brackets(const Graph& g, const Matching& m);

// Applies 2-switches until no bracket of any kind remains. Requires a
// column-continuous graph. When every column has even height the
// bracket-free matching is unique (every column vertical), so the result
// canonicalises m; odd-height columns admit several bracket-free
// matchings and the result then depends on m. The steps replay from m to
// result.
struct BracketElimination {
  Matching result;
  std::vector<TwoSwitchStep> steps;
};
BracketElimination eliminate_brackets(const Graph& g, const Matching& m);

// 2-switch sequence transforming m1 into m2, routed through a common
// bracket-free matching from both ends. Throws std::logic_error when the
// two eliminations land on different bracket-free matchings, which can
// happen on grids with odd-height columns.
std::vector<TwoSwitchStep> connect_matchings(const Graph& g,
                                             const Matching& m1,
                                             const Matching& m2);

}  // namespace forcing
