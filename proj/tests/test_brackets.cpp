#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>

#include "doctest.h"

#include "forcing/brackets.hpp"
#include "forcing/constructions.hpp"
#include "forcing/generators.hpp"
#include "forcing/solver.hpp"

using namespace forcing;

namespace {

Matching vertical_2x3(const Graph& g) {
  return Matching::from_edges(g, {Edge(0, 3), Edge(1, 4), Edge(2, 5)});
}

Matching all_vertical(const Graph& grid, int rows, int cols) {
  std::vector<Edge> edges;
  for (int r = 0; r + 1 < rows; r += 2) {
    for (int c = 0; c < cols; ++c) {
      edges.emplace_back(r * cols + c, (r + 1) * cols + c);
    }
  }
  return Matching::from_edges(grid, edges);
}

}  // namespace

TEST_CASE("two-switch steps canonicalise the cycle") {
  Graph g = make_grid(2, 2);
  Matching m = Matching::from_edges(g, {Edge(0, 1), Edge(2, 3)});
  const std::array<VertexId, 4> canonical = {0, 1, 3, 2};
  const std::array<std::array<VertexId, 4>, 8> orderings = {{
      {0, 1, 3, 2}, {1, 3, 2, 0}, {3, 2, 0, 1}, {2, 0, 1, 3},
      {0, 2, 3, 1}, {2, 3, 1, 0}, {3, 1, 0, 2}, {1, 0, 2, 3},
  }};
  for (const auto& order : orderings) {
    TwoSwitchStep step = make_two_switch(g, m, order);
    CHECK(step.cycle == canonical);
    CHECK(step.removed == std::array<Edge, 2>{Edge(0, 1), Edge(2, 3)});
    CHECK(step.added == std::array<Edge, 2>{Edge(0, 2), Edge(1, 3)});
  }
}

TEST_CASE("two-switch construction rejects bad cycles") {
  Graph g = make_grid(2, 3);
  Matching vertical = vertical_2x3(g);
  CHECK_THROWS_AS(make_two_switch(g, vertical, {0, 1, 2, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_two_switch(g, vertical, {0, 1, 4, 4}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_two_switch(g, vertical, {0, 1, 4, 9}),
                  std::invalid_argument);
  Matching skewed = Matching::from_edges(g, {Edge(0, 1), Edge(2, 5), Edge(3, 4)});
  CHECK_THROWS_AS(make_two_switch(g, skewed, {1, 2, 5, 4}),
                  std::invalid_argument);
  CHECK_NOTHROW(make_two_switch(g, skewed, {0, 1, 4, 3}));
}

TEST_CASE("applying a step and its inverse round-trips") {
  Graph g = make_grid(2, 3);
  Matching m = vertical_2x3(g);
  TwoSwitchStep step = make_two_switch(g, m, {0, 1, 4, 3});
  Matching next = apply_two_switch(g, m, step);
  CHECK(next.edges() == std::vector<Edge>{Edge(0, 1), Edge(2, 5), Edge(3, 4)});
  TwoSwitchStep back = inverse_step(step);
  CHECK(back.cycle == step.cycle);
  CHECK(back.removed == step.added);
  CHECK(back.added == step.removed);
  CHECK(apply_two_switch(g, next, back) == m);
  // Replaying a stale step fails loudly.
  CHECK_THROWS_AS(apply_two_switch(g, next, step), std::invalid_argument);
}

TEST_CASE("enumerating switches finds each 4-cycle once") {
  Graph g22 = make_grid(2, 2);
  Matching m22 = Matching::from_edges(g22, {Edge(0, 1), Edge(2, 3)});
  CHECK(enumerate_two_switches(g22, m22).size() == 1);

  Graph g23 = make_grid(2, 3);
  std::vector<TwoSwitchStep> steps =
      enumerate_two_switches(g23, vertical_2x3(g23));
  REQUIRE(steps.size() == 2);
  CHECK(steps[0].cycle == std::array<VertexId, 4>{0, 1, 4, 3});
  CHECK(steps[1].cycle == std::array<VertexId, 4>{1, 2, 5, 4});
}

TEST_CASE("a switch moves the forcing number by at most one") {
  Graph g = make_grid(3, 4);
  std::map<Matching, int> numbers;
  for (const Matching& m : all_perfect_matchings(g)) {
    numbers.emplace(m, forcing_number(g, m));
  }
  for (const auto& [m, f] : numbers) {
    for (const TwoSwitchStep& step : enumerate_two_switches(g, m)) {
      Matching next = apply_two_switch(g, m, step);
      CHECK(std::abs(numbers.at(next) - f) <= 1);
    }
  }
}

TEST_CASE("column continuity") {
  CHECK(is_column_continuous(make_grid(4, 4)));
  CHECK(is_column_continuous(make_grid(1, 4)));
  CHECK(is_column_continuous(make_stop_sign(2, 1)));
  CHECK(!is_column_continuous(make_cylinder(2, 4)));
  CHECK(!is_column_continuous(make_torus(4, 4)));
  CHECK_THROWS_AS(is_column_continuous(make_cycle(6)), std::invalid_argument);

  // A ring of grid cells: every column has a hole in the middle.
  std::vector<Edge> ring_edges;
  std::vector<Coord> ring_coords;
  for (int r = 1; r <= 3; ++r) {
    for (int c = 1; c <= 3; ++c) {
      if (r == 2 && c == 2) continue;
      ring_coords.push_back({r, c});
    }
  }
  auto ring_id = [&](int r, int c) -> VertexId {
    for (std::size_t v = 0; v < ring_coords.size(); ++v) {
      if (ring_coords[v].row == r && ring_coords[v].col == c) {
        return static_cast<VertexId>(v);
      }
    }
    return -1;
  };
  for (int r = 1; r <= 3; ++r) {
    for (int c = 1; c <= 3; ++c) {
      VertexId v = ring_id(r, c);
      if (v < 0) continue;
      VertexId right = ring_id(r, c + 1);
      VertexId down = ring_id(r + 1, c);
      if (right >= 0) ring_edges.emplace_back(v, right);
      if (down >= 0) ring_edges.emplace_back(v, down);
    }
  }
  Graph ring(8, ring_edges, "custom", {}, ring_coords, {}, true);
  CHECK(!is_column_continuous(ring));

  // Continuous columns but a missing horizontal edge breaks inducedness.
  Graph g23 = make_grid(2, 3);
  std::vector<Edge> pruned;
  for (const Edge& e : g23.edges()) {
    if (!(e == Edge(4, 5))) pruned.push_back(e);
  }
  Graph broken(6, pruned, "custom", {}, g23.coords(), {}, true);
  CHECK(!is_column_continuous(broken));
}

TEST_CASE("bracket patterns are located with exact arms") {
  Graph g = make_grid(6, 4);
  Matching m = Matching::from_edges(
      g, {Edge(0, 1), Edge(2, 3), Edge(4, 8), Edge(5, 6), Edge(7, 11),
          Edge(9, 10), Edge(12, 16), Edge(13, 17), Edge(14, 18), Edge(15, 19),
          Edge(20, 21), Edge(22, 23)});
  std::vector<Bracket> brackets = find_brackets(g, m);
  REQUIRE(brackets.size() == 4);

  CHECK(brackets[0].kind == BracketKind::plain);
  CHECK(brackets[0].row == 1);
  CHECK(brackets[0].col == 1);
  CHECK(brackets[0].arm == 2);
  CHECK(brackets[0].edges == std::vector<Edge>{Edge(0, 1), Edge(4, 8),
                                               Edge(12, 16), Edge(20, 21)});

  CHECK(brackets[1].kind == BracketKind::plain);
  CHECK(brackets[1].row == 2);
  CHECK(brackets[1].col == 2);
  CHECK(brackets[1].arm == 0);
  CHECK(brackets[1].edges == std::vector<Edge>{Edge(5, 6), Edge(9, 10)});

  CHECK(brackets[2].kind == BracketKind::skew_one);
  CHECK(brackets[2].row == 1);
  CHECK(brackets[2].col == 1);
  CHECK(brackets[2].arm == 1);
  CHECK(brackets[2].edges ==
        std::vector<Edge>{Edge(0, 1), Edge(4, 8), Edge(9, 10)});

  // The same column also carries a type-II skew: top (5,6), verticals
  // (4,8) and (12,16), bottom (20,21).
  CHECK(brackets[3].kind == BracketKind::skew_two);
  CHECK(brackets[3].row == 2);
  CHECK(brackets[3].col == 1);
  CHECK(brackets[3].arm == 2);
  CHECK(brackets[3].edges == std::vector<Edge>{Edge(4, 8), Edge(5, 6),
                                               Edge(12, 16), Edge(20, 21)});

  CHECK(find_brackets(g, all_vertical(g, 6, 4)).empty());
  CHECK_THROWS_AS(find_brackets(make_cycle(6),
                                Matching::from_edges(
                                    make_cycle(6),
                                    {Edge(0, 1), Edge(2, 3), Edge(4, 5)})),
                  std::invalid_argument);
}

TEST_CASE("skew-two brackets are recognised") {
  Graph g = make_grid(4, 4);
  Matching m = Matching::from_edges(
      g, {Edge(0, 4), Edge(1, 2), Edge(3, 7), Edge(5, 6), Edge(8, 9),
          Edge(10, 11), Edge(12, 13), Edge(14, 15)});
  std::vector<Bracket> brackets = find_brackets(g, m);
  REQUIRE(brackets.size() == 4);
  CHECK(brackets[0].kind == BracketKind::plain);
  CHECK(brackets[0].row == 3);
  CHECK(brackets[0].col == 1);
  CHECK(brackets[0].arm == 0);
  CHECK(brackets[1].kind == BracketKind::plain);
  CHECK(brackets[1].row == 1);
  CHECK(brackets[1].col == 2);
  CHECK(brackets[2].kind == BracketKind::plain);
  CHECK(brackets[2].row == 3);
  CHECK(brackets[2].col == 3);
  CHECK(brackets[3].kind == BracketKind::skew_two);
  CHECK(brackets[3].row == 1);
  CHECK(brackets[3].col == 1);
  CHECK(brackets[3].arm == 1);
  CHECK(brackets[3].edges ==
        std::vector<Edge>{Edge(0, 4), Edge(1, 2), Edge(8, 9)});
}

TEST_CASE("eliminating brackets reaches the all-vertical matching") {
  Graph g = make_grid(6, 4);
  Matching m = Matching::from_edges(
      g, {Edge(0, 1), Edge(2, 3), Edge(4, 8), Edge(5, 6), Edge(7, 11),
          Edge(9, 10), Edge(12, 16), Edge(13, 17), Edge(14, 18), Edge(15, 19),
          Edge(20, 21), Edge(22, 23)});
  BracketElimination elim = eliminate_brackets(g, m);
  REQUIRE(elim.steps.size() == 11);

  const std::array<std::array<VertexId, 4>, 11> cycles = {{
      {5, 6, 10, 9},
      {4, 5, 9, 8},
      {12, 13, 17, 16},
      {0, 1, 5, 4},
      {8, 9, 13, 12},
      {16, 17, 21, 20},
      {6, 7, 11, 10},
      {14, 15, 19, 18},
      {2, 3, 7, 6},
      {10, 11, 15, 14},
      {18, 19, 23, 22},
  }};
  for (std::size_t i = 0; i < cycles.size(); ++i) {
    CAPTURE(i);
    CHECK(elim.steps[i].cycle == cycles[i]);
  }
  CHECK(elim.steps[0].removed == std::array<Edge, 2>{Edge(5, 6), Edge(9, 10)});
  CHECK(elim.steps[0].added == std::array<Edge, 2>{Edge(5, 9), Edge(6, 10)});

  CHECK(elim.result == all_vertical(g, 6, 4));
  CHECK(replay_switches(g, m, elim.steps) == elim.result);
  CHECK(find_brackets(g, elim.result).empty());
}

TEST_CASE("every matching of a grid eliminates to the same result") {
  Graph g44 = make_grid(4, 4);
  Matching target44 = all_vertical(g44, 4, 4);
  for (const Matching& m : all_perfect_matchings(g44)) {
    BracketElimination elim = eliminate_brackets(g44, m);
    CHECK(elim.result == target44);
    CHECK(replay_switches(g44, m, elim.steps) == target44);
  }

  // An odd-height grid has several bracket-free matchings, so elimination
  // is basin-dependent there: the 11 matchings of grid(3,4) settle on
  // exactly these four fixpoints.
  Graph g34 = make_grid(3, 4);
  std::vector<Matching> fixpoints = {
      Matching::from_edges(g34, {Edge(0, 1), Edge(2, 3), Edge(4, 8),
                                 Edge(5, 9), Edge(6, 10), Edge(7, 11)}),
      Matching::from_edges(g34, {Edge(0, 1), Edge(2, 6), Edge(3, 7),
                                 Edge(4, 8), Edge(5, 9), Edge(10, 11)}),
      Matching::from_edges(g34, {Edge(0, 4), Edge(1, 5), Edge(2, 3),
                                 Edge(6, 10), Edge(7, 11), Edge(8, 9)}),
      Matching::from_edges(g34, {Edge(0, 4), Edge(1, 5), Edge(2, 6),
                                 Edge(3, 7), Edge(8, 9), Edge(10, 11)}),
  };
  for (const Matching& f : fixpoints) {
    CHECK(find_brackets(g34, f).empty());
    CHECK(eliminate_brackets(g34, f).steps.empty());
  }
  std::vector<int> basin_sizes(fixpoints.size(), 0);
  for (const Matching& m : all_perfect_matchings(g34)) {
    BracketElimination elim = eliminate_brackets(g34, m);
    CHECK(find_brackets(g34, elim.result).empty());
    CHECK(replay_switches(g34, m, elim.steps) == elim.result);
    for (std::size_t i = 0; i < fixpoints.size(); ++i) {
      if (elim.result == fixpoints[i]) {
        ++basin_sizes[i];
        break;
      }
    }
  }
  CHECK(basin_sizes == std::vector<int>{2, 2, 2, 5});
}

TEST_CASE("elimination canonicalises cut grids too") {
  Graph s = make_stop_sign(2, 1);
  std::vector<Matching> all = all_perfect_matchings(s);
  REQUIRE(!all.empty());
  Matching target = eliminate_brackets(s, all[0]).result;
  CHECK(find_brackets(s, target).empty());
  for (const Matching& m : all) {
    CHECK(eliminate_brackets(s, m).result == target);
  }
}

TEST_CASE("elimination requires column continuity") {
  Graph c = make_cylinder(2, 4);
  Matching m = Matching::from_edges(
      c, {Edge(0, 1), Edge(2, 3), Edge(4, 5), Edge(6, 7)});
  CHECK_THROWS_AS(eliminate_brackets(c, m), std::invalid_argument);
}

TEST_CASE("connecting matchings routes through the canonical form") {
  Graph g = make_grid(4, 4);
  Matching from = Matching::from_edges(
      g, {Edge(0, 1), Edge(2, 3), Edge(4, 8), Edge(5, 6), Edge(7, 11),
          Edge(9, 10), Edge(12, 13), Edge(14, 15)});
  Matching to = Matching::from_edges(
      g, {Edge(0, 1), Edge(2, 3), Edge(4, 5), Edge(6, 7), Edge(8, 9),
          Edge(10, 11), Edge(12, 13), Edge(14, 15)});
  std::vector<TwoSwitchStep> path = connect_matchings(g, from, to);
  CHECK(replay_switches(g, from, path) == to);
  CHECK(connect_matchings(g, from, from).empty());
  Matching vertical = all_vertical(g, 4, 4);
  CHECK(connect_matchings(g, vertical, vertical).empty());
}

TEST_CASE("connecting fails across elimination basins") {
  Graph g = make_grid(3, 4);
  Matching top = Matching::from_edges(
      g, {Edge(0, 1), Edge(2, 3), Edge(4, 8), Edge(5, 9), Edge(6, 10),
          Edge(7, 11)});
  Matching bottom = Matching::from_edges(
      g, {Edge(0, 4), Edge(1, 5), Edge(2, 6), Edge(3, 7), Edge(8, 9),
          Edge(10, 11)});
  CHECK_THROWS_AS(connect_matchings(g, top, bottom), std::logic_error);
}

TEST_CASE("forcing numbers along a connecting path sweep the spectrum") {
  Graph g = make_grid(6, 6);
  Matching from = all_horizontal_matching(g);
  Matching to = cacm_matching(g);
  std::vector<TwoSwitchStep> path = connect_matchings(g, from, to);
  Matching cur = from;
  std::set<int> seen{forcing_number(g, cur)};
  for (const TwoSwitchStep& step : path) {
    cur = apply_two_switch(g, cur, step);
    seen.insert(forcing_number(g, cur));
  }
  CHECK(cur == to);
  // Endpoints realise 9 and 3; each step moves the number by at most one,
  // so the whole range in between appears along the way.
  CHECK(seen == std::set<int>{3, 4, 5, 6, 7, 8, 9});
}
