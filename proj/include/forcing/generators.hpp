#pragma once

#include <vector>

#include "forcing/graph.hpp"
#include "forcing/matching.hpp"

namespace forcing {

// Grid graph with `rows` x `cols` vertices, labelled row-major, coordinates
// 1-based with row 1 at the top.
Graph make_grid(int rows, int cols);

// Path of `rows` grid rows around a cycle of `cols` columns (cols >= 3).
Graph make_cylinder(int rows, int cols);

// Both directions wrap (rows, cols >= 3).
Graph make_torus(int rows, int cols);

// Cycle on n >= 3 vertices.
Graph make_cycle(int n);

// d-dimensional hypercube, d >= 1; vertices are bitmasks.
Graph make_hypercube(int d);

// 2n x 2n grid with a staircase of k(k+1)/2 vertices cut from each corner
// (the cells at L1 distance below k from the corner cell). Requires
// 1 <= k <= n - 1 so the cuts stay disjoint. Survivors keep their grid
// coordinates and are relabelled row-major.
Graph make_stop_sign(int n, int k);

// Even cycle 0..2n-1 where every second cycle edge {t, t+1} (t odd) gains a
// parallel two-vertex path t+1 - p - q - t. The even-position cycle edges
// {0,1}, {2,3}, ... form a perfect matching whose forcing number is 1; the
// graph's spectrum is {1, n}.
struct GadgetGraph {
  Graph graph;
  std::vector<Edge> forcing_edges;
};
GadgetGraph make_gadget_g(int n);

// Graph whose forcing spectrum is exactly the given set of positive
// integers. A singleton {m} becomes m disjoint 4-cycles; otherwise the
// values are shifted down so the smallest is 1, one gadget per remaining
// value is glued onto a common edge, and the shift is restored by adding
// disjoint 4-cycles.
Graph make_glued_spectrum_graph(std::vector<int> values);

// Keeps g as a subgraph and attaches a two-vertex path alongside every
// edge of g outside m, closing a 4-cycle with it. The minimum forcing
// number over all perfect matchings of the result equals f(g, m), which
// turns forcing-set search for one matching into forcing-number search
// over a whole graph. Requires g bipartite with max degree 3; the result
// is bipartite. gadget_edges lists the augmented edges of g in the order
// their path vertices were appended (edge s gets vertices n + 2s, n + 2s + 1).
struct ReductionH {
  Graph graph;
  std::vector<Edge> gadget_edges;
};
ReductionH make_reduction_h(const Graph& g, const Matching& m);

}  // namespace forcing
