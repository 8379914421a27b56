#pragma once

#include <vector>

#include "forcing/graph.hpp"
#include "forcing/matching.hpp"

namespace forcing {

// Nested-ring matching of an even x even grid: the outermost ring matches
// its first and last rows horizontally and the rest of its first and last
// columns vertically, and the construction recurses on the inner grid.
// Every ring is an alternating cycle of the result.
Matching cacm_matching(const Graph& grid);

// Nested-ring matchings for odd-row grids, obtained from the matching of
// the one-row-taller even grid by dropping the first row (ucacm, remaining
// rows shift up) or the last row (dcacm).
Matching ucacm_matching(const Graph& grid);
Matching dcacm_matching(const Graph& grid);

// Forcing set of cacm_matching(grid) with cols/2 edges: the top-left
// horizontal edge of each full ring plus the top row of the central
// two-row band. Requires cols >= rows.
std::vector<Edge> cacm_forcing_set(const Graph& grid);

// Matches every vertex to its right-hand neighbour, pairing each row's
// columns as (1,2), (3,4), ... Works on any coordinate-carrying graph
// whose rows are contiguous runs of even length (grids, cylinders, cut
// grids).
Matching all_horizontal_matching(const Graph& g);

// Banded matchings with small forcing sets on grids. The even-height
// family lives on grid(2k, (2k+1)l + r): l evenly spaced columns (plus the
// last column when r is odd) are matched vertically and the gaps carry
// nested-ring blocks. The odd-height family lives on
// grid(2k+1, (2k+2)l + 2r) and is split into l blocks matched by ucacm
// and dcacm alternately. forcing_set holds the per-block staircases; its
// size is banded_even_bound / banded_odd_bound.
struct BandedInstance {
  Graph grid;
  Matching matching;
  std::vector<Edge> forcing_set;
};
BandedInstance make_banded_even(int k, int l, int r);  // k >= 1, l >= 1, 0 <= r <= 2k
BandedInstance make_banded_odd(int k, int l, int r);   // k >= 0, l >= 1, 0 <= 2r <= 2k+1

int banded_even_bound(int k, int l, int r);  // k*l + ceil((r-1)/2)
int banded_odd_bound(int k, int l, int r);   // k*l + r

}  // namespace forcing
