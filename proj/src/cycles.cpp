#include "forcing/cycles.hpp"

#include <algorithm>

#include "cycles_internal.hpp"
#include <deque>
#include <functional>
#include <stdexcept>
#include <string>

namespace forcing {

AlternatingCycle::AlternatingCycle(const Graph& g, const Matching& m,
                                   std::vector<VertexId> vertices) {
  int len = static_cast<int>(vertices.size());
  if (len < 4 || len % 2 != 0) {
    throw std::invalid_argument("alternating cycle needs even length >= 4");
  }
  for (VertexId v : vertices) {
    if (v < 0 || v >= g.vertex_count()) {
      throw std::invalid_argument("cycle vertex out of range");
    }
  }
  {
    std::vector<VertexId> sorted(vertices);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("cycle repeats a vertex");
    }
  }
  bool prev_matched = false;
  for (int i = 0; i < len; ++i) {
    VertexId u = vertices[i];
    VertexId v = vertices[(i + 1) % len];
    if (!g.has_edge(u, v)) {
      throw std::invalid_argument("cycle uses a non-edge {" +
                                  std::to_string(u) + "," + std::to_string(v) +
                                  "}");
    }
    bool matched = m.partner(u) == v;
    if (i > 0 && matched == prev_matched) {
      throw std::invalid_argument("cycle edges do not alternate");
    }
    prev_matched = matched;
  }
  // len is even, so the wrap-around pair alternates iff all others do.

  auto min_it = std::min_element(vertices.begin(), vertices.end());
  int p = static_cast<int>(min_it - vertices.begin());
  VertexId succ = vertices[(p + 1) % len];
  VertexId pred = vertices[(p + len - 1) % len];
  int dir = succ < pred ? 1 : -1;
  vertices_.reserve(len);
  for (int i = 0; i < len; ++i) {
    vertices_.push_back(vertices[((p + dir * i) % len + len) % len]);
  }
  first_edge_matched_ = m.partner(vertices_[0]) == vertices_[1];
}

std::vector<Edge> AlternatingCycle::matching_edges() const {
  int len = length();
  std::vector<Edge> out;
  out.reserve(len / 2);
  for (int i = first_edge_matched_ ? 0 : 1; i < len + (first_edge_matched_ ? 0 : 1);
       i += 2) {
    out.emplace_back(vertices_[i % len], vertices_[(i + 1) % len]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Edge> AlternatingCycle::non_matching_edges() const {
  int len = length();
  std::vector<Edge> out;
  out.reserve(len / 2);
  for (int i = first_edge_matched_ ? 1 : 0; i < len + (first_edge_matched_ ? 1 : 0);
       i += 2) {
    out.emplace_back(vertices_[i % len], vertices_[(i + 1) % len]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool AlternatingCycle::uses_vertex(VertexId v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

bool AlternatingCycle::uses_matching_edge(const Edge& e) const {
  int len = length();
  for (int i = first_edge_matched_ ? 0 : 1; i < len + (first_edge_matched_ ? 0 : 1);
       i += 2) {
    Edge cur(vertices_[i % len], vertices_[(i + 1) % len]);
    if (cur == e) return true;
  }
  return false;
}

namespace {

std::vector<char> banned_from_edges(const Graph& g, const Matching& m,
                                    const std::vector<Edge>& avoid) {
  std::vector<char> banned(g.vertex_count(), 0);
  for (const Edge& e : avoid) {
    if (e.a < 0 || e.b >= g.vertex_count() || !m.contains(e)) {
      throw std::invalid_argument("avoided edge is not a matching edge");
    }
    banned[e.a] = banned[e.b] = 1;
  }
  return banned;
}

// Turns the state chain of a search rooted at matching edge (u0, v0) into
// the cycle's vertex sequence. Each state is the vertex reached after
// taking a matching edge, so the vertex entered just before state s is
// partner(s).
std::vector<VertexId> chain_to_cycle(const Matching& m, VertexId u0,
                                     const std::vector<VertexId>& states) {
  std::vector<VertexId> verts;
  verts.reserve(2 * states.size());
  verts.push_back(u0);
  for (VertexId s : states) {
    if (verts.size() > 1) verts.push_back(m.partner(s));
    verts.push_back(s);
  }
  return verts;
}

// Depth-first reachability over states with permanent marks. Sound only on
// bipartite graphs, where at most one direction of each matching edge is
// reachable from a fixed root.
bool dfs_marked(const Graph& g, const Matching& m,
                const std::vector<char>& banned, std::vector<char>& visited,
                VertexId u0, VertexId x, std::vector<VertexId>& states) {
  states.push_back(x);
  for (VertexId y : g.neighbors(x)) {
    if (y == m.partner(x)) continue;
    if (y == u0) return true;
    if (banned[y] || visited[y]) continue;
    VertexId z = m.partner(y);
    if (banned[z]) continue;
    visited[y] = 1;
    visited[z] = 1;
    if (dfs_marked(g, m, banned, visited, u0, z, states)) return true;
  }
  states.pop_back();
  return false;
}

// Exhaustive variant with marks undone on backtracking; complete on any
// graph and used both for non-bipartite inputs and for enumerating every
// cycle through a root. The visitor sees the state chain and returns false
// to stop the whole search.
bool dfs_exhaustive(const Graph& g, const Matching& m,
                    const std::vector<char>& banned, std::vector<char>& onpath,
                    VertexId u0, VertexId x, std::vector<VertexId>& states,
                    const std::function<bool(const std::vector<VertexId>&)>& visit) {
  states.push_back(x);
  bool keep_going = true;
  for (VertexId y : g.neighbors(x)) {
    if (y == m.partner(x)) continue;
    if (y == u0) {
      if (!visit(states)) {
        keep_going = false;
        break;
      }
      continue;
    }
    if (banned[y] || onpath[y]) continue;
    VertexId z = m.partner(y);
    if (banned[z] || onpath[z]) continue;
    onpath[y] = 1;
    onpath[z] = 1;
    keep_going = dfs_exhaustive(g, m, banned, onpath, u0, z, states, visit);
    onpath[y] = 0;
    onpath[z] = 0;
    if (!keep_going) break;
  }
  states.pop_back();
  return keep_going;
}

// Breadth-first shortest state chain from (u0, v0) back to u0; bipartite
// graphs only, for the same reason as dfs_marked.
std::optional<std::vector<VertexId>> bfs_shortest_chain(
    const Graph& g, const Matching& m, const std::vector<char>& banned,
    VertexId u0, VertexId v0, std::vector<char>& visited,
    std::vector<VertexId>& parent) {
  std::fill(visited.begin(), visited.end(), 0);
  visited[u0] = visited[v0] = 1;
  parent[v0] = -1;
  std::deque<VertexId> queue{v0};
  while (!queue.empty()) {
    VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : g.neighbors(x)) {
      if (y == m.partner(x)) continue;
      if (y == u0) {
        std::vector<VertexId> chain;
        for (VertexId s = x; s != -1; s = parent[s]) chain.push_back(s);
        std::reverse(chain.begin(), chain.end());
        return chain;
      }
      if (banned[y] || visited[y]) continue;
      VertexId z = m.partner(y);
      if (banned[z]) continue;
      visited[y] = 1;
      visited[z] = 1;
      parent[z] = x;
      queue.push_back(z);
    }
  }
  return std::nullopt;
}

}  // namespace

namespace internal {

std::optional<AlternatingCycle> find_cycle_banned(
    const Graph& g, const Matching& m, const std::vector<char>& banned,
    bool bipartite, bool shortest) {
  if (bipartite && shortest) {
    std::vector<char> visited(g.vertex_count(), 0);
    std::vector<VertexId> parent(g.vertex_count(), -1);
    std::optional<std::vector<VertexId>> best;
    VertexId best_root = -1;
    for (const Edge& e : m.edges()) {
      if (banned[e.a] || banned[e.b]) continue;
      auto chain = bfs_shortest_chain(g, m, banned, e.a, e.b, visited, parent);
      if (chain && (!best || chain->size() < best->size())) {
        best = std::move(chain);
        best_root = e.a;
        if (best->size() == 2) break;
      }
    }
    if (!best) return std::nullopt;
    return AlternatingCycle(g, m, chain_to_cycle(m, best_root, *best));
  }
  std::vector<char> marks(g.vertex_count(), 0);
  std::vector<VertexId> states;
  for (const Edge& e : m.edges()) {
    if (banned[e.a] || banned[e.b]) continue;
    states.clear();
    std::fill(marks.begin(), marks.end(), 0);
    marks[e.a] = marks[e.b] = 1;
    if (bipartite) {
      if (dfs_marked(g, m, banned, marks, e.a, e.b, states)) {
        return AlternatingCycle(g, m, chain_to_cycle(m, e.a, states));
      }
    } else {
      std::optional<std::vector<VertexId>> found;
      dfs_exhaustive(g, m, banned, marks, e.a, e.b, states,
                     [&found](const std::vector<VertexId>& chain) {
                       found = chain;
                       return false;
                     });
      if (found) {
        return AlternatingCycle(g, m, chain_to_cycle(m, e.a, *found));
      }
    }
  }
  return std::nullopt;
}

}  // namespace internal

std::optional<AlternatingCycle> find_alternating_cycle_avoiding(
    const Graph& g, const Matching& m, const std::vector<Edge>& avoid) {
  require_matching_of(g, m);
  return internal::find_cycle_banned(g, m, banned_from_edges(g, m, avoid),
                                     is_bipartite(g), false);
}

std::optional<AlternatingCycle> shortest_alternating_cycle_avoiding(
    const Graph& g, const Matching& m, const std::vector<Edge>& avoid) {
  require_matching_of(g, m);
  return internal::find_cycle_banned(g, m, banned_from_edges(g, m, avoid),
                                     is_bipartite(g), true);
}

std::vector<AlternatingCycle> alternating_cycles_through(
    const Graph& g, const Matching& m, const Edge& base,
    const std::vector<VertexId>& avoid_vertices) {
  require_matching_of(g, m);
  if (!m.contains(base)) {
    throw std::invalid_argument("base edge is not a matching edge");
  }
  std::vector<char> banned(g.vertex_count(), 0);
  for (VertexId v : avoid_vertices) {
    if (v < 0 || v >= g.vertex_count()) {
      throw std::invalid_argument("avoided vertex out of range");
    }
    banned[v] = 1;
  }
  std::vector<AlternatingCycle> out;
  if (banned[base.a] || banned[base.b]) return out;
  std::vector<char> onpath(g.vertex_count(), 0);
  onpath[base.a] = onpath[base.b] = 1;
  std::vector<VertexId> states;
  dfs_exhaustive(g, m, banned, onpath, base.a, base.b, states,
                 [&](const std::vector<VertexId>& chain) {
                   out.emplace_back(g, m, chain_to_cycle(m, base.a, chain));
                   return true;
                 });
  return out;
}

std::vector<AlternatingCycle> symmetric_difference_cycles(const Graph& g,
                                                          const Matching& m1,
                                                          const Matching& m2) {
  require_matching_of(g, m1);
  require_matching_of(g, m2);
  int n = g.vertex_count();
  std::vector<char> seen(n, 0);
  std::vector<AlternatingCycle> out;
  for (VertexId v0 = 0; v0 < n; ++v0) {
    if (seen[v0] || m1.partner(v0) == m2.partner(v0)) continue;
    std::vector<VertexId> walk;
    VertexId v = v0;
    bool take_m1 = true;
    do {
      walk.push_back(v);
      seen[v] = 1;
      v = take_m1 ? m1.partner(v) : m2.partner(v);
      take_m1 = !take_m1;
    } while (v != v0);
    out.emplace_back(g, m1, std::move(walk));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct PackContext {
  const Graph& g;
  const Matching& m;
  std::vector<char> blocked;
  int free_vertices = 0;
  std::vector<AlternatingCycle> chosen;
  std::vector<AlternatingCycle> best;
};

void pack_recurse(PackContext& ctx) {
  if (static_cast<int>(ctx.chosen.size()) + ctx.free_vertices / 4 <=
      static_cast<int>(ctx.best.size())) {
    return;
  }
  const Edge* branch = nullptr;
  for (const Edge& e : ctx.m.edges()) {
    if (!ctx.blocked[e.a] && !ctx.blocked[e.b]) {
      branch = &e;
      break;
    }
  }
  if (branch == nullptr) {
    if (ctx.chosen.size() > ctx.best.size()) ctx.best = ctx.chosen;
    return;
  }
  std::vector<char> onpath(ctx.blocked);
  onpath[branch->a] = onpath[branch->b] = 1;
  std::vector<AlternatingCycle> through;
  std::vector<VertexId> states;
  dfs_exhaustive(ctx.g, ctx.m, ctx.blocked, onpath, branch->a, branch->b,
                 states, [&](const std::vector<VertexId>& chain) {
                   through.emplace_back(
                       ctx.g, ctx.m,
                       chain_to_cycle(ctx.m, branch->a, chain));
                   return true;
                 });
  for (const AlternatingCycle& c : through) {
    for (VertexId v : c.vertices()) ctx.blocked[v] = 1;
    ctx.free_vertices -= c.length();
    ctx.chosen.push_back(c);
    pack_recurse(ctx);
    ctx.chosen.pop_back();
    ctx.free_vertices += c.length();
    for (VertexId v : c.vertices()) ctx.blocked[v] = 0;
  }
  ctx.blocked[branch->a] = ctx.blocked[branch->b] = 1;
  ctx.free_vertices -= 2;
  pack_recurse(ctx);
  ctx.free_vertices += 2;
  ctx.blocked[branch->a] = ctx.blocked[branch->b] = 0;
}

}  // namespace

CyclePacking max_disjoint_alternating_cycles(const Graph& g,
                                             const Matching& m) {
  require_matching_of(g, m);
  PackContext ctx{g, m, std::vector<char>(g.vertex_count(), 0),
                  g.vertex_count(), {}, {}};
  pack_recurse(ctx);
  return CyclePacking{std::move(ctx.best)};
}

Matching flip_cycle(const Graph& g, const Matching& m,
                    const AlternatingCycle& cycle) {
  require_matching_of(g, m);
  std::vector<Edge> drop = cycle.matching_edges();
  for (const Edge& e : drop) {
    if (!m.contains(e)) {
      throw std::invalid_argument("cycle is not alternating for this matching");
    }
  }
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> add = cycle.non_matching_edges();
  std::vector<Edge> next;
  next.reserve(m.edges().size());
  std::set_difference(m.edges().begin(), m.edges().end(), drop.begin(),
                      drop.end(), std::back_inserter(next));
  next.insert(next.end(), add.begin(), add.end());
  return Matching::from_edges(g, next);
}

}  // namespace forcing
