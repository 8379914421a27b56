#include "forcing/matching.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace forcing {

namespace {

void check_edges_exist(const Graph& g, const std::vector<Edge>& edges) {
  for (const Edge& e : edges) {
    if (e.a < 0 || e.b >= g.vertex_count() || !g.has_edge(e.a, e.b)) {
      throw std::invalid_argument("matching edge {" + std::to_string(e.a) +
                                  "," + std::to_string(e.b) +
                                  "} is not an edge of the graph");
    }
  }
}

}  // namespace

Matching Matching::from_edges(const Graph& g, const std::vector<Edge>& edges) {
  check_edges_exist(g, edges);
  Matching m;
  m.partner_.assign(g.vertex_count(), -1);
  for (const Edge& e : edges) {
    if (m.partner_[e.a] != -1 || m.partner_[e.b] != -1) {
      throw std::invalid_argument("matching edges overlap at a vertex");
    }
    m.partner_[e.a] = e.b;
    m.partner_[e.b] = e.a;
  }
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (m.partner_[v] == -1) {
      throw std::invalid_argument("matching does not cover vertex " +
                                  std::to_string(v));
    }
  }
  m.edges_ = edges;
  std::sort(m.edges_.begin(), m.edges_.end());
  return m;
}

bool Matching::contains(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Matching::index_of(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || *it != e) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::uint64_t Matching::digest() const {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  mix(static_cast<std::uint64_t>(partner_.size()));
  for (const Edge& e : edges_) {
    mix(static_cast<std::uint64_t>(e.a));
    mix(static_cast<std::uint64_t>(e.b));
  }
  return h;
}

bool is_perfect_matching(const Graph& g, const std::vector<Edge>& edges) {
  check_edges_exist(g, edges);
  std::vector<char> covered(g.vertex_count(), 0);
  for (const Edge& e : edges) {
    if (covered[e.a] || covered[e.b]) return false;
    covered[e.a] = covered[e.b] = 1;
  }
  return std::find(covered.begin(), covered.end(), 0) == covered.end();
}

void require_matching_of(const Graph& g, const Matching& m) {
  if (m.vertex_count() != g.vertex_count()) {
    throw std::invalid_argument("matching covers " +
                                std::to_string(m.vertex_count()) +
                                " vertices but the graph has " +
                                std::to_string(g.vertex_count()));
  }
  check_edges_exist(g, m.edges());
}

namespace {

bool enumerate_from(const Graph& g, std::vector<char>& covered,
                    std::vector<Edge>& chosen, int start,
                    const std::function<bool(const Matching&)>& visit) {
  int n = g.vertex_count();
  VertexId u = start;
  while (u < n && covered[u]) ++u;
  if (u == n) {
    return visit(Matching::from_edges(g, chosen));
  }
  covered[u] = 1;
  for (VertexId w : g.neighbors(u)) {
    if (covered[w]) continue;
    covered[w] = 1;
    chosen.emplace_back(u, w);
    bool keep_going = enumerate_from(g, covered, chosen, u + 1, visit);
    chosen.pop_back();
    covered[w] = 0;
    if (!keep_going) {
      covered[u] = 0;
      return false;
    }
  }
  covered[u] = 0;
  return true;
}

}  // namespace

bool enumerate_perfect_matchings(
    const Graph& g, const std::function<bool(const Matching&)>& visit) {
  return enumerate_perfect_matchings_containing(g, {}, visit);
}

bool enumerate_perfect_matchings_containing(
    const Graph& g, const std::vector<Edge>& required,
    const std::function<bool(const Matching&)>& visit) {
  if (g.vertex_count() % 2 != 0) return true;
  check_edges_exist(g, required);
  std::vector<char> covered(g.vertex_count(), 0);
  std::vector<Edge> chosen;
  chosen.reserve(g.vertex_count() / 2);
  for (const Edge& e : required) {
    if (covered[e.a] || covered[e.b]) {
      throw std::invalid_argument("required edges overlap at a vertex");
    }
    covered[e.a] = covered[e.b] = 1;
    chosen.push_back(e);
  }
  return enumerate_from(g, covered, chosen, 0, visit);
}

std::vector<Matching> all_perfect_matchings(const Graph& g) {
  std::vector<Matching> out;
  enumerate_perfect_matchings(g, [&out](const Matching& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

std::uint64_t count_perfect_matchings(const Graph& g) {
  return count_perfect_matchings_containing(g, {});
}

std::uint64_t count_perfect_matchings_containing(
    const Graph& g, const std::vector<Edge>& required) {
  std::uint64_t n = 0;
  enumerate_perfect_matchings_containing(g, required, [&n](const Matching&) {
    ++n;
    return true;
  });
  return n;
}

}  // namespace forcing
