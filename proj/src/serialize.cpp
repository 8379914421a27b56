#include "forcing/serialize.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>

#include "json.hpp"

namespace forcing {

namespace {

using nlohmann::json;

json edges_to_json(const std::vector<Edge>& edges) {
  json arr = json::array();
  for (const Edge& e : edges) arr.push_back(json::array({e.a, e.b}));
  return arr;
}

std::vector<Edge> edges_from_json(const json& arr) {
  if (!arr.is_array()) throw std::invalid_argument("edge list must be an array");
  std::vector<Edge> edges;
  edges.reserve(arr.size());
  for (const json& item : arr) {
    if (!item.is_array() || item.size() != 2)
      throw std::invalid_argument("edge must be a pair of vertex ids");
    edges.emplace_back(item[0].get<VertexId>(), item[1].get<VertexId>());
  }
  return edges;
}

json graph_json(const Graph& g) {
  json j;
  j["family"] = g.family();
  json params = json::object();
  for (const auto& [key, value] : g.params()) params[key] = value;
  j["params"] = params;
  j["vertex_count"] = g.vertex_count();
  j["edges"] = edges_to_json(g.edges());
  j["planar"] = g.planar_certified();
  if (g.has_coords()) {
    json coords = json::array();
    for (const Coord& c : g.coords()) coords.push_back(json::array({c.row, c.col}));
    j["coords"] = coords;
    const GridMetric& m = g.metric();
    j["metric"] = {{"col_extent", m.col_extent},
                   {"row_extent", m.row_extent},
                   {"wrap_cols", m.wrap_cols},
                   {"wrap_rows", m.wrap_rows}};
  }
  return j;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string hex16(std::uint64_t value) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int t = 15; t >= 0; --t) {
    out[t] = digits[value & 0xf];
    value >>= 4;
  }
  return out;
}

void check_hash(const Graph& g, const json& j, const char* what) {
  if (!j.contains("graph_hash") || !j["graph_hash"].is_string())
    throw std::invalid_argument(std::string(what) + " lacks a graph_hash");
  std::string stored = j["graph_hash"].get<std::string>();
  std::string actual = graph_hash(g);
  if (stored != actual)
    throw HashMismatchError(std::string(what) + " belongs to graph " + stored +
                            ", not " + actual);
}

json step_to_json(const TwoSwitchStep& s) {
  json j;
  j["cycle"] = json::array({s.cycle[0], s.cycle[1], s.cycle[2], s.cycle[3]});
  j["removed"] = edges_to_json({s.removed[0], s.removed[1]});
  j["added"] = edges_to_json({s.added[0], s.added[1]});
  return j;
}

TwoSwitchStep step_from_json(const json& j) {
  if (!j.contains("cycle") || !j["cycle"].is_array() || j["cycle"].size() != 4)
    throw std::invalid_argument("step cycle must list four vertices");
  TwoSwitchStep s;
  for (int t = 0; t < 4; ++t) s.cycle[t] = j["cycle"][t].get<VertexId>();
  std::vector<Edge> removed = edges_from_json(j.at("removed"));
  std::vector<Edge> added = edges_from_json(j.at("added"));
  if (removed.size() != 2 || added.size() != 2)
    throw std::invalid_argument("step must remove and add two edges each");
  s.removed = {removed[0], removed[1]};
  s.added = {added[0], added[1]};
  return s;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string graph_hash(const Graph& g) {
  return hex16(fnv1a(graph_json(g).dump()));
}

std::string graph_to_json(const Graph& g) { return dump(graph_json(g)); }

Graph graph_from_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_object()) throw std::invalid_argument("graph file must be an object");
  for (const char* key : {"family", "params", "vertex_count", "edges", "planar"})
    if (!j.contains(key))
      throw std::invalid_argument(std::string("graph file lacks field ") + key);
  int n = j["vertex_count"].get<int>();
  std::vector<Edge> edges = edges_from_json(j["edges"]);
  std::string family = j["family"].get<std::string>();
  std::map<std::string, long long> params;
  for (const auto& [key, value] : j["params"].items())
    params[key] = value.get<long long>();
  std::optional<std::vector<Coord>> coords;
  GridMetric metric;
  if (j.contains("coords")) {
    std::vector<Coord> cs;
    for (const json& item : j["coords"]) {
      if (!item.is_array() || item.size() != 2)
        throw std::invalid_argument("coordinate must be a row/column pair");
      cs.push_back({item[0].get<int>(), item[1].get<int>()});
    }
    coords = std::move(cs);
    if (j.contains("metric")) {
      const json& mj = j["metric"];
      metric.wrap_rows = mj.at("wrap_rows").get<bool>();
      metric.wrap_cols = mj.at("wrap_cols").get<bool>();
      metric.row_extent = mj.at("row_extent").get<int>();
      metric.col_extent = mj.at("col_extent").get<int>();
    }
  }
  bool planar = j["planar"].get<bool>();
  return Graph(n, std::move(edges), std::move(family), std::move(params),
               std::move(coords), metric, planar);
}

std::string matching_to_json(const Graph& g, const Matching& m) {
  require_matching_of(g, m);
  json j;
  j["graph_hash"] = graph_hash(g);
  j["edges"] = edges_to_json(m.edges());
  return dump(j);
}

Matching matching_from_json(const Graph& g, const std::string& text) {
  json j = json::parse(text);
  if (!j.is_object())
    throw std::invalid_argument("matching file must be an object");
  check_hash(g, j, "matching");
  return Matching::from_edges(g, edges_from_json(j.at("edges")));
}

std::string certificate_to_json(const Graph& g, const Matching& m,
                                const ForcingCertificate& cert) {
  require_matching_of(g, m);
  json j;
  j["graph_hash"] = graph_hash(g);
  j["matching"] = edges_to_json(m.edges());
  j["forcing_set"] = edges_to_json(cert.forcing_set);
  j["forcing_number"] = cert.forcing_number;
  j["verified"] = cert.verified;
  if (cert.packing_number >= 0) j["packing_number"] = cert.packing_number;
  return dump(j);
}

ParsedCertificate certificate_from_json(const Graph& g,
                                        const std::string& text) {
  json j = json::parse(text);
  if (!j.is_object())
    throw std::invalid_argument("certificate file must be an object");
  check_hash(g, j, "certificate");
  ParsedCertificate out;
  out.matching = Matching::from_edges(g, edges_from_json(j.at("matching")));
  out.certificate.forcing_set = edges_from_json(j.at("forcing_set"));
  out.certificate.forcing_number = j.at("forcing_number").get<int>();
  out.certificate.verified = j.value("verified", false);
  out.certificate.packing_number = j.value("packing_number", -1);
  return out;
}

std::string switch_trace_to_json(const Graph& g, const Matching& start,
                                 const std::vector<TwoSwitchStep>& steps) {
  require_matching_of(g, start);
  json j;
  j["graph_hash"] = graph_hash(g);
  j["start"] = edges_to_json(start.edges());
  json arr = json::array();
  for (const TwoSwitchStep& s : steps) arr.push_back(step_to_json(s));
  j["steps"] = arr;
  return dump(j);
}

ParsedTrace switch_trace_from_json(const Graph& g, const std::string& text) {
  json j = json::parse(text);
  if (!j.is_object()) throw std::invalid_argument("trace file must be an object");
  check_hash(g, j, "trace");
  ParsedTrace out;
  out.start = Matching::from_edges(g, edges_from_json(j.at("start")));
  if (!j.contains("steps") || !j["steps"].is_array())
    throw std::invalid_argument("trace lacks a steps array");
  for (const json& item : j["steps"]) out.steps.push_back(step_from_json(item));
  return out;
}

std::string to_dot(const Graph& g, const Matching* m,
                   const std::vector<Edge>* highlight) {
  std::ostringstream out;
  out << "graph forcing {\n";
  out << "  node [shape=circle, fontsize=10, width=0.3, fixedsize=true];\n";
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v;
    if (g.has_coords()) {
      const Coord& c = g.coords()[v];
      out << " [pos=\"" << c.col << "," << -c.row << "!\"]";
    }
    out << ";\n";
  }
  for (const Edge& e : g.edges()) {
    bool matched = m != nullptr && m->contains(e);
    bool marked = highlight != nullptr &&
                  std::find(highlight->begin(), highlight->end(), e) !=
                      highlight->end();
    out << "  " << e.a << " -- " << e.b;
    if (matched || marked) {
      out << " [";
      if (matched) out << "penwidth=2.5";
      if (matched && marked) out << ", ";
      if (marked) out << "color=\"#d62728\"";
      out << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace forcing
