#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "forcing/brackets.hpp"
#include "forcing/graph.hpp"
#include "forcing/matching.hpp"
#include "forcing/solver.hpp"

namespace forcing {

// Raised when a file names a different graph than the one supplied.
struct HashMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// 16 lowercase hex digits identifying the graph's canonical JSON form.
std::string graph_hash(const Graph& g);

// Canonical JSON with sorted keys and a trailing newline; parsing and
// re-serializing reproduces the bytes exactly.
std::string graph_to_json(const Graph& g);
Graph graph_from_json(const std::string& text);

// Matching files carry the owning graph's hash and are refused against a
// different graph.
std::string matching_to_json(const Graph& g, const Matching& m);
Matching matching_from_json(const Graph& g, const std::string& text);

// Certificate: matching, forcing set, forcing number, verification flag;
// the packing number appears only when it was computed.
std::string certificate_to_json(const Graph& g, const Matching& m,
                                const ForcingCertificate& cert);
struct ParsedCertificate {
  Matching matching;
  ForcingCertificate certificate;
};
ParsedCertificate certificate_from_json(const Graph& g,
                                        const std::string& text);

// 2-switch trace: the starting matching plus the steps in order.
std::string switch_trace_to_json(const Graph& g, const Matching& start,
                                 const std::vector<TwoSwitchStep>& steps);
struct ParsedTrace {
  Matching start;
  std::vector<TwoSwitchStep> steps;
};
ParsedTrace switch_trace_from_json(const Graph& g, const std::string& text);

// Graphviz rendering. Coordinates pin the layout when present; matching
// edges are drawn heavy, highlighted edges additionally in colour.
std::string to_dot(const Graph& g, const Matching* m = nullptr,
                   const std::vector<Edge>* highlight = nullptr);

}  // namespace forcing
