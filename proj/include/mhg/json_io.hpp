#ifndef MHG_JSON_IO_HPP
#define MHG_JSON_IO_HPP

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#include "mhg/completion.hpp"
#include "mhg/families.hpp"
#include "mhg/graph.hpp"
#include "mhg/onedelta.hpp"
#include "mhg/oracle.hpp"
#include "mhg/witness.hpp"

namespace mhg {

/// Malformed graph file; the message names the offending line or field.
class GraphFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses {"n": N, "edges": [[u, v, label], ...]} with 0-based vertices.
/// Labels must be positive; range against delta is checked by the caller.
inline EdgeLabelledGraph parse_graph_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // Translate the byte offset into a line number.
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i) line += text[i] == '\n';
    throw GraphFormatError("line " + std::to_string(line) + ": " + e.what());
  }
  if (!j.is_object()) throw GraphFormatError("top level: expected an object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    throw GraphFormatError("field n: expected an integer");
  const auto n = j["n"].get<long long>();
  if (n < 0 || n > 4096) throw GraphFormatError("field n: out of range");
  EdgeLabelledGraph g(static_cast<int>(n));
  if (!j.contains("edges")) return g;
  const auto& edges = j["edges"];
  if (!edges.is_array()) throw GraphFormatError("field edges: expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "field edges[" + std::to_string(i) + "]";
    const auto& e = edges[i];
    if (!e.is_array() || e.size() != 3) throw GraphFormatError(where + ": expected [u, v, label]");
    for (std::size_t k = 0; k < 3; ++k)
      if (!e[k].is_number_integer())
        throw GraphFormatError(where + "[" + std::to_string(k) + "]: expected an integer");
    const auto u = e[0].get<long long>(), v = e[1].get<long long>(), l = e[2].get<long long>();
    if (u < 0 || u >= n) throw GraphFormatError(where + "[0]: vertex out of range");
    if (v < 0 || v >= n) throw GraphFormatError(where + "[1]: vertex out of range");
    if (u == v) throw GraphFormatError(where + ": self-loop");
    if (l < 1 || l > 255) throw GraphFormatError(where + "[2]: label must be positive");
    const int ui = static_cast<int>(u), vi = static_cast<int>(v);
    if (g.has_edge(ui, vi) && g.label(ui, vi) != l)
      throw GraphFormatError(where + ": pair already carries a different label");
    g.set_label(ui, vi, static_cast<int>(l));
  }
  return g;
}

inline EdgeLabelledGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphFormatError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_graph_json(ss.str());
}

inline nlohmann::json to_json(const EdgeLabelledGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e[0], e[1], e[2]});
  return {{"n", g.size()}, {"edges", edges}};
}

inline nlohmann::json to_json(const RawParams& p) {
  return nlohmann::json::array({p.delta, p.k1, p.k2, p.c0, p.c1});
}

inline nlohmann::json to_json(const CompletionTrace& t) {
  nlohmann::json stages = nlohmann::json::array();
  for (const auto& s : t.stages) {
    nlohmann::json pairs = nlohmann::json::array();
    for (auto [u, v] : s.pairs) pairs.push_back({u, v});
    stages.push_back({{"stage", s.index}, {"distance", s.distance}, {"pairs", pairs}});
  }
  nlohmann::json fallback = nlohmann::json::array();
  for (auto [u, v] : t.fallback_pairs) fallback.push_back({u, v});
  return {{"stages", stages}, {"fallback_pairs", fallback}};
}

inline nlohmann::json to_json(const FamilyWitness& w) {
  return {{"tag", std::string(to_string(w.tag))},
          {"n", w.n},
          {"d", w.d_edges},
          {"x", w.x_edges},
          {"k", w.k()}};
}

inline nlohmann::json to_json(const ForbiddenWitness& w) {
  return {{"walk", w.walk}, {"cycle", w.cycle.labels()}, {"witness", to_json(w.witness)}};
}

inline nlohmann::json to_json(const GraphRecord& r) {
  return {{"graph", to_json(r.graph)},
          {"completable", r.completable},
          {"witness", r.witness},
          {"magic_member", r.magic_member},
          {"fallback", r.fallback}};
}

inline nlohmann::json to_json(const EquivalenceReport& r) {
  const auto list = [](const std::vector<GraphRecord>& v) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& g : v) out.push_back(to_json(g));
    return out;
  };
  nlohmann::json j = {{"params", to_json(r.params)},
                      {"m", r.magic},
                      {"n_max", r.n_max},
                      {"mode", r.sampled ? "sample" : "exhaustive"},
                      {"iso_reduced", r.iso_reduced},
                      {"graphs_enumerated", r.graphs_enumerated},
                      {"graphs_checked", r.graphs_checked},
                      {"completable", r.completable},
                      {"mismatches", list(r.mismatches)},
                      {"magic_mismatches", list(r.magic_mismatches)},
                      {"fallback_events", r.fallback_events},
                      {"fallback_disagreements", r.fallback_disagreements},
                      {"fallback_samples", list(r.fallback_samples)}};
  if (r.sampled) j["seed"] = r.seed;
  return j;
}

inline nlohmann::json to_json(const OneDeltaTable& t) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& [cell, tag] : t.cells)
    cells.push_back({{"i", cell.first}, {"j", cell.second}, {"tag", std::string(to_string(tag))}});
  return {{"params", to_json(t.params)}, {"i_max", t.i_max}, {"j_max", t.j_max}, {"cells", cells}};
}

}  // namespace mhg

#endif  // MHG_JSON_IO_HPP
