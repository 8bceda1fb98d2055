#pragma once

#include <cstdio>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hyperarena/competition.hpp"
#include "hyperarena/error.hpp"
#include "hyperarena/graph.hpp"
#include "hyperarena/hypertournament.hpp"
#include "hyperarena/paths.hpp"
#include "hyperarena/verify.hpp"

namespace hyperarena {

inline constexpr std::string_view kFormatVersion = "1";

using Json = nlohmann::ordered_json;

namespace detail {

inline int read_int(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
    throw Error(ErrorCode::Format, std::string("expected integer field \"") + key + "\"");
  return j.at(key).get<int>();
}

inline VertexId read_label(const Json& j) {
  if (!j.is_number_integer()) throw Error(ErrorCode::Format, "vertex labels must be integers");
  const auto label = j.get<long long>();
  if (label < 1 || label > kMaxVertices) throw Error(ErrorCode::VertexOutOfRange, "label " + std::to_string(label));
  return VertexId::from_label(static_cast<int>(label));
}

inline Json arc_json(const Hypertournament& t, ArcId a) {
  Json arc = Json::array();
  for (VertexId v : t.arc(a)) arc.push_back(v.label());
  return arc;
}

}  // namespace detail

inline Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Format, e.what());
  }
}

// {"n":5,"k":3,"arcs":[[1,2,3],...]}, arcs in subset-rank order, labels 1-based.
inline Json instance_to_json(const Hypertournament& t) {
  Json j;
  j["n"] = t.n();
  j["k"] = t.k();
  Json arcs = Json::array();
  for (std::size_t a = 0; a < t.arc_count(); ++a) arcs.push_back(detail::arc_json(t, static_cast<ArcId>(a)));
  j["arcs"] = std::move(arcs);
  return j;
}

inline std::vector<std::vector<VertexId>> arcs_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("arcs") || !j.at("arcs").is_array()) throw Error(ErrorCode::Format, "expected array field \"arcs\"");
  std::vector<std::vector<VertexId>> arcs;
  for (const auto& arc : j.at("arcs")) {
    if (!arc.is_array()) throw Error(ErrorCode::Format, "each arc must be an array of labels");
    std::vector<VertexId> seq;
    for (const auto& v : arc) seq.push_back(detail::read_label(v));
    arcs.push_back(std::move(seq));
  }
  return arcs;
}

inline Hypertournament instance_from_json(const Json& j, BuildOptions options = {}) {
  const int n = detail::read_int(j, "n");
  const int k = detail::read_int(j, "k");
  auto arcs = arcs_from_json(j);
  return Hypertournament::build(n, k, arcs, options);
}

// {"n":5,"edges":[[1,2],...]}, edges sorted.
inline Json graph_to_json(const SimpleGraph& g) {
  Json j;
  j["n"] = g.n();
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({e.u.label(), e.v.label()}));
  j["edges"] = std::move(edges);
  return j;
}

inline SimpleGraph graph_from_json(const Json& j) {
  const int n = detail::read_int(j, "n");
  if (n < 0 || n > kMaxVertices) throw Error(ErrorCode::VertexCountOutOfRange, "n=" + std::to_string(n));
  if (!j.contains("edges") || !j.at("edges").is_array()) throw Error(ErrorCode::Format, "expected array field \"edges\"");
  SimpleGraph g(n);
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw Error(ErrorCode::Format, "each edge must be a pair of labels");
    g.add_edge(detail::read_label(e[0]), detail::read_label(e[1]));
  }
  return g;
}

// Every vertex is declared, so isolated vertices survive the round trip.
inline std::string graph_to_dot(const SimpleGraph& g) {
  std::string out = "graph {\n";
  for (int i = 1; i <= g.n(); ++i) out += "  v" + std::to_string(i) + ";\n";
  for (const Edge& e : g.edges()) out += "  v" + std::to_string(e.u.label()) + " -- v" + std::to_string(e.v.label()) + ";\n";
  out += "}\n";
  return out;
}

// Reads the subset emitted by graph_to_dot; n is the largest declared label.
inline SimpleGraph graph_from_dot(const std::string& text) {
  static const std::regex edge_re(R"(v(\d+)\s*--\s*v(\d+))");
  static const std::regex vertex_re(R"(\bv(\d+)\b)");
  if (text.find("graph") == std::string::npos || text.find('{') == std::string::npos)
    throw Error(ErrorCode::Format, "not an undirected DOT graph");
  int n = 0;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), vertex_re); it != std::sregex_iterator(); ++it)
    n = std::max(n, std::stoi((*it)[1].str()));
  if (n > kMaxVertices) throw Error(ErrorCode::VertexCountOutOfRange, "n=" + std::to_string(n));
  SimpleGraph g(n);
  for (auto it = std::sregex_iterator(text.begin(), text.end(), edge_re); it != std::sregex_iterator(); ++it)
    g.add_edge(VertexId::from_label(std::stoi((*it)[1].str())), VertexId::from_label(std::stoi((*it)[2].str())));
  return g;
}

inline Json path_to_json(const Hypertournament& t, const HyperPath& p) {
  Json j;
  Json vs = Json::array();
  for (VertexId v : p.vertices) vs.push_back(v.label());
  j["vertices"] = std::move(vs);
  Json arcs = Json::array();
  for (ArcId a : p.arcs) arcs.push_back(detail::arc_json(t, a));
  j["arcs"] = std::move(arcs);
  return j;
}

inline Json witness_to_json(const Hypertournament& t, VertexId x, VertexId y, int i, int j,
                            const std::optional<CompetitionWitness>& w) {
  Json out;
  out["x"] = x.label();
  out["y"] = y.label();
  out["i"] = i;
  out["j"] = j;
  out["competes"] = w.has_value();
  if (w) {
    out["target"] = w->target.label();
    out["P"] = path_to_json(t, w->from_x);
    out["Q"] = path_to_json(t, w->from_y);
  }
  return out;
}

// "CompleteMinusP3 missing [1-2, 2-3]"; CliquePlusIsolated also names the isolated vertex.
inline std::string shape_to_string(const ShapeClass& s) {
  std::string out(to_string(s.tag));
  if (s.isolated_vertex) out += " isolated " + std::to_string(s.isolated_vertex->label());
  if (!s.missing_edges.empty()) {
    out += " missing [";
    for (std::size_t i = 0; i < s.missing_edges.size(); ++i) {
      if (i) out += ", ";
      out += std::to_string(s.missing_edges[i].u.label()) + "-" + std::to_string(s.missing_edges[i].v.label());
    }
    out += "]";
  }
  return out;
}

inline Json report_to_json(const VerificationReport& r, bool include_elapsed = false) {
  Json j;
  j["format_version"] = std::string(kFormatVersion);
  j["source"] = r.source;
  j["n"] = r.n;
  j["k"] = r.k;
  j["first_index"] = r.first_index;
  j["end_index"] = r.end_index;
  j["instance_count"] = r.instance_count;
  j["strong_count"] = r.strong_count;
  j["dominance_strong_count"] = r.dominance_strong_count;
  Json shapes = Json::object();
  for (ShapeTag t : kAllShapeTags) shapes[std::string(to_string(t))] = r.shape_histogram.count(t) ? r.shape_histogram.at(t) : 0;
  j["shape_histogram"] = std::move(shapes);
  Json cases = Json::object();
  for (MissingCase c : kAllMissingCases) {
    if (c == MissingCase::NotMissing) continue;
    cases[std::string(to_string(c))] = r.missing_case_histogram.count(c) ? r.missing_case_histogram.at(c) : 0;
  }
  j["missing_case_histogram"] = std::move(cases);
  j["checks_run"] = r.checks_run;
  j["failure_count"] = r.failure_count;
  Json failures = Json::array();
  for (const auto& f : r.failures) {
    Json fj;
    fj["index"] = f.index;
    fj["check"] = f.check;
    fj["detail"] = f.detail;
    fj["instance"] = instance_to_json(f.instance);
    failures.push_back(std::move(fj));
  }
  j["failures"] = std::move(failures);
  j["passed"] = r.passed();
  if (include_elapsed) j["elapsed_seconds"] = r.elapsed_seconds;
  return j;
}

inline std::string report_table(const VerificationReport& r) {
  std::ostringstream os;
  char line[160];
  os << "source " << r.source << "  n=" << r.n << " k=" << r.k << "  indices [" << r.first_index << ", " << r.end_index << ")\n";
  os << "instances " << r.instance_count << "  strong " << r.strong_count << "  dominance-strong " << r.dominance_strong_count
     << "\n";
  os << "C12 shapes:\n";
  for (ShapeTag t : kAllShapeTags) {
    auto it = r.shape_histogram.find(t);
    std::snprintf(line, sizeof line, "  %-22s %12llu\n", std::string(to_string(t)).c_str(),
                  static_cast<unsigned long long>(it == r.shape_histogram.end() ? 0 : it->second));
    os << line;
  }
  os << "missing-edge cases:\n";
  for (MissingCase c : kAllMissingCases) {
    if (c == MissingCase::NotMissing) continue;
    auto it = r.missing_case_histogram.find(c);
    std::snprintf(line, sizeof line, "  %-22s %12llu\n", std::string(to_string(c)).c_str(),
                  static_cast<unsigned long long>(it == r.missing_case_histogram.end() ? 0 : it->second));
    os << line;
  }
  os << "checks:";
  for (const auto& c : r.checks_run) os << " " << c;
  os << "\nfailures " << r.failure_count << (r.passed() ? "  PASS" : "  FAIL");
  std::snprintf(line, sizeof line, "  (%.2f s)\n", r.elapsed_seconds);
  os << line;
  for (const auto& f : r.failures) os << "  #" << f.index << " " << f.check << ": " << f.detail << "\n";
  return os.str();
}

}  // namespace hyperarena
