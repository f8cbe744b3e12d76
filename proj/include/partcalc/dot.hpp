#pragma once

#include <map>
#include <sstream>
#include <string>

#include "graphs.hpp"
#include "json_io.hpp"

// DOT rendering. One node per vertex block, labeled by its atoms; internal
// lines become edges, external half-edges become edges to invisible point
// stubs. Admissible graphs render as digraphs with every line leaving its
// first-type endpoint, and second-type vertices drawn as boxes. Node ids are
// canonical block indices, so output is deterministic.

namespace partcalc {

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string block_label(const Block& b, const LabelTable& lt) {
  std::string out;
  for (Atom a : b) {
    if (!out.empty()) out += ',';
    out += lt.label(a);
  }
  return out;
}

// Emits node declarations for a partition, naming nodes prefix0, prefix1, …
// in canonical block order and returning the names keyed by atom.
inline void dot_nodes(std::ostringstream& os, const Partition& p, const LabelTable& lt,
                      const std::string& prefix, const std::string& attrs,
                      std::map<Atom, std::string>& node_of) {
  auto blocks = p.canonical_blocks();
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    std::string name = prefix + std::to_string(i);
    os << "  " << name << " [label=" << dot_quote(block_label(blocks[i], lt)) << attrs << "];\n";
    for (Atom a : blocks[i]) node_of[a] = name;
  }
}

}  // namespace detail

inline std::string export_dot(const FeynmanDiagram& g, const LabelTable& lt) {
  detail::require_valid(g, "export_dot");
  std::ostringstream os;
  os << "graph partcalc {\n";
  std::map<Atom, std::string> node_of;
  detail::dot_nodes(os, g.vertices, lt, "v", "", node_of);
  GraphLines ls = lines(g);
  std::size_t stub = 0;
  for (Atom e : ls.external) {
    std::string name = "x" + std::to_string(stub++);
    os << "  " << name << " [shape=point,label=\"\"];\n";
    os << "  " << node_of.at(e) << " -- " << name << " [label=" << detail::dot_quote(lt.label(e))
       << "];\n";
  }
  for (auto [e, f] : ls.internal)
    os << "  " << node_of.at(e) << " -- " << node_of.at(f)
       << " [label=" << detail::dot_quote(lt.label(e) + "-" + lt.label(f)) << "];\n";
  os << "}\n";
  return os.str();
}

inline std::string export_dot(const OrdinaryGraph& g, const LabelTable& lt) {
  detail::require_valid(g, "export_dot");
  std::ostringstream os;
  os << "graph partcalc {\n";
  std::map<Atom, std::string> node_of;
  detail::dot_nodes(os, g.vertices, lt, "v", "", node_of);
  for (auto [e, f] : lines(g).internal)
    os << "  " << node_of.at(e) << " -- " << node_of.at(f)
       << " [label=" << detail::dot_quote(lt.label(e) + "-" + lt.label(f)) << "];\n";
  os << "}\n";
  return os.str();
}

inline std::string export_dot(const AdmissibleGraph& g, const LabelTable& lt) {
  detail::require_valid(g, "export_dot");
  std::ostringstream os;
  os << "digraph partcalc {\n";
  std::map<Atom, std::string> node_of;
  detail::dot_nodes(os, g.first_type, lt, "p", "", node_of);
  detail::dot_nodes(os, g.second_type, lt, "q", ",shape=box", node_of);
  for (auto [e, f] : lines(g).internal)
    os << "  " << node_of.at(e) << " -> " << node_of.at(f)
       << " [label=" << detail::dot_quote(lt.label(e) + "-" + lt.label(f)) << "];\n";
  os << "}\n";
  return os.str();
}

}  // namespace partcalc
