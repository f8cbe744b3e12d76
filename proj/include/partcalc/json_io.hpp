#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "coalgebra.hpp"
#include "graphs.hpp"
#include "lie.hpp"
#include "lincomb.hpp"
#include "partition.hpp"

// JSON front-end. Atoms travel as strings; the core library only ever sees
// dense integer ids. A LabelTable owns the mapping for one invocation: collect
// every label that appears anywhere in the inputs, finalize, then parse. Ids
// follow label order (numeric labels by value, then everything else bytewise),
// so canonical core order and human label order agree and output bytes are a
// pure function of the input.

namespace partcalc {

using json = nlohmann::ordered_json;

class LabelTable {
 public:
  void collect(const std::string& label) {
    if (finalized_) fail(errc::validation_error, "label table already finalized");
    seen_.insert(label);
  }

  void finalize() {
    std::vector<std::string> labels(seen_.begin(), seen_.end());
    std::sort(labels.begin(), labels.end(), label_less);
    for (auto& l : labels) {
      ids_.emplace(l, static_cast<Atom>(labels_.size()));
      labels_.push_back(l);
    }
    finalized_ = true;
  }

  bool finalized() const { return finalized_; }
  std::size_t size() const { return labels_.size(); }

  Atom atom(const std::string& label) const {
    auto it = ids_.find(label);
    if (it == ids_.end()) fail(errc::validation_error, "unknown atom label \"" + label + "\"");
    return it->second;
  }

  const std::string& label(Atom a) const {
    if (a >= labels_.size()) fail(errc::validation_error, "atom id out of table range");
    return labels_[a];
  }

  // Numeric labels sort by value and come first; ties (leading zeros) and
  // everything else fall back to bytewise order.
  static bool label_less(const std::string& a, const std::string& b) {
    bool na = is_numeric(a), nb = is_numeric(b);
    if (na != nb) return na;
    if (na) {
      std::string_view sa = stripped(a), sb = stripped(b);
      if (sa.size() != sb.size()) return sa.size() < sb.size();
      if (sa != sb) return sa < sb;
    }
    return a < b;
  }

 private:
  static bool is_numeric(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  }

  static std::string_view stripped(const std::string& s) {
    std::size_t i = 0;
    while (i + 1 < s.size() && s[i] == '0') ++i;
    return std::string_view(s).substr(i);
  }

  std::set<std::string> seen_;
  std::map<std::string, Atom> ids_;
  std::vector<std::string> labels_;
  bool finalized_ = false;
};

// Wraps the underlying JSON parser so syntax errors surface with line/column.
inline json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1, col = 1;
    std::size_t stop = e.byte == 0 ? 0 : e.byte - 1;
    for (std::size_t i = 0; i < stop && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    fail(errc::parse_error,
         "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + e.what());
  }
}

enum class DocKind { partition, tuple, feynman, ordinary, admissible, lincomb };

inline const char* dockind_name(DocKind k) {
  switch (k) {
    case DocKind::partition: return "partition";
    case DocKind::tuple: return "tuple";
    case DocKind::feynman: return "feynman";
    case DocKind::ordinary: return "ordinary";
    case DocKind::admissible: return "admissible";
    case DocKind::lincomb: return "lincomb";
  }
  return "?";
}

inline std::optional<DocKind> dockind_from_name(const std::string& s) {
  if (s == "partition") return DocKind::partition;
  if (s == "tuple") return DocKind::tuple;
  if (s == "feynman") return DocKind::feynman;
  if (s == "ordinary") return DocKind::ordinary;
  if (s == "admissible") return DocKind::admissible;
  if (s == "lincomb") return DocKind::lincomb;
  return std::nullopt;
}

// Shape-based kind inference for bare payloads. Graphs are objects keyed by
// "sigma"; "second_type" marks admissible and the presence of "fixed" (even
// empty) marks Feynman, which is also what keeps print/parse round trips
// kind-stable. Arrays nest one level deeper per kind: blocks of strings make
// a partition, partitions make a tuple, and objects make a lincomb. The empty
// array is the empty partition.
inline DocKind infer_kind(const json& j) {
  if (j.is_object()) {
    if (!j.contains("sigma")) fail(errc::validation_error, "object document without \"sigma\"");
    if (j.contains("second_type")) return DocKind::admissible;
    if (j.contains("fixed")) return DocKind::feynman;
    return DocKind::ordinary;
  }
  if (!j.is_array()) fail(errc::validation_error, "document must be a JSON array or object");
  if (j.empty()) return DocKind::partition;
  const json& head = j.front();
  if (head.is_object()) return DocKind::lincomb;
  if (!head.is_array() || head.empty())
    fail(errc::validation_error, "document element must be a nonempty array or an object");
  if (head.front().is_string()) return DocKind::partition;
  if (head.front().is_array()) return DocKind::tuple;
  fail(errc::validation_error, "cannot infer document kind");
}

namespace detail {

inline std::string atom_string(const json& j) {
  if (!j.is_string()) fail(errc::validation_error, "atom must be a JSON string");
  return j.get<std::string>();
}

inline void collect_block(const json& j, LabelTable& lt) {
  if (!j.is_array()) fail(errc::validation_error, "block must be an array of atom strings");
  for (const auto& a : j) lt.collect(atom_string(a));
}

inline void collect_partition(const json& j, LabelTable& lt) {
  if (!j.is_array()) fail(errc::validation_error, "partition must be an array of blocks");
  for (const auto& b : j) collect_block(b, lt);
}

}  // namespace detail

// First pass over a document: registers every atom label it mentions.
inline void collect_labels(const json& j, DocKind kind, LabelTable& lt) {
  switch (kind) {
    case DocKind::partition:
      detail::collect_partition(j, lt);
      return;
    case DocKind::tuple: {
      if (!j.is_array()) fail(errc::validation_error, "tuple must be an array of partitions");
      for (const auto& p : j) detail::collect_partition(p, lt);
      return;
    }
    case DocKind::lincomb: {
      if (!j.is_array()) fail(errc::validation_error, "lincomb must be an array of terms");
      for (const auto& t : j) {
        if (!t.is_object() || !t.contains("term"))
          fail(errc::validation_error, "lincomb term must be an object with \"term\"");
        detail::collect_partition(t.at("term"), lt);
      }
      return;
    }
    case DocKind::feynman:
    case DocKind::ordinary:
    case DocKind::admissible: {
      if (!j.is_object() || !j.contains("sigma"))
        fail(errc::validation_error, "graph document must be an object with \"sigma\"");
      const json& sigma = j.at("sigma");
      if (!sigma.is_array()) fail(errc::validation_error, "\"sigma\" must be an array of pairs");
      for (const auto& pr : sigma) {
        if (!pr.is_array() || pr.size() != 2)
          fail(errc::validation_error, "\"sigma\" entries must be two-element arrays");
        lt.collect(detail::atom_string(pr[0]));
        lt.collect(detail::atom_string(pr[1]));
      }
      if (j.contains("fixed")) detail::collect_block(j.at("fixed"), lt);
      if (j.contains("vertices")) detail::collect_partition(j.at("vertices"), lt);
      if (j.contains("second_type")) detail::collect_partition(j.at("second_type"), lt);
      return;
    }
  }
}

// Registers the keys of an insertion-map document (values are block indices).
inline void collect_map_labels(const json& j, LabelTable& lt) {
  if (!j.is_object()) fail(errc::validation_error, "insertion map must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    lt.collect(key);
  }
}

inline Block parse_block(const json& j, const LabelTable& lt) {
  if (!j.is_array()) fail(errc::validation_error, "block must be an array of atom strings");
  std::vector<Atom> atoms;
  atoms.reserve(j.size());
  for (const auto& a : j) atoms.push_back(lt.atom(detail::atom_string(a)));
  std::sort(atoms.begin(), atoms.end());
  if (std::adjacent_find(atoms.begin(), atoms.end()) != atoms.end())
    fail(errc::validation_error, "duplicate atom in block");
  return Block(std::move(atoms));
}

inline Partition parse_partition(const json& j, const LabelTable& lt) {
  if (!j.is_array()) fail(errc::validation_error, "partition must be an array of blocks");
  std::vector<Block> blocks;
  blocks.reserve(j.size());
  for (const auto& b : j) blocks.push_back(parse_block(b, lt));
  return Partition(std::move(blocks));
}

inline PartitionTuple parse_tuple(const json& j, const LabelTable& lt) {
  if (!j.is_array()) fail(errc::validation_error, "tuple must be an array of partitions");
  std::vector<Partition> parts;
  parts.reserve(j.size());
  for (const auto& p : j) parts.push_back(parse_partition(p, lt));
  return PartitionTuple(std::move(parts));
}

inline InsertionMap parse_insertion_map(const json& j, const LabelTable& lt) {
  if (!j.is_object()) fail(errc::validation_error, "insertion map must be a JSON object");
  InsertionMap iota;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_unsigned())
      fail(errc::validation_error, "insertion map values must be nonnegative block indices");
    iota[lt.atom(key)] = value.get<std::size_t>();
  }
  return iota;
}

inline Rational parse_rational(const json& j) {
  if (!j.is_string()) fail(errc::validation_error, "coefficient must be an \"n/d\" string");
  const std::string s = j.get<std::string>();
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t digits = 0;
  while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i, ++digits;
  if (digits == 0) fail(errc::validation_error, "bad coefficient \"" + s + "\"");
  if (i != s.size()) {
    if (s[i] != '/') fail(errc::validation_error, "bad coefficient \"" + s + "\"");
    std::size_t d = ++i;
    while (i < s.size() && s[i] >= '0' && s[i] <= '9') ++i;
    if (i != s.size() || i == d) fail(errc::validation_error, "bad coefficient \"" + s + "\"");
    if (std::all_of(s.begin() + d, s.end(), [](char c) { return c == '0'; }))
      fail(errc::validation_error, "zero denominator in \"" + s + "\"");
  }
  return s[0] == '+' ? Rational(s.substr(1)) : Rational(s);
}

inline LinComb<Partition> parse_lincomb(const json& j, const LabelTable& lt) {
  if (!j.is_array()) fail(errc::validation_error, "lincomb must be an array of terms");
  LinComb<Partition> out;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("coeff") || !t.contains("term"))
      fail(errc::validation_error, "lincomb term must be {\"coeff\", \"term\"}");
    out.add(parse_partition(t.at("term"), lt), parse_rational(t.at("coeff")));
  }
  return out;
}

namespace detail {

inline StructureMap parse_structure_map(const json& j, const LabelTable& lt, bool allow_fixed) {
  std::vector<std::pair<Atom, Atom>> pairs;
  for (const auto& pr : j.at("sigma"))
    pairs.emplace_back(lt.atom(atom_string(pr[0])), lt.atom(atom_string(pr[1])));
  Block fixed;
  if (j.contains("fixed")) {
    fixed = parse_block(j.at("fixed"), lt);
    if (!allow_fixed && !fixed.empty())
      fail(errc::validation_error, "this graph kind admits no fixed half-edges");
  }
  return StructureMap(pairs, fixed);
}

template <class G>
G checked(G g) {
  auto problems = validate(g);
  if (!problems.empty()) {
    std::string msg = problems.front();
    for (std::size_t i = 1; i < problems.size(); ++i) msg += "; " + problems[i];
    fail(errc::validation_error, msg);
  }
  return g;
}

}  // namespace detail

inline FeynmanDiagram parse_feynman(const json& j, const LabelTable& lt) {
  if (!j.contains("vertices")) fail(errc::validation_error, "graph document without \"vertices\"");
  return detail::checked(FeynmanDiagram{detail::parse_structure_map(j, lt, true),
                                        parse_partition(j.at("vertices"), lt)});
}

inline OrdinaryGraph parse_ordinary(const json& j, const LabelTable& lt) {
  if (!j.contains("vertices")) fail(errc::validation_error, "graph document without \"vertices\"");
  return detail::checked(OrdinaryGraph{detail::parse_structure_map(j, lt, false),
                                       parse_partition(j.at("vertices"), lt)});
}

inline AdmissibleGraph parse_admissible(const json& j, const LabelTable& lt) {
  if (!j.contains("vertices") || !j.contains("second_type"))
    fail(errc::validation_error, "admissible graph needs \"vertices\" and \"second_type\"");
  return detail::checked(AdmissibleGraph{detail::parse_structure_map(j, lt, false),
                                         parse_partition(j.at("vertices"), lt),
                                         parse_partition(j.at("second_type"), lt)});
}

inline json print_block(const Block& b, const LabelTable& lt) {
  json out = json::array();
  for (Atom a : b) out.push_back(lt.label(a));
  return out;
}

inline json print_partition(const Partition& p, const LabelTable& lt) {
  json out = json::array();
  for (const auto& b : p.canonical_blocks()) out.push_back(print_block(b, lt));
  return out;
}

// Block order as stored; only the signed composition's outputs need this.
inline json print_partition_stored(const Partition& p, const LabelTable& lt) {
  json out = json::array();
  for (const auto& b : p.blocks()) out.push_back(print_block(b, lt));
  return out;
}

inline json print_tuple(const PartitionTuple& t, const LabelTable& lt) {
  json out = json::array();
  for (const auto& p : t.parts()) out.push_back(print_partition(p, lt));
  return out;
}

inline json print_sigma(const StructureMap& sigma, const LabelTable& lt) {
  json pairs = json::array();
  for (auto [e, f] : sigma.pairs()) pairs.push_back(json::array({lt.label(e), lt.label(f)}));
  return pairs;
}

inline json print_feynman(const FeynmanDiagram& g, const LabelTable& lt) {
  json out = json::object();
  out["sigma"] = print_sigma(g.sigma, lt);
  out["fixed"] = print_block(g.sigma.fixed_points(), lt);
  out["vertices"] = print_partition(g.vertices, lt);
  return out;
}

inline json print_ordinary(const OrdinaryGraph& g, const LabelTable& lt) {
  json out = json::object();
  out["sigma"] = print_sigma(g.sigma, lt);
  out["vertices"] = print_partition(g.vertices, lt);
  return out;
}

inline json print_admissible(const AdmissibleGraph& g, const LabelTable& lt) {
  json out = json::object();
  out["sigma"] = print_sigma(g.sigma, lt);
  out["vertices"] = print_partition(g.first_type, lt);
  out["second_type"] = print_partition(g.second_type, lt);
  return out;
}

template <class T, class PrintTerm>
json print_lincomb(const LinComb<T>& lc, PrintTerm&& print_term) {
  json out = json::array();
  for (const auto& [term, coeff] : lc.terms()) {
    json entry = json::object();
    entry["coeff"] = rational_str(coeff);
    entry["term"] = print_term(term);
    out.push_back(std::move(entry));
  }
  return out;
}

inline json print_lincomb_partitions(const LinComb<Partition>& lc, const LabelTable& lt) {
  return print_lincomb(lc, [&](const Partition& p) { return print_partition(p, lt); });
}

inline json print_tensor_term(const TensorTerm& t, const LabelTable& lt) {
  json out = json::object();
  out["left"] = print_tuple(t.left, lt);
  out["right"] = print_tuple(t.right, lt);
  return out;
}

inline json print_graph_lincomb(const GraphLinComb& glc, const LabelTable& lt) {
  json out = json::object();
  out["sigma"] = print_sigma(glc.sigma, lt);
  out["fixed"] = print_block(glc.sigma.fixed_points(), lt);
  out["terms"] =
      print_lincomb(glc.terms, [&](const Partition& p) { return print_partition(p, lt); });
  return out;
}

// One parsed input of any kind, used by the round-trip machinery.
struct ParsedDocument {
  DocKind kind;
  std::variant<Partition, PartitionTuple, FeynmanDiagram, OrdinaryGraph, AdmissibleGraph,
               LinComb<Partition>>
      value;
};

inline ParsedDocument parse_document(const json& j, DocKind kind, const LabelTable& lt) {
  switch (kind) {
    case DocKind::partition: return {kind, parse_partition(j, lt)};
    case DocKind::tuple: return {kind, parse_tuple(j, lt)};
    case DocKind::feynman: return {kind, parse_feynman(j, lt)};
    case DocKind::ordinary: return {kind, parse_ordinary(j, lt)};
    case DocKind::admissible: return {kind, parse_admissible(j, lt)};
    case DocKind::lincomb: return {kind, parse_lincomb(j, lt)};
  }
  fail(errc::validation_error, "unreachable document kind");
}

inline json print_document(const ParsedDocument& doc, const LabelTable& lt) {
  switch (doc.kind) {
    case DocKind::partition: return print_partition(std::get<Partition>(doc.value), lt);
    case DocKind::tuple: return print_tuple(std::get<PartitionTuple>(doc.value), lt);
    case DocKind::feynman: return print_feynman(std::get<FeynmanDiagram>(doc.value), lt);
    case DocKind::ordinary: return print_ordinary(std::get<OrdinaryGraph>(doc.value), lt);
    case DocKind::admissible: return print_admissible(std::get<AdmissibleGraph>(doc.value), lt);
    case DocKind::lincomb: return print_lincomb_partitions(std::get<LinComb<Partition>>(doc.value), lt);
  }
  fail(errc::validation_error, "unreachable document kind");
}

// Parse with a fresh label table, print back. Canonicalizes; a second pass is
// the identity on the bytes (parse∘print∘parse = parse).
inline std::string canonical_text(const std::string& text) {
  json j = parse_text(text);
  DocKind kind = infer_kind(j);
  LabelTable lt;
  collect_labels(j, kind, lt);
  lt.finalize();
  ParsedDocument doc = parse_document(j, kind, lt);
  return print_document(doc, lt).dump();
}

}  // namespace partcalc
