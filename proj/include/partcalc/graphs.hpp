#pragma once

#include <cstddef>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "block.hpp"
#include "core_ops.hpp"
#include "error.hpp"
#include "lie.hpp"
#include "lincomb.hpp"
#include "partition.hpp"

// Graphs as half-edge sets: a pairing map σ and one or two vertex partitions.
// Vertices are blocks of half-edges; σ-orbits of size two are internal lines,
// fixed points are external legs.

namespace partcalc {

// An involution on a finite carrier, stored as a total atom-to-atom map.
// Construction rejects contradictory pairings outright; the graph-level
// clauses are checked by validate(), which reports rather than throws.
class StructureMap {
 public:
  StructureMap() = default;

  StructureMap(const std::vector<std::pair<Atom, Atom>>& pairs, const Block& fixed) {
    for (auto [e, f] : pairs) {
      bind(e, f);
      bind(f, e);
    }
    for (Atom e : fixed) bind(e, e);
    std::vector<Atom> atoms;
    atoms.reserve(map_.size());
    for (const auto& [e, f] : map_) {
      (void)f;
      atoms.push_back(e);
    }
    carrier_ = Block(std::move(atoms));
  }

  const Block& carrier() const { return carrier_; }
  bool empty() const { return map_.empty(); }

  Atom apply(Atom e) const {
    auto it = map_.find(e);
    if (it == map_.end())
      fail(errc::invalid_graph, "half-edge " + std::to_string(e) + " outside the carrier");
    return it->second;
  }

  bool is_involution() const {
    for (const auto& [e, f] : map_) {
      auto back = map_.find(f);
      if (back == map_.end() || back->second != e) return false;
    }
    return true;
  }

  Block fixed_points() const {
    std::vector<Atom> out;
    for (const auto& [e, f] : map_)
      if (e == f) out.push_back(e);
    return Block(std::move(out));
  }

  // Size-2 orbits as (smaller, larger), ascending.
  std::vector<std::pair<Atom, Atom>> pairs() const {
    std::vector<std::pair<Atom, Atom>> out;
    for (const auto& [e, f] : map_)
      if (e < f) out.emplace_back(e, f);
    return out;
  }

  Block image(const Block& b) const {
    std::vector<Atom> out;
    out.reserve(b.size());
    for (Atom e : b) out.push_back(apply(e));
    return Block(std::move(out));
  }

  // Restriction to a σ-closed subset of the carrier.
  StructureMap restricted(const Block& keep) const {
    StructureMap out;
    for (Atom e : keep) {
      Atom f = apply(e);
      if (!keep.contains(f))
        fail(errc::invalid_graph,
             "restriction severs pair (" + std::to_string(e) + "," + std::to_string(f) + ")");
      out.map_[e] = f;
    }
    out.carrier_ = keep;
    return out;
  }

  StructureMap disjoint_union(const StructureMap& other) const {
    if (carrier_.intersects(other.carrier_))
      fail(errc::ranges_not_disjoint, "structure maps share half-edges");
    StructureMap out = *this;
    out.map_.insert(other.map_.begin(), other.map_.end());
    out.carrier_ |= other.carrier_;
    return out;
  }

  friend bool operator==(const StructureMap&, const StructureMap&) = default;

 private:
  void bind(Atom e, Atom f) {
    auto [it, fresh] = map_.emplace(e, f);
    if (!fresh && it->second != f)
      fail(errc::validation_error,
           "half-edge " + std::to_string(e) + " paired twice in structure map");
  }

  Block carrier_;
  std::map<Atom, Atom> map_;
};

struct FeynmanDiagram {
  StructureMap sigma;
  Partition vertices;
  friend bool operator==(const FeynmanDiagram&, const FeynmanDiagram&) = default;
};

struct OrdinaryGraph {
  StructureMap sigma;
  Partition vertices;
  friend bool operator==(const OrdinaryGraph&, const OrdinaryGraph&) = default;
};

struct AdmissibleGraph {
  StructureMap sigma;
  Partition first_type;
  Partition second_type;
  friend bool operator==(const AdmissibleGraph&, const AdmissibleGraph&) = default;
};

// A formal combination of graphs sharing one structure map; only the vertex
// partitions vary (this is the only addition the graph span admits).
struct GraphLinComb {
  StructureMap sigma;
  LinComb<Partition> terms;
};

namespace detail {
inline void check_base(const StructureMap& sigma, const Partition& vertices,
                       std::vector<std::string>& out) {
  if (!sigma.is_involution()) out.push_back("structure map is not an involution");
  if (!(vertices.range() == sigma.carrier()))
    out.push_back("vertex blocks do not cover the carrier exactly");
}
}  // namespace detail

inline std::vector<std::string> validate(const FeynmanDiagram& g) {
  std::vector<std::string> out;
  detail::check_base(g.sigma, g.vertices, out);
  return out;
}

inline std::vector<std::string> validate(const OrdinaryGraph& g) {
  std::vector<std::string> out;
  detail::check_base(g.sigma, g.vertices, out);
  if (!g.sigma.fixed_points().empty()) out.push_back("fixed point in ordinary graph");
  return out;
}

inline std::vector<std::string> validate(const AdmissibleGraph& g) {
  std::vector<std::string> out;
  Block icar = g.first_type.range();
  Block jcar = g.second_type.range();
  if (icar.intersects(jcar)) out.push_back("first and second type vertices share half-edges");
  if (!g.sigma.is_involution()) out.push_back("structure map is not an involution");
  if (!((icar | jcar) == g.sigma.carrier()))
    out.push_back("vertex blocks do not cover the carrier exactly");
  if (!out.empty()) return out;  // clause checks below need a usable σ
  if (!g.sigma.fixed_points().empty()) out.push_back("fixed point in admissible graph");
  for (const auto& ii : g.first_type.blocks())
    if (g.sigma.image(ii).intersects(ii)) out.push_back("tadpole at vertex " + ii.str());
  if (g.sigma.image(jcar).intersects(jcar))
    out.push_back("edge between second-type vertices");
  const auto& first = g.first_type.blocks();
  for (std::size_t i = 0; i < first.size(); ++i) {
    Block img = g.sigma.image(first[i]);
    for (std::size_t i2 = 0; i2 < first.size(); ++i2)
      if (i2 != i && (img & first[i2]).size() > 1)
        out.push_back("multiple edges between " + first[i].str() + " and " + first[i2].str());
    for (const auto& jj : g.second_type.blocks())
      if ((img & jj).size() > 1)
        out.push_back("multiple edges between " + first[i].str() + " and " + jj.str());
  }
  return out;
}

namespace detail {
template <class G>
void require_valid(const G& g, const char* who) {
  auto v = validate(g);
  if (v.empty()) return;
  std::string msg = std::string(who) + ":";
  for (const auto& s : v) msg += " " + s + ";";
  msg.pop_back();
  fail(errc::invalid_graph, msg);
}
}  // namespace detail

struct GraphLines {
  Block external;
  std::vector<std::pair<Atom, Atom>> internal;
};

inline GraphLines lines(const FeynmanDiagram& g) {
  detail::require_valid(g, "lines");
  return GraphLines{g.sigma.fixed_points(), g.sigma.pairs()};
}

inline GraphLines lines(const OrdinaryGraph& g) {
  detail::require_valid(g, "lines");
  return GraphLines{Block{}, g.sigma.pairs()};
}

// Oriented out of first-type vertices; for a line between two first-type
// vertices the smaller half-edge starts.
inline GraphLines lines(const AdmissibleGraph& g) {
  detail::require_valid(g, "lines");
  Block icar = g.first_type.range();
  GraphLines out;
  for (auto [e, f] : g.sigma.pairs()) {
    if (!icar.contains(e)) std::swap(e, f);
    out.internal.emplace_back(e, f);
  }
  return out;
}

namespace detail {
inline bool connected_blocks(const std::vector<Block>& blocks, const StructureMap& sigma) {
  if (blocks.size() <= 1) return true;
  std::vector<std::size_t> parent(blocks.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto block_of = [&](Atom e) {
    for (std::size_t i = 0; i < blocks.size(); ++i)
      if (blocks[i].contains(e)) return i;
    fail(errc::invalid_graph, "half-edge outside every vertex");
  };
  for (auto [e, f] : sigma.pairs()) parent[find(block_of(e))] = find(block_of(f));
  std::size_t root = find(0);
  for (std::size_t i = 1; i < blocks.size(); ++i)
    if (find(i) != root) return false;
  return true;
}
}  // namespace detail

inline bool is_connected(const FeynmanDiagram& g) {
  detail::require_valid(g, "is_connected");
  return detail::connected_blocks(g.vertices.blocks(), g.sigma);
}

inline bool is_connected(const OrdinaryGraph& g) {
  detail::require_valid(g, "is_connected");
  return detail::connected_blocks(g.vertices.blocks(), g.sigma);
}

inline bool is_connected(const AdmissibleGraph& g) {
  detail::require_valid(g, "is_connected");
  std::vector<Block> all = g.first_type.blocks();
  for (const auto& b : g.second_type.blocks()) all.push_back(b);
  return detail::connected_blocks(all, g.sigma);
}

namespace detail {
inline Block selection_union(const Partition& vertices, const std::vector<std::size_t>& sel,
                             const char* who) {
  Block j;
  for (std::size_t idx : sel) {
    if (idx >= vertices.size())
      fail(errc::bad_selection, std::string(who) + ": vertex index " + std::to_string(idx));
    if (j.intersects(vertices.blocks()[idx]))
      fail(errc::bad_selection, std::string(who) + ": vertex selected twice");
    j |= vertices.blocks()[idx];
  }
  return j;
}
}  // namespace detail

// Keeps every half-edge of the selected vertices; lines leaving the selection
// are severed into external legs.
inline FeynmanDiagram subgraph(const FeynmanDiagram& g, const std::vector<std::size_t>& sel) {
  detail::require_valid(g, "subgraph");
  Block j = detail::selection_union(g.vertices, sel, "subgraph");
  std::vector<std::pair<Atom, Atom>> pairs;
  std::vector<Atom> fixed;
  for (Atom e : j) {
    Atom f = g.sigma.apply(e);
    if (f == e || !j.contains(f))
      fixed.push_back(e);
    else if (e < f)
      pairs.emplace_back(e, f);
  }
  std::vector<Block> blocks;
  blocks.reserve(sel.size());
  for (std::size_t idx : sel) blocks.push_back(g.vertices.blocks()[idx]);
  return FeynmanDiagram{StructureMap(pairs, Block(std::move(fixed))),
                        Partition(std::move(blocks))};
}

// Keeps only the lines internal to the selection; severed lines are deleted
// and vertex blocks shrink accordingly (emptied vertices disappear).
inline OrdinaryGraph subgraph(const OrdinaryGraph& g, const std::vector<std::size_t>& sel) {
  detail::require_valid(g, "subgraph");
  Block j = detail::selection_union(g.vertices, sel, "subgraph");
  std::vector<Atom> keep;
  for (Atom e : j)
    if (j.contains(g.sigma.apply(e))) keep.push_back(e);
  Block jprime(std::move(keep));
  std::vector<Block> blocks;
  for (std::size_t idx : sel) {
    Block t = g.vertices.blocks()[idx] & jprime;
    if (!t.empty()) blocks.push_back(std::move(t));
  }
  return OrdinaryGraph{g.sigma.restricted(jprime), Partition(std::move(blocks))};
}

// First-type vertices keep the half-edges whose lines stay inside the
// selection; second-type vertices keep the half-edges hit from the selected
// first-type side, and must each be hit at least once.
inline AdmissibleGraph subgraph(const AdmissibleGraph& g, const std::vector<std::size_t>& sel_first,
                                const std::vector<std::size_t>& sel_second) {
  detail::require_valid(g, "subgraph");
  Block l = detail::selection_union(g.first_type, sel_first, "subgraph");
  Block k = detail::selection_union(g.second_type, sel_second, "subgraph");
  Block sigma_l = g.sigma.image(l);
  for (std::size_t idx : sel_second)
    if (!g.second_type.blocks()[idx].intersects(sigma_l))
      fail(errc::bad_selection, "subgraph: second-type vertex " +
                                    g.second_type.blocks()[idx].str() +
                                    " receives no line from the selection");
  Block kept_l = (sigma_l | g.sigma.image(k)) & l;
  std::vector<Block> first;
  for (std::size_t idx : sel_first) {
    Block t = g.first_type.blocks()[idx] & kept_l;
    if (!t.empty()) first.push_back(std::move(t));
  }
  std::vector<Block> second;
  for (std::size_t idx : sel_second)
    second.push_back(g.second_type.blocks()[idx] & sigma_l);
  Block carrier = kept_l;
  for (const auto& b : second) carrier |= b;
  return AdmissibleGraph{g.sigma.restricted(carrier), Partition(std::move(first)),
                         Partition(std::move(second))};
}

namespace detail {
template <class G>
void require_connected_ambient(const G& g, const char* who) {
  if (!is_connected(g)) fail(errc::disconnected, std::string(who) + ": graph is disconnected");
}
}  // namespace detail

// Contract the selected (connected) subgraph to a single vertex: its internal
// half-edges vanish and the touched vertices merge.
inline FeynmanDiagram quotient_graph(const FeynmanDiagram& g,
                                     const std::vector<std::size_t>& sel) {
  detail::require_valid(g, "quotient_graph");
  detail::require_connected_ambient(g, "quotient_graph");
  FeynmanDiagram sub = subgraph(g, sel);
  if (!is_connected(sub))
    fail(errc::disconnected, "quotient_graph: selected subgraph is disconnected");
  Block j = sub.vertices.range();
  std::vector<Atom> internal;
  for (Atom e : j) {
    Atom f = g.sigma.apply(e);
    if (f != e && j.contains(f)) internal.push_back(e);
  }
  Block jprime(std::move(internal));
  return FeynmanDiagram{g.sigma.restricted(g.sigma.carrier() - jprime),
                        quotient(g.vertices, jprime).partition};
}

inline OrdinaryGraph quotient_graph(const OrdinaryGraph& g, const std::vector<std::size_t>& sel) {
  detail::require_valid(g, "quotient_graph");
  detail::require_connected_ambient(g, "quotient_graph");
  OrdinaryGraph sub = subgraph(g, sel);
  if (!is_connected(sub))
    fail(errc::disconnected, "quotient_graph: selected subgraph is disconnected");
  Block jprime = sub.vertices.range();
  return OrdinaryGraph{g.sigma.restricted(g.sigma.carrier() - jprime),
                       quotient(g.vertices, jprime).partition};
}

// Contract an admissible subgraph. The contraction can create double lines or
// a line between second-type vertices even when every input is valid; the
// result is re-checked and such contractions are refused.
inline AdmissibleGraph quotient_graph(const AdmissibleGraph& g,
                                      const std::vector<std::size_t>& sel_first,
                                      const std::vector<std::size_t>& sel_second) {
  detail::require_valid(g, "quotient_graph");
  detail::require_connected_ambient(g, "quotient_graph");
  AdmissibleGraph sub = subgraph(g, sel_first, sel_second);
  if (!is_connected(sub))
    fail(errc::disconnected, "quotient_graph: selected subgraph is disconnected");
  Block lprime = sub.first_type.range();
  Block kprime = sub.second_type.range();
  AdmissibleGraph out{
      g.sigma.restricted(g.sigma.carrier() - (lprime | kprime)),
      quotient(g.first_type, lprime).partition,
      quotient(g.second_type, kprime).partition};
  auto v = validate(out);
  if (!v.empty()) {
    std::string msg = "quotient_graph:";
    for (const auto& s : v) msg += " " + s + ";";
    msg.pop_back();
    fail(errc::result_not_admissible, msg);
  }
  return out;
}

// Fold contraction over the connected components of a disconnected selection.
// Components are resolved by block content, since contracting one component
// leaves the others' vertices intact.
template <class G>
G quotient_disconnected(const G& g, const std::vector<std::vector<std::size_t>>& components) {
  detail::require_valid(g, "quotient_disconnected");
  std::vector<std::vector<Block>> content;
  content.reserve(components.size());
  for (const auto& comp : components) {
    std::vector<Block> blocks;
    for (std::size_t idx : comp) {
      if (idx >= g.vertices.size())
        fail(errc::bad_selection, "quotient_disconnected: vertex index " + std::to_string(idx));
      blocks.push_back(g.vertices.blocks()[idx]);
    }
    content.push_back(std::move(blocks));
  }
  G cur = g;
  for (const auto& blocks : content) {
    std::vector<std::size_t> sel;
    for (const auto& b : blocks) {
      std::size_t idx = cur.vertices.find_block(b);
      if (idx == Partition::npos)
        fail(errc::bad_selection,
             "quotient_disconnected: component vertex " + b.str() + " not intact");
      sel.push_back(idx);
    }
    cur = quotient_graph(cur, sel);
  }
  return cur;
}

// Replace host vertex `a` by the guest, gluing the two pairings. The bridge
// to the partition calculus is definitional: the vertex partition of the
// result is exactly insert(host.vertices, a, guest.vertices, ι).
template <class G>
G insert_graph(const G& host, std::size_t a, const G& guest, const InsertionMap& iota) {
  detail::require_valid(host, "insert_graph");
  detail::require_valid(guest, "insert_graph");
  return G{host.sigma.disjoint_union(guest.sigma),
           insert(host.vertices, a, guest.vertices, iota)};
}

enum class InsertMode { paired, trivial_second };

// Insertion for the two-type kind: first-type partitions always compose at
// (a, ι); the second-type either composes at (b, κ) or the guest's blocks are
// appended unchanged. Validity of the assembled graph is not automatic.
inline AdmissibleGraph insert_admissible(const AdmissibleGraph& host, const AdmissibleGraph& guest,
                                         InsertMode mode, std::size_t a, const InsertionMap& iota,
                                         std::size_t b = 0, const InsertionMap& kappa = {}) {
  detail::require_valid(host, "insert_admissible");
  detail::require_valid(guest, "insert_admissible");
  AdmissibleGraph out;
  out.sigma = host.sigma.disjoint_union(guest.sigma);
  out.first_type = insert(host.first_type, a, guest.first_type, iota);
  out.second_type = mode == InsertMode::paired
                        ? insert(host.second_type, b, guest.second_type, kappa)
                        : trivial_insert(host.second_type, guest.second_type);
  auto v = validate(out);
  if (!v.empty()) {
    std::string msg = "insert_admissible:";
    for (const auto& s : v) msg += " " + s + ";";
    msg.pop_back();
    fail(errc::result_not_admissible, msg);
  }
  return out;
}

// The bracket lifted to graphs: every insertion of one vertex partition into
// the other, under the glued pairing. The lift is checked against the bracket
// computed on the partitions alone before returning.
template <class G>
GraphLinComb bracket_graphs(const G& g1, const G& g2) {
  detail::require_valid(g1, "bracket_graphs");
  detail::require_valid(g2, "bracket_graphs");
  if (g1.vertices.empty() || g2.vertices.empty())
    fail(errc::empty_operand, "bracket_graphs: graph without vertices");
  GraphLinComb out;
  out.sigma = g1.sigma.disjoint_union(g2.sigma);
  for (std::size_t a = 0; a < g1.vertices.size(); ++a)
    for (const auto& m : enumerate_insertions(g1.vertices, a, g2.vertices))
      out.terms.add(insert_graph(g1, a, g2, m).vertices, 1);
  for (std::size_t b = 0; b < g2.vertices.size(); ++b)
    for (const auto& m : enumerate_insertions(g2.vertices, b, g1.vertices))
      out.terms.add(insert_graph(g2, b, g1, m).vertices, -1);
  if (!(out.terms == bracket(g1.vertices, g2.vertices)))
    fail(errc::validation_error, "bracket_graphs: lift disagrees with the partition bracket");
  return out;
}

}  // namespace partcalc
