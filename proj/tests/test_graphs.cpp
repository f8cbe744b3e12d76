#include <string>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include <partcalc/dot.hpp>
#include <partcalc/graphs.hpp>

#include "test_util.hpp"

using namespace partcalc;
using testutil::thrown;

namespace {

using Pairs = std::vector<std::pair<Atom, Atom>>;

FeynmanDiagram feyn(Pairs pairs, Block fixed, Partition vertices) {
  return FeynmanDiagram{StructureMap(pairs, fixed), std::move(vertices)};
}

OrdinaryGraph ord(Pairs pairs, Partition vertices) {
  return OrdinaryGraph{StructureMap(pairs, Block{}), std::move(vertices)};
}

AdmissibleGraph adm(Pairs pairs, Partition first, Partition second) {
  return AdmissibleGraph{StructureMap(pairs, Block{}), std::move(first), std::move(second)};
}

// A wedge: one first-type vertex with a line to each of two second-type ones.
AdmissibleGraph wedge() {
  return adm({{1, 3}, {2, 4}}, Partition{Block{1, 2}}, Partition{Block{3}, Block{4}});
}

}  // namespace

TEST_CASE("structure maps are checked involutions over their carrier", "[graphs]") {
  StructureMap s({{1, 2}}, Block{3});
  REQUIRE(s.is_involution());
  REQUIRE(s.carrier() == Block{1, 2, 3});
  REQUIRE(s.fixed_points() == Block{3});
  REQUIRE(s.pairs() == Pairs{{1, 2}});
  REQUIRE(s.apply(1) == 2);
  REQUIRE(thrown([&] { s.apply(9); }) == errc::invalid_graph);
  REQUIRE(thrown([] { StructureMap({{1, 2}, {1, 3}}, Block{}); }) == errc::validation_error);
  REQUIRE(thrown([&] { s.restricted(Block{1}); }) == errc::invalid_graph);
  REQUIRE(s.restricted(Block{1, 2}).fixed_points().empty());
}

TEST_CASE("validation checks the vertex cover and the kind clauses", "[graphs]") {
  REQUIRE(validate(feyn({{1, 2}}, Block{3}, Partition{Block{1, 3}, Block{2}})).empty());
  auto cover = validate(feyn({{1, 2}}, Block{}, Partition{Block{1}}));
  REQUIRE_FALSE(cover.empty());

  auto fixed = validate(ord({{1, 2}}, Partition{Block{1, 2, 3}}));
  REQUIRE(fixed.empty() == false);

  REQUIRE(validate(wedge()).empty());
  auto tadpole = validate(adm({{1, 2}, {3, 4}}, Partition{Block{1, 2}, Block{3}},
                              Partition{Block{4}}));
  REQUIRE_FALSE(tadpole.empty());
  auto doubled = validate(adm({{1, 3}, {2, 4}}, Partition{Block{1, 2}}, Partition{Block{3, 4}}));
  REQUIRE_FALSE(doubled.empty());
  auto second_edge = validate(adm({{1, 3}, {2, 4}, {5, 6}},
                                  Partition{Block{1, 2}},
                                  Partition{Block{3, 5}, Block{4, 6}}));
  REQUIRE_FALSE(second_edge.empty());
}

TEST_CASE("lines split the pairing into internal pairs and external legs", "[graphs]") {
  GraphLines fl = lines(feyn({{1, 2}, {3, 4}}, Block{5, 6},
                             Partition{Block{1, 3, 5}, Block{2, 4, 6}}));
  REQUIRE(fl.external == Block{5, 6});
  REQUIRE(fl.internal == Pairs{{1, 2}, {3, 4}});

  GraphLines ol = lines(ord({{1, 2}}, Partition{Block{1}, Block{2}}));
  REQUIRE(ol.external.empty());

  GraphLines al = lines(wedge());
  REQUIRE(al.internal == Pairs{{1, 3}, {2, 4}});
}

TEST_CASE("connectivity is vertex connectivity through internal lines", "[graphs]") {
  REQUIRE(is_connected(ord({{1, 2}}, Partition{Block{1}, Block{2}})));
  REQUIRE_FALSE(is_connected(feyn({}, Block{1, 2}, Partition{Block{1}, Block{2}})));
  REQUIRE(is_connected(ord({{1, 2}, {3, 4}, {5, 6}},
                           Partition{Block{1, 6}, Block{2, 3}, Block{4, 5}})));
  REQUIRE(is_connected(wedge()));
}

TEST_CASE("subgraphs keep every half-edge and sever crossing lines", "[graphs]") {
  FeynmanDiagram g = feyn({{1, 2}, {3, 4}, {5, 6}}, Block{7, 8},
                          Partition{Block{1, 3, 7}, Block{2, 5}, Block{4, 6, 8}});
  FeynmanDiagram sub = subgraph(g, {0, 2});
  REQUIRE(sub.sigma.pairs() == Pairs{{3, 4}});
  REQUIRE(sub.sigma.fixed_points() == Block{1, 6, 7, 8});
  REQUIRE(sub.vertices == Partition{Block{1, 3, 7}, Block{4, 6, 8}});

  REQUIRE(subgraph(g, {0, 1, 2}) == g);
  REQUIRE(thrown([&] { subgraph(g, {0, 0}); }) == errc::bad_selection);
  REQUIRE(thrown([&] { subgraph(g, {3}); }) == errc::bad_selection);
}

TEST_CASE("contraction merges the selection and drops its internal lines", "[graphs]") {
  FeynmanDiagram g = feyn({{1, 2}, {3, 4}, {5, 6}}, Block{7, 8},
                          Partition{Block{1, 3, 7}, Block{2, 5}, Block{4, 6, 8}});
  FeynmanDiagram q = quotient_graph(g, {0, 2});
  REQUIRE(q.vertices == Partition{Block{2, 5}, Block{1, 6, 7, 8}});
  REQUIRE(q.sigma.pairs() == Pairs{{1, 2}, {5, 6}});
  REQUIRE(q.sigma.fixed_points() == Block{7, 8});

  FeynmanDiagram lone = quotient_graph(g, {1});
  REQUIRE(lone == g);
}

TEST_CASE("contraction refuses disconnected inputs and selections", "[graphs]") {
  FeynmanDiagram chain = feyn({{1, 2}, {3, 4}}, Block{},
                              Partition{Block{1}, Block{2, 3}, Block{4}});
  REQUIRE(thrown([&] { quotient_graph(chain, {0, 2}); }) == errc::disconnected);

  FeynmanDiagram apart = feyn({}, Block{1, 2}, Partition{Block{1}, Block{2}});
  REQUIRE(thrown([&] { quotient_graph(apart, {0}); }) == errc::disconnected);
}

TEST_CASE("ordinary subgraphs drop severed half-edges", "[graphs]") {
  OrdinaryGraph tri = ord({{1, 2}, {3, 4}, {5, 6}},
                          Partition{Block{1, 6}, Block{2, 3}, Block{4, 5}});
  OrdinaryGraph sub = subgraph(tri, {0, 1});
  REQUIRE(sub.sigma.pairs() == Pairs{{1, 2}});
  REQUIRE(sub.vertices == Partition{Block{1}, Block{2}});

  OrdinaryGraph q = quotient_graph(tri, {0, 1});
  REQUIRE(q.vertices == Partition{Block{3, 6}, Block{4, 5}});
  REQUIRE(q.sigma.pairs() == Pairs{{3, 4}, {5, 6}});
}

TEST_CASE("component-wise contraction folds in any order", "[graphs]") {
  FeynmanDiagram chain = feyn({{1, 2}, {3, 4}, {5, 6}}, Block{},
                              Partition{Block{1}, Block{2, 3}, Block{4, 5}, Block{6}});
  FeynmanDiagram a = quotient_disconnected(chain, {{0, 1}, {2, 3}});
  FeynmanDiagram b = quotient_disconnected(chain, {{2, 3}, {0, 1}});
  REQUIRE(a == b);
  REQUIRE(a.vertices == Partition{Block{3}, Block{4}});
  REQUIRE(a.sigma.pairs() == Pairs{{3, 4}});

  REQUIRE(quotient_disconnected(chain, {{1, 2}}) == quotient_graph(chain, {1, 2}));
  REQUIRE(quotient_disconnected(chain, {}) == chain);
}

TEST_CASE("graph insertion glues the pairings and bridges to partition insertion",
          "[graphs]") {
  FeynmanDiagram host = feyn({}, Block{1, 2}, Partition{Block{1, 2}});
  FeynmanDiagram guest = feyn({{3, 4}}, Block{}, Partition{Block{3}, Block{4}});
  InsertionMap iota{{1, 0}, {2, 1}};
  FeynmanDiagram r = insert_graph(host, 0, guest, iota);
  REQUIRE(r.vertices == Partition{Block{1, 3}, Block{2, 4}});
  REQUIRE(r.vertices == insert(host.vertices, 0, guest.vertices, iota));
  REQUIRE(r.sigma.pairs() == Pairs{{3, 4}});
  REQUIRE(r.sigma.fixed_points() == Block{1, 2});
  REQUIRE(validate(r).empty());
}

TEST_CASE("admissible subgraphs keep the selection-internal line ends", "[graphs]") {
  AdmissibleGraph w = wedge();
  AdmissibleGraph sub = subgraph(w, {0}, {0});
  REQUIRE(sub.first_type == Partition{Block{1}});
  REQUIRE(sub.second_type == Partition{Block{3}});
  REQUIRE(sub.sigma.pairs() == Pairs{{1, 3}});

  AdmissibleGraph two = adm({{1, 3}, {2, 4}}, Partition{Block{1}, Block{2}},
                            Partition{Block{3}, Block{4}});
  REQUIRE(thrown([&] { subgraph(two, {0}, {1}); }) == errc::bad_selection);
}

TEST_CASE("admissible contraction quotients both vertex types", "[graphs]") {
  AdmissibleGraph w = wedge();
  AdmissibleGraph q = quotient_graph(w, {0}, {0});
  REQUIRE(q.first_type == Partition{Block{2}});
  REQUIRE(q.second_type == Partition{Block{4}});
  REQUIRE(q.sigma.pairs() == Pairs{{2, 4}});
  REQUIRE(validate(q).empty());
}

TEST_CASE("admissible contraction refuses a disconnected selection", "[graphs]") {
  AdmissibleGraph g = adm({{1, 5}, {2, 7}, {3, 6}, {4, 8}},
                          Partition{Block{1}, Block{2}, Block{3, 4}},
                          Partition{Block{5, 6}, Block{7, 8}});
  REQUIRE(validate(g).empty());
  REQUIRE(is_connected(g));
  REQUIRE(thrown([&] { quotient_graph(g, {0, 1}, {0, 1}); }) == errc::disconnected);
}

TEST_CASE("admissible insertion composes first-type and optionally second-type",
          "[graphs]") {
  AdmissibleGraph host = wedge();
  AdmissibleGraph guest = adm({{5, 7}, {6, 8}}, Partition{Block{5}, Block{6}},
                              Partition{Block{7}, Block{8}});

  AdmissibleGraph plain = insert_admissible(host, guest, InsertMode::trivial_second, 0,
                                            InsertionMap{{1, 0}, {2, 1}});
  REQUIRE(plain.first_type == Partition{Block{1, 5}, Block{2, 6}});
  REQUIRE(plain.second_type ==
          Partition{Block{3}, Block{4}, Block{7}, Block{8}});
  REQUIRE(validate(plain).empty());

  AdmissibleGraph paired = insert_admissible(host, guest, InsertMode::paired, 0,
                                             InsertionMap{{1, 0}, {2, 1}}, 0,
                                             InsertionMap{{3, 1}});
  REQUIRE(paired.first_type == Partition{Block{1, 5}, Block{2, 6}});
  REQUIRE(paired.second_type == Partition{Block{7}, Block{3, 8}, Block{4}});
  REQUIRE(validate(paired).empty());
}

TEST_CASE("admissible insertion refuses results with double lines", "[graphs]") {
  AdmissibleGraph host = wedge();
  AdmissibleGraph guest = adm({{5, 7}, {6, 8}}, Partition{Block{5, 6}},
                              Partition{Block{7}, Block{8}});
  REQUIRE(thrown([&] {
            insert_admissible(host, guest, InsertMode::paired, 0,
                              InsertionMap{{1, 0}, {2, 0}}, 0, InsertionMap{{3, 0}});
          }) == errc::result_not_admissible);
}

TEST_CASE("the graph bracket lifts the partition bracket", "[graphs]") {
  FeynmanDiagram g1 = feyn({}, Block{1}, Partition{Block{1}});
  FeynmanDiagram g2 = feyn({}, Block{2}, Partition{Block{2}});
  GraphLinComb zero = bracket_graphs(g1, g2);
  REQUIRE(zero.terms.is_zero());
  REQUIRE(zero.sigma.carrier() == Block{1, 2});

  FeynmanDiagram one = feyn({}, Block{1, 2}, Partition{Block{1, 2}});
  FeynmanDiagram two = feyn({{3, 4}}, Block{}, Partition{Block{3}, Block{4}});
  GraphLinComb lift = bracket_graphs(one, two);
  REQUIRE(lift.terms == bracket(one.vertices, two.vertices));
  REQUIRE_FALSE(lift.terms.is_zero());

  FeynmanDiagram empty;
  REQUIRE(thrown([&] { bracket_graphs(empty, g1); }) == errc::empty_operand);
}

TEST_CASE("dot export names vertices and draws one edge per line", "[graphs]") {
  LabelTable lt;
  for (Atom i = 0; i <= 4; ++i) lt.collect(std::to_string(i));
  lt.finalize();
  std::string f = export_dot(feyn({{1, 2}}, Block{3},
                                  Partition{Block{1, 3}, Block{2}}), lt);
  REQUIRE(f.find("v0 -- v1") != std::string::npos);
  REQUIRE(f.find("shape=point") != std::string::npos);
  REQUIRE(f.find("x0") != std::string::npos);

  std::string a = export_dot(adm({{1, 3}, {2, 4}}, Partition{Block{1, 2}},
                                 Partition{Block{3}, Block{4}}), lt);
  REQUIRE(a.find("digraph") == 0);
  REQUIRE(a.find("p0 -> q0") != std::string::npos);
  REQUIRE(a.find("shape=box") != std::string::npos);
}
