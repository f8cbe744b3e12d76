#include <fstream>
#include <map>
#include <sstream>
#include <string>

#include <catch2/catch_amalgamated.hpp>

#include <partcalc/json_io.hpp>

#include "test_util.hpp"

using namespace partcalc;
using testutil::thrown;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(PARTCALC_FIXTURE_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream buf;
  buf << in.rdbuf();
  return std::move(buf).str();
}

const std::map<std::string, DocKind> kFixtureKinds = {
    {"p_simple.json", DocKind::partition},
    {"p_empty.json", DocKind::partition},
    {"p_letters.json", DocKind::partition},
    {"p_mixed_labels.json", DocKind::partition},
    {"p_interleaved.json", DocKind::partition},
    {"t_two_components.json", DocKind::tuple},
    {"t_single.json", DocKind::tuple},
    {"t_three.json", DocKind::tuple},
    {"f_edge.json", DocKind::feynman},
    {"f_empty.json", DocKind::feynman},
    {"f_parallel.json", DocKind::feynman},
    {"f_legs.json", DocKind::feynman},
    {"o_edge.json", DocKind::ordinary},
    {"o_triangle.json", DocKind::ordinary},
    {"o_path.json", DocKind::ordinary},
    {"a_wedge.json", DocKind::admissible},
    {"a_square.json", DocKind::admissible},
    {"a_bridge.json", DocKind::admissible},
    {"l_two_terms.json", DocKind::lincomb},
    {"l_single.json", DocKind::lincomb},
};

}  // namespace

TEST_CASE("label order puts numeric labels first, by value", "[io]") {
  LabelTable lt;
  for (const char* l : {"b", "10", "a", "9", "007", "7"}) lt.collect(l);
  lt.finalize();
  REQUIRE(lt.size() == 6);
  REQUIRE(lt.label(0) == "007");
  REQUIRE(lt.label(1) == "7");
  REQUIRE(lt.label(2) == "9");
  REQUIRE(lt.label(3) == "10");
  REQUIRE(lt.label(4) == "a");
  REQUIRE(lt.label(5) == "b");
  REQUIRE(lt.atom("10") == 3);
  REQUIRE(thrown([&] { lt.atom("zzz"); }) == errc::validation_error);
  REQUIRE(thrown([&] { lt.collect("late"); }) == errc::validation_error);
}

TEST_CASE("parse errors carry line and column", "[io]") {
  auto code = thrown([] { parse_text("[[\"1\",\n  oops]]"); });
  REQUIRE(code == errc::parse_error);
  try {
    parse_text("[[\"1\",\n  oops]]");
  } catch (const error& e) {
    std::string msg = e.what();
    REQUIRE(msg.find("line 2") != std::string::npos);
  }
}

TEST_CASE("kind inference reads the document shape", "[io]") {
  REQUIRE(infer_kind(parse_text("[]")) == DocKind::partition);
  REQUIRE(infer_kind(parse_text(R"([["1"]])")) == DocKind::partition);
  REQUIRE(infer_kind(parse_text(R"([[["1"]]])")) == DocKind::tuple);
  REQUIRE(infer_kind(parse_text(R"({"sigma":[],"fixed":[],"vertices":[]})")) == DocKind::feynman);
  REQUIRE(infer_kind(parse_text(R"({"sigma":[],"vertices":[]})")) == DocKind::ordinary);
  REQUIRE(infer_kind(parse_text(R"({"sigma":[],"vertices":[],"second_type":[]})")) ==
          DocKind::admissible);
  REQUIRE(infer_kind(parse_text(R"([{"coeff":"1/1","term":[]}])")) == DocKind::lincomb);
  REQUIRE(dockind_from_name("ordinary") == DocKind::ordinary);
  REQUIRE_FALSE(dockind_from_name("nonsense").has_value());
}

TEST_CASE("every fixture parses to its kind and round-trips byte-stably", "[io]") {
  for (const auto& [name, kind] : kFixtureKinds) {
    CAPTURE(name);
    std::string text = fixture(name);
    REQUIRE(infer_kind(parse_text(text)) == kind);
    std::string once = canonical_text(text);
    REQUIRE(canonical_text(once) == once);
  }
}

TEST_CASE("canonical output orders blocks and atoms by label order", "[io]") {
  REQUIRE(canonical_text(R"([["3"],["2","1"]])") == R"([["1","2"],["3"]])");
  REQUIRE(canonical_text(R"([["10","2"],["x1"]])") == R"([["2","10"],["x1"]])");
  REQUIRE(canonical_text(R"([["b","a"]])") == R"([["a","b"]])");
}

TEST_CASE("partition parsing validates block shape", "[io]") {
  LabelTable lt;
  json doc = parse_text(R"([["1","1"]])");
  collect_labels(doc, DocKind::partition, lt);
  lt.finalize();
  REQUIRE(thrown([&] { parse_block(doc.at(0), lt); }) == errc::validation_error);

  json overlap = parse_text(R"([["1","2"],["2"]])");
  LabelTable lt2;
  collect_labels(overlap, DocKind::partition, lt2);
  lt2.finalize();
  REQUIRE(thrown([&] { parse_partition(overlap, lt2); }) == errc::validation_error);
}

TEST_CASE("rational strings are strictly n over d", "[io]") {
  REQUIRE(parse_rational(json("3/2")) == Rational(3) / 2);
  REQUIRE(parse_rational(json("-3/2")) == Rational(-3) / 2);
  REQUIRE(parse_rational(json("3")) == 3);
  REQUIRE(parse_rational(json("+7")) == 7);
  REQUIRE(thrown([] { parse_rational(json("3/")); }) == errc::validation_error);
  REQUIRE(thrown([] { parse_rational(json("3/0")); }) == errc::validation_error);
  REQUIRE(thrown([] { parse_rational(json(3)); }) == errc::validation_error);
  REQUIRE(rational_str(Rational(5)) == "5/1");
  REQUIRE(rational_str(Rational(-1) / 2) == "-1/2");
}

TEST_CASE("insertion maps take string atoms to unsigned indices", "[io]") {
  LabelTable lt;
  json doc = parse_text(R"({"1":0,"2":1})");
  collect_map_labels(doc, lt);
  lt.finalize();
  InsertionMap m = parse_insertion_map(doc, lt);
  REQUIRE(m == InsertionMap{{lt.atom("1"), 0}, {lt.atom("2"), 1}});

  json bad = parse_text(R"({"1":"0"})");
  LabelTable lt2;
  collect_map_labels(bad, lt2);
  lt2.finalize();
  REQUIRE(thrown([&] { parse_insertion_map(bad, lt2); }) == errc::validation_error);
}

TEST_CASE("graph documents keep their kind through printing", "[io]") {
  std::string f = canonical_text(fixture("f_empty.json"));
  REQUIRE(f.find("\"fixed\"") != std::string::npos);

  std::string o = canonical_text(fixture("o_edge.json"));
  REQUIRE(o.find("\"fixed\"") == std::string::npos);

  std::string a = canonical_text(fixture("a_wedge.json"));
  REQUIRE(a.find("\"second_type\"") != std::string::npos);
  REQUIRE(a.find("\"vertices\"") != std::string::npos);
}

TEST_CASE("ordinary graphs reject a fixed-point pairing at parse time", "[io]") {
  json doc = parse_text(R"({"sigma":[],"fixed":["1"],"vertices":[["1"]]})");
  LabelTable lt;
  collect_labels(doc, DocKind::ordinary, lt);
  lt.finalize();
  REQUIRE(thrown([&] { parse_ordinary(doc, lt); }).has_value());
}

TEST_CASE("graph parsing rejects structurally invalid graphs", "[io]") {
  json doc = parse_text(R"({"sigma":[["1","2"]],"fixed":[],"vertices":[["1"]]})");
  LabelTable lt;
  collect_labels(doc, DocKind::feynman, lt);
  lt.finalize();
  REQUIRE(thrown([&] { parse_feynman(doc, lt); }) == errc::validation_error);
}

TEST_CASE("documents parse into their typed variant", "[io]") {
  LabelTable lt;
  std::string text = fixture("t_two_components.json");
  json doc = parse_text(text);
  collect_labels(doc, DocKind::tuple, lt);
  lt.finalize();
  ParsedDocument parsed = parse_document(doc, DocKind::tuple, lt);
  REQUIRE(parsed.kind == DocKind::tuple);
  const auto& t = std::get<PartitionTuple>(parsed.value);
  REQUIRE(t.size() == 2);
  REQUIRE(print_document(parsed, lt) == parse_text(text));
}
