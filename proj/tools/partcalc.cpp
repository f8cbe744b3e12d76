// partcalc: partition calculus operations, graph encodings, and law suites
// over JSON documents. Atoms are strings; every output is canonical and
// byte-stable for a fixed (input, seed).
//
// Exit codes: 0 success, 1 operational (I/O, usage), 2 validation or domain
// error, 3 suite failure.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <partcalc/coalgebra.hpp>
#include <partcalc/core_ops.hpp>
#include <partcalc/dot.hpp>
#include <partcalc/error.hpp>
#include <partcalc/graphs.hpp>
#include <partcalc/json_io.hpp>
#include <partcalc/lie.hpp>
#include <partcalc/lincomb.hpp>
#include <partcalc/partition.hpp>
#include <partcalc/suites.hpp>

namespace {

using partcalc::json;

// A usage or I/O problem, as opposed to a domain error from the library.
struct cli_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw cli_error("cannot open \"" + path + "\" for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw cli_error("cannot read \"" + path + "\"");
  return std::move(buf).str();
}

// Option values by long name, merged from the command line and an optional
// --in file. Command-line text wins; the file fills in the rest.
class ArgBag {
 public:
  std::string& slot(const std::string& name) { return raw_[name]; }

  void merge_file(const std::string& path) {
    json doc = partcalc::parse_text(read_file(path));
    if (!doc.is_object()) throw cli_error("--in file must hold a JSON object");
    for (const auto& [key, value] : doc.items())
      if (!given(key)) file_[key] = value;
  }

  bool has(const std::string& name) const {
    return given(name) || file_.find(name) != file_.end();
  }

  // A structured value: command-line text is parsed as JSON; a file string is
  // parsed too, so both `"b": ["1"]` and `"b": "[\"1\"]"` work.
  json jval(const std::string& name) const {
    auto it = raw_.find(name);
    if (it != raw_.end() && !it->second.empty()) return partcalc::parse_text(it->second);
    auto fit = file_.find(name);
    if (fit == file_.end()) throw cli_error("missing required option --" + name);
    if (fit->second.is_string()) return partcalc::parse_text(fit->second.get<std::string>());
    return fit->second;
  }

  std::optional<json> jopt(const std::string& name) const {
    if (!has(name)) return std::nullopt;
    return jval(name);
  }

  std::size_t uval(const std::string& name) const {
    json v = jval(name);
    if (!v.is_number_unsigned()) throw cli_error("--" + name + " must be a nonnegative integer");
    return v.get<std::size_t>();
  }

  std::optional<std::size_t> uopt(const std::string& name) const {
    if (!has(name)) return std::nullopt;
    return uval(name);
  }

  std::string sval(const std::string& name, const std::string& fallback) const {
    auto it = raw_.find(name);
    if (it != raw_.end() && !it->second.empty()) return it->second;
    auto fit = file_.find(name);
    if (fit == file_.end()) return fallback;
    if (!fit->second.is_string()) throw cli_error("--" + name + " must be a string");
    return fit->second.get<std::string>();
  }

 private:
  bool given(const std::string& name) const {
    auto it = raw_.find(name);
    return it != raw_.end() && !it->second.empty();
  }

  std::map<std::string, std::string> raw_;
  std::map<std::string, json> file_;
};

struct Global {
  std::string in_file;
  std::string out_file;
  std::string format = "json";
  int exit_code = 0;
};

void emit(const Global& g, const std::string& text) {
  if (g.out_file.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(g.out_file, std::ios::binary);
  if (!out) throw cli_error("cannot open \"" + g.out_file + "\" for writing");
  out << text << "\n";
  if (!out) throw cli_error("cannot write \"" + g.out_file + "\"");
}

void emit_json(const Global& g, const json& doc) {
  if (g.format != "json")
    throw cli_error("--format " + g.format + " is only available for graph results");
  emit(g, doc.dump());
}

// Kind of a graph argument: --kind wins, otherwise shape inference.
partcalc::DocKind graph_kind(const json& j, const std::string& kind_name) {
  using partcalc::DocKind;
  DocKind k;
  if (!kind_name.empty()) {
    auto named = partcalc::dockind_from_name(kind_name);
    if (!named) throw cli_error("unknown --kind \"" + kind_name + "\"");
    k = *named;
  } else {
    k = partcalc::infer_kind(j);
  }
  if (k != DocKind::feynman && k != DocKind::ordinary && k != DocKind::admissible)
    partcalc::fail(partcalc::errc::kind_mismatch,
                   "expected a graph document, got " + std::string(partcalc::dockind_name(k)));
  return k;
}

std::vector<std::size_t> parse_selection(const json& j, const char* what) {
  if (!j.is_array()) throw cli_error(std::string(what) + " must be an array of vertex indices");
  std::vector<std::size_t> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_unsigned())
      throw cli_error(std::string(what) + " must hold nonnegative integers");
    out.push_back(v.get<std::size_t>());
  }
  return out;
}

json stored_term(const partcalc::OrderedPartition& op, const partcalc::LabelTable& lt) {
  return partcalc::print_partition_stored(op.value, lt);
}

void cmd_quotient(Global& g, const ArgBag& args, bool restrict_only) {
  json jp = args.jval("partition");
  json jb = args.jval("block");
  partcalc::LabelTable lt;
  partcalc::collect_labels(jp, partcalc::DocKind::partition, lt);
  partcalc::detail::collect_block(jb, lt);
  lt.finalize();
  partcalc::Partition p = partcalc::parse_partition(jp, lt);
  partcalc::Block b = partcalc::parse_block(jb, lt);
  if (restrict_only) {
    emit_json(g, partcalc::print_partition(partcalc::restriction(p, b), lt));
    return;
  }
  partcalc::QuotientResult r = partcalc::quotient(p, b);
  json out = json::object();
  out["partition"] = partcalc::print_partition(r.partition, lt);
  out["ideal"] = partcalc::print_block(r.ideal_part, lt);
  out["trivial"] = r.trivial;
  emit_json(g, out);
}

void cmd_insert(Global& g, const ArgBag& args) {
  json jp = args.jval("partition");
  json jq = args.jval("guest");
  json jm = args.jval("map");
  std::size_t a = args.uval("site");
  partcalc::LabelTable lt;
  partcalc::collect_labels(jp, partcalc::DocKind::partition, lt);
  partcalc::collect_labels(jq, partcalc::DocKind::partition, lt);
  partcalc::collect_map_labels(jm, lt);
  lt.finalize();
  partcalc::Partition host = partcalc::parse_partition(jp, lt);
  partcalc::Partition guest = partcalc::parse_partition(jq, lt);
  partcalc::InsertionMap iota = partcalc::parse_insertion_map(jm, lt);
  emit_json(g, partcalc::print_partition(partcalc::insert(host, a, guest, iota), lt));
}

void cmd_adjust(Global& g, const ArgBag& args) {
  json jp = args.jval("partition");
  json jf = args.jval("family");
  partcalc::LabelTable lt;
  partcalc::collect_labels(jp, partcalc::DocKind::partition, lt);
  partcalc::collect_labels(jf, partcalc::DocKind::partition, lt);
  lt.finalize();
  partcalc::Partition p = partcalc::parse_partition(jp, lt);
  partcalc::Partition f = partcalc::parse_partition(jf, lt);
  emit_json(g, partcalc::print_partition(partcalc::adjust(p, f), lt));
}

void cmd_coproduct(Global& g, const ArgBag& args, const std::string& kind_name) {
  using partcalc::DocKind;
  json jp = args.jval("partition");
  DocKind kind;
  if (!kind_name.empty()) {
    auto named = partcalc::dockind_from_name(kind_name);
    if (!named || (*named != DocKind::partition && *named != DocKind::tuple))
      throw cli_error("coproduct takes --kind partition or --kind tuple");
    kind = *named;
  } else {
    kind = partcalc::infer_kind(jp);
    if (kind != DocKind::partition && kind != DocKind::tuple)
      partcalc::fail(partcalc::errc::kind_mismatch, "coproduct expects a partition or a tuple");
  }
  partcalc::LabelTable lt;
  partcalc::collect_labels(jp, kind, lt);
  lt.finalize();
  partcalc::LinComb<partcalc::TensorTerm> result =
      kind == DocKind::partition
          ? partcalc::coproduct(partcalc::parse_partition(jp, lt))
          : partcalc::coproduct_tuple(partcalc::parse_tuple(jp, lt));
  emit_json(g, partcalc::print_lincomb(result, [&](const partcalc::TensorTerm& t) {
              return partcalc::print_tensor_term(t, lt);
            }));
}

void cmd_pairwise(Global& g, const ArgBag& args, bool signed_variant, bool is_bracket) {
  json jp = args.jval("partition");
  json jq = args.jval("second");
  partcalc::LabelTable lt;
  partcalc::collect_labels(jp, partcalc::DocKind::partition, lt);
  partcalc::collect_labels(jq, partcalc::DocKind::partition, lt);
  lt.finalize();
  partcalc::Partition p = partcalc::parse_partition(jp, lt);
  partcalc::Partition q = partcalc::parse_partition(jq, lt);
  if (!signed_variant) {
    partcalc::LinComb<partcalc::Partition> r =
        is_bracket ? partcalc::bracket(p, q) : partcalc::compose(p, q);
    emit_json(g, partcalc::print_lincomb_partitions(r, lt));
    return;
  }
  auto one = [](const partcalc::Partition& t) {
    partcalc::LinComb<partcalc::OrderedPartition> lc;
    lc.add(partcalc::OrderedPartition{t}, 1);
    return lc;
  };
  partcalc::LinComb<partcalc::OrderedPartition> r =
      is_bracket ? partcalc::bracket_signed(one(p), one(q)) : partcalc::compose_signed(p, q);
  emit_json(g, partcalc::print_lincomb(
                   r, [&](const partcalc::OrderedPartition& t) { return stored_term(t, lt); }));
}

void cmd_jacobi(Global& g, const ArgBag& args, bool signed_variant) {
  json jp = args.jval("partition");
  json jq = args.jval("second");
  json js = args.jval("third");
  partcalc::LabelTable lt;
  partcalc::collect_labels(jp, partcalc::DocKind::partition, lt);
  partcalc::collect_labels(jq, partcalc::DocKind::partition, lt);
  partcalc::collect_labels(js, partcalc::DocKind::partition, lt);
  lt.finalize();
  partcalc::Partition p = partcalc::parse_partition(jp, lt);
  partcalc::Partition q = partcalc::parse_partition(jq, lt);
  partcalc::Partition s = partcalc::parse_partition(js, lt);
  if (!signed_variant) {
    emit_json(g, partcalc::print_lincomb_partitions(partcalc::jacobi_defect(p, q, s), lt));
    return;
  }
  emit_json(g, partcalc::print_lincomb(
                   partcalc::jacobi_defect_signed(p, q, s),
                   [&](const partcalc::OrderedPartition& t) { return stored_term(t, lt); }));
}

// One graph input parsed by kind, with the output printed in the same kind.
struct GraphDoc {
  partcalc::DocKind kind;
  partcalc::FeynmanDiagram f;
  partcalc::OrdinaryGraph o;
  partcalc::AdmissibleGraph a;
};

GraphDoc parse_graph(const json& j, partcalc::DocKind kind, const partcalc::LabelTable& lt) {
  using partcalc::DocKind;
  GraphDoc out;
  out.kind = kind;
  switch (kind) {
    case DocKind::feynman: out.f = partcalc::parse_feynman(j, lt); break;
    case DocKind::ordinary: out.o = partcalc::parse_ordinary(j, lt); break;
    default: out.a = partcalc::parse_admissible(j, lt); break;
  }
  return out;
}

json print_graph(const GraphDoc& gd, const partcalc::LabelTable& lt) {
  using partcalc::DocKind;
  switch (gd.kind) {
    case DocKind::feynman: return partcalc::print_feynman(gd.f, lt);
    case DocKind::ordinary: return partcalc::print_ordinary(gd.o, lt);
    default: return partcalc::print_admissible(gd.a, lt);
  }
}

std::string graph_dot(const GraphDoc& gd, const partcalc::LabelTable& lt) {
  using partcalc::DocKind;
  switch (gd.kind) {
    case DocKind::feynman: return partcalc::export_dot(gd.f, lt);
    case DocKind::ordinary: return partcalc::export_dot(gd.o, lt);
    default: return partcalc::export_dot(gd.a, lt);
  }
}

void emit_graph(Global& g, const GraphDoc& gd, const partcalc::LabelTable& lt) {
  if (g.format == "dot") {
    emit(g, graph_dot(gd, lt));
    return;
  }
  emit_json(g, print_graph(gd, lt));
}

void cmd_graph_subgraph(Global& g, const ArgBag& args, const std::string& kind_name,
                        bool contract) {
  using partcalc::DocKind;
  json jg = args.jval("graph");
  DocKind kind = graph_kind(jg, kind_name);
  partcalc::LabelTable lt;
  partcalc::collect_labels(jg, kind, lt);
  lt.finalize();
  GraphDoc gd = parse_graph(jg, kind, lt);
  GraphDoc out;
  out.kind = kind;
  if (kind == DocKind::admissible) {
    if (args.has("components"))
      partcalc::fail(partcalc::errc::kind_mismatch,
                     "component-wise contraction is not defined for admissible graphs");
    auto first = parse_selection(args.jval("first"), "--first");
    auto second = parse_selection(args.jval("second"), "--second");
    out.a = contract ? partcalc::quotient_graph(gd.a, first, second)
                     : partcalc::subgraph(gd.a, first, second);
    emit_graph(g, out, lt);
    return;
  }
  if (contract && args.has("components")) {
    json jc = args.jval("components");
    if (!jc.is_array()) throw cli_error("--components must be an array of selections");
    std::vector<std::vector<std::size_t>> comps;
    comps.reserve(jc.size());
    for (const auto& c : jc) comps.push_back(parse_selection(c, "--components"));
    if (kind == DocKind::feynman)
      out.f = partcalc::quotient_disconnected(gd.f, comps);
    else
      out.o = partcalc::quotient_disconnected(gd.o, comps);
    emit_graph(g, out, lt);
    return;
  }
  auto sel = parse_selection(args.jval("select"), "--select");
  if (kind == DocKind::feynman)
    out.f = contract ? partcalc::quotient_graph(gd.f, sel) : partcalc::subgraph(gd.f, sel);
  else
    out.o = contract ? partcalc::quotient_graph(gd.o, sel) : partcalc::subgraph(gd.o, sel);
  emit_graph(g, out, lt);
}

void cmd_graph_insert(Global& g, const ArgBag& args, const std::string& kind_name) {
  using partcalc::DocKind;
  json jh = args.jval("host");
  json ju = args.jval("guest");
  json jm = args.jval("map");
  std::size_t a = args.uval("site");
  DocKind kind = graph_kind(jh, kind_name);
  DocKind guest_kind = graph_kind(ju, kind_name);
  if (guest_kind != kind)
    partcalc::fail(partcalc::errc::kind_mismatch, "host and guest must share a graph kind");
  partcalc::LabelTable lt;
  partcalc::collect_labels(jh, kind, lt);
  partcalc::collect_labels(ju, kind, lt);
  partcalc::collect_map_labels(jm, lt);
  std::optional<json> jk = args.jopt("kappa");
  if (jk) partcalc::collect_map_labels(*jk, lt);
  lt.finalize();
  partcalc::InsertionMap iota = partcalc::parse_insertion_map(jm, lt);
  GraphDoc out;
  out.kind = kind;
  if (kind == DocKind::admissible) {
    partcalc::AdmissibleGraph host = partcalc::parse_admissible(jh, lt);
    partcalc::AdmissibleGraph guest = partcalc::parse_admissible(ju, lt);
    std::string mode = args.sval("mode", "trivial-second");
    partcalc::InsertMode m;
    if (mode == "paired")
      m = partcalc::InsertMode::paired;
    else if (mode == "trivial-second")
      m = partcalc::InsertMode::trivial_second;
    else
      throw cli_error("--mode must be \"paired\" or \"trivial-second\"");
    std::size_t b = args.uopt("second-site").value_or(0);
    partcalc::InsertionMap kappa;
    if (jk) kappa = partcalc::parse_insertion_map(*jk, lt);
    out.a = partcalc::insert_admissible(host, guest, m, a, iota, b, kappa);
  } else if (kind == DocKind::feynman) {
    out.f = partcalc::insert_graph(partcalc::parse_feynman(jh, lt),
                                   a, partcalc::parse_feynman(ju, lt), iota);
  } else {
    out.o = partcalc::insert_graph(partcalc::parse_ordinary(jh, lt),
                                   a, partcalc::parse_ordinary(ju, lt), iota);
  }
  emit_graph(g, out, lt);
}

void cmd_graph_bracket(Global& g, const ArgBag& args, const std::string& kind_name) {
  using partcalc::DocKind;
  json j1 = args.jval("g1");
  json j2 = args.jval("g2");
  DocKind kind = graph_kind(j1, kind_name);
  if (graph_kind(j2, kind_name) != kind)
    partcalc::fail(partcalc::errc::kind_mismatch, "bracket operands must share a graph kind");
  if (kind == DocKind::admissible)
    partcalc::fail(partcalc::errc::kind_mismatch,
                   "the graph bracket is defined for feynman and ordinary graphs");
  partcalc::LabelTable lt;
  partcalc::collect_labels(j1, kind, lt);
  partcalc::collect_labels(j2, kind, lt);
  lt.finalize();
  partcalc::GraphLinComb r =
      kind == DocKind::feynman
          ? partcalc::bracket_graphs(partcalc::parse_feynman(j1, lt),
                                     partcalc::parse_feynman(j2, lt))
          : partcalc::bracket_graphs(partcalc::parse_ordinary(j1, lt),
                                     partcalc::parse_ordinary(j2, lt));
  emit_json(g, partcalc::print_graph_lincomb(r, lt));
}

void cmd_graph_dot(Global& g, const ArgBag& args, const std::string& kind_name) {
  json jg = args.jval("graph");
  partcalc::DocKind kind = graph_kind(jg, kind_name);
  partcalc::LabelTable lt;
  partcalc::collect_labels(jg, kind, lt);
  lt.finalize();
  GraphDoc gd = parse_graph(jg, kind, lt);
  emit(g, graph_dot(gd, lt));
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("PARTCALC_SEED")) {
    char* end = nullptr;
    std::uint64_t v = std::strtoull(env, &end, 10);
    if (end && *end == '\0') return v;
    throw cli_error("PARTCALC_SEED must be a nonnegative integer");
  }
  return partcalc::SuiteConfig{}.seed;
}

void cmd_check(Global& g, const ArgBag& args, const std::string& suite) {
  partcalc::SuiteConfig cfg;
  cfg.seed = default_seed();
  if (auto v = args.uopt("max-atoms")) cfg.max_atoms = *v;
  if (auto v = args.uopt("samples")) cfg.samples = *v;
  if (args.has("seed")) cfg.seed = args.uval("seed");
  bool all_pass = true;
  json out;
  if (suite == "all") {
    out = json::array();
    for (const auto& r : partcalc::run_all_suites(cfg)) {
      all_pass = all_pass && r.passed();
      out.push_back(partcalc::report_json(r));
    }
  } else {
    const auto& names = partcalc::suite_names();
    if (std::find(names.begin(), names.end(), suite) == names.end()) {
      std::string known = "all";
      for (const auto& n : names) known += ", " + n;
      throw cli_error("unknown suite \"" + suite + "\" (choose from: " + known + ")");
    }
    partcalc::SuiteReport r = partcalc::run_suite(suite, cfg);
    all_pass = r.passed();
    out = partcalc::report_json(r);
  }
  emit_json(g, out);
  if (!all_pass) g.exit_code = 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"calculus of partial set partitions: quotients, coproduct, bracket, graphs"};
  app.require_subcommand(1);

  Global global;
  ArgBag args;
  std::string kind_name;
  std::string suite_name;
  bool flag_signed = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--in", global.in_file, "JSON file with option values by long name");
    sub->add_option("--out", global.out_file, "write the result here instead of stdout");
    sub->add_option("--format", global.format, "json or dot")->check(CLI::IsMember({"json", "dot"}));
    sub->add_option("--kind", kind_name, "input kind override")->expected(1);
    return sub;
  };

  auto* c_quotient = add_common(app.add_subcommand("quotient", "quotient by a range subset"));
  c_quotient->add_option("-p,--partition", args.slot("partition"), "partition document");
  c_quotient->add_option("-b,--block", args.slot("block"), "block document");

  auto* c_restrict = add_common(app.add_subcommand("restrict", "restriction to a range subset"));
  c_restrict->add_option("-p,--partition", args.slot("partition"), "partition document");
  c_restrict->add_option("-b,--block", args.slot("block"), "block document");

  auto* c_insert = add_common(app.add_subcommand("insert", "replace a block by a guest partition"));
  c_insert->add_option("-p,--partition", args.slot("partition"), "host partition");
  c_insert->add_option("-a,--site", args.slot("site"), "host block index");
  c_insert->add_option("-q,--guest", args.slot("guest"), "guest partition");
  c_insert->add_option("-m,--map", args.slot("map"), "site atoms to guest block indices");

  auto* c_adjust = add_common(app.add_subcommand("adjust", "coarsen a family to an admissible one"));
  c_adjust->add_option("-p,--partition", args.slot("partition"), "partition document");
  c_adjust->add_option("-f,--family", args.slot("family"), "family of disjoint blocks");

  auto* c_coproduct = add_common(app.add_subcommand("coproduct", "restriction-quotient coproduct"));
  c_coproduct->add_option("-p,--partition", args.slot("partition"), "partition or tuple document");

  auto* c_compose = add_common(app.add_subcommand("compose", "insertion composition"));
  c_compose->add_option("-p,--partition", args.slot("partition"), "left operand");
  c_compose->add_option("-q,--second", args.slot("second"), "right operand");
  c_compose->add_flag("--signed", flag_signed, "position-signed variant");

  auto* c_bracket = add_common(app.add_subcommand("bracket", "composition commutator"));
  c_bracket->add_option("-p,--partition", args.slot("partition"), "left operand");
  c_bracket->add_option("-q,--second", args.slot("second"), "right operand");
  c_bracket->add_flag("--signed", flag_signed, "position-signed variant");

  auto* c_jacobi = add_common(app.add_subcommand("jacobi", "cyclic bracket defect"));
  c_jacobi->add_option("-p,--partition", args.slot("partition"), "first operand");
  c_jacobi->add_option("-q,--second", args.slot("second"), "second operand");
  c_jacobi->add_option("-s,--third", args.slot("third"), "third operand");
  c_jacobi->add_flag("--signed", flag_signed, "position-signed variant");

  auto* c_graph = app.add_subcommand("graph", "half-edge graph operations");
  c_graph->require_subcommand(1);

  auto* gc_sub = add_common(c_graph->add_subcommand("subgraph", "induced piece of a graph"));
  gc_sub->add_option("--graph", args.slot("graph"), "graph document");
  gc_sub->add_option("--select", args.slot("select"), "vertex indices");
  gc_sub->add_option("--first", args.slot("first"), "first-type vertex indices");
  gc_sub->add_option("--second", args.slot("second"), "second-type vertex indices");

  auto* gc_quot = add_common(c_graph->add_subcommand("quotient", "contract a selection"));
  gc_quot->add_option("--graph", args.slot("graph"), "graph document");
  gc_quot->add_option("--select", args.slot("select"), "vertex indices");
  gc_quot->add_option("--first", args.slot("first"), "first-type vertex indices");
  gc_quot->add_option("--second", args.slot("second"), "second-type vertex indices");
  gc_quot->add_option("--components", args.slot("components"),
                      "contract each listed selection in turn");

  auto* gc_ins = add_common(c_graph->add_subcommand("insert", "replace a vertex by a guest graph"));
  gc_ins->add_option("--host", args.slot("host"), "host graph");
  gc_ins->add_option("--guest", args.slot("guest"), "guest graph");
  gc_ins->add_option("-a,--site", args.slot("site"), "host vertex index");
  gc_ins->add_option("-m,--map", args.slot("map"), "vertex atoms to guest vertex indices");
  gc_ins->add_option("--mode", args.slot("mode"), "paired or trivial-second");
  gc_ins->add_option("--second-site", args.slot("second-site"), "second-type host index");
  gc_ins->add_option("--kappa", args.slot("kappa"), "second-type insertion map");

  auto* gc_br = add_common(c_graph->add_subcommand("bracket", "graph commutator"));
  gc_br->add_option("--g1", args.slot("g1"), "first graph");
  gc_br->add_option("--g2", args.slot("g2"), "second graph");

  auto* gc_dot = add_common(c_graph->add_subcommand("dot", "render a graph as DOT"));
  gc_dot->add_option("--graph", args.slot("graph"), "graph document");

  auto* c_check = add_common(app.add_subcommand("check", "run a law suite"));
  c_check->add_option("suite", suite_name, "suite name or \"all\"")->required();
  c_check->add_option("--max-atoms", args.slot("max-atoms"), "exhaustive carrier bound");
  c_check->add_option("--samples", args.slot("samples"), "random phase size");
  c_check->add_option("--seed", args.slot("seed"), "random phase seed");

  try {
    app.parse(argc, argv);
    if (!global.in_file.empty()) args.merge_file(global.in_file);

    if (*c_quotient) cmd_quotient(global, args, false);
    if (*c_restrict) cmd_quotient(global, args, true);
    if (*c_insert) cmd_insert(global, args);
    if (*c_adjust) cmd_adjust(global, args);
    if (*c_coproduct) cmd_coproduct(global, args, kind_name);
    if (*c_compose) cmd_pairwise(global, args, flag_signed, false);
    if (*c_bracket) cmd_pairwise(global, args, flag_signed, true);
    if (*c_jacobi) cmd_jacobi(global, args, flag_signed);
    if (*gc_sub) cmd_graph_subgraph(global, args, kind_name, false);
    if (*gc_quot) cmd_graph_subgraph(global, args, kind_name, true);
    if (*gc_ins) cmd_graph_insert(global, args, kind_name);
    if (*gc_br) cmd_graph_bracket(global, args, kind_name);
    if (*gc_dot) cmd_graph_dot(global, args, kind_name);
    if (*c_check) cmd_check(global, args, suite_name);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 1;
  } catch (const partcalc::error& e) {
    std::string code = partcalc::errc_name(e.code());
    std::string message = e.what();
    if (message.rfind(code + ": ", 0) == 0) message.erase(0, code.size() + 2);
    json err = json::object();
    err["error"] = json::object();
    err["error"]["code"] = code;
    err["error"]["message"] = message;
    std::cerr << err.dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "partcalc: " << e.what() << "\n";
    return 1;
  }
  return global.exit_code;
}
