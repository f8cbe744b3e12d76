#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coalgebra.hpp"
#include "core_ops.hpp"
#include "enumerate.hpp"
#include "graphs.hpp"
#include "json_io.hpp"
#include "lie.hpp"
#include "lincomb.hpp"
#include "partition.hpp"

// Law suites behind `partcalc check`. Each suite runs an exhaustive phase on
// small carriers and, where it adds coverage, a seeded random phase on larger
// ones. Failures are data, not exceptions: each one carries a message and a
// JSON reproducer with the offending operands. Reports are deterministic for
// a fixed config; elapsed time is kept out of the serialized form so output
// bytes depend only on (input, seed).

namespace partcalc {

struct SuiteConfig {
  std::size_t max_atoms = 4;  // carrier bound for the exhaustive phases
  std::size_t samples = 500;  // randomized phase size
  std::uint64_t seed = 12345;
};

struct SuiteFailure {
  std::string message;
  json reproducer;
};

struct SuiteReport {
  std::string name;
  std::size_t instances = 0;
  std::size_t failure_count = 0;  // total, including past the recording cap
  std::vector<SuiteFailure> failures;
  std::vector<std::string> notes;
  std::uint64_t seed = 0;
  double elapsed_ms = 0.0;
  bool passed() const { return failure_count == 0; }
};

inline json report_json(const SuiteReport& r) {
  json out = json::object();
  out["suite"] = r.name;
  out["passed"] = r.passed();
  out["instances"] = r.instances;
  out["failure_count"] = r.failure_count;
  out["seed"] = r.seed;
  out["notes"] = r.notes;
  json fl = json::array();
  for (const auto& f : r.failures) {
    json e = json::object();
    e["message"] = f.message;
    e["case"] = f.reproducer;
    fl.push_back(std::move(e));
  }
  out["failures"] = std::move(fl);
  return out;
}

namespace detail {

// Atoms in every suite are small integers named by their decimal strings.
inline const LabelTable& suite_labels() {
  static const LabelTable table = [] {
    LabelTable t;
    for (int i = 0; i < 64; ++i) t.collect(std::to_string(i));
    t.finalize();
    return t;
  }();
  return table;
}

inline std::vector<Atom> atom_run(Atom lo, Atom hi) {
  std::vector<Atom> out;
  for (Atom a = lo; a <= hi; ++a) out.push_back(a);
  return out;
}

class SuiteRun {
 public:
  static constexpr std::size_t kMaxRecorded = 25;

  SuiteRun(std::string name, std::uint64_t seed) : start_(std::chrono::steady_clock::now()) {
    report_.name = std::move(name);
    report_.seed = seed;
  }

  void instance() { ++report_.instances; }

  void fail_case(std::string message, json reproducer) {
    ++report_.failure_count;
    if (report_.failures.size() < kMaxRecorded)
      report_.failures.push_back(SuiteFailure{std::move(message), std::move(reproducer)});
  }

  void note(std::string text) { report_.notes.push_back(std::move(text)); }

  SuiteReport finish() {
    report_.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_)
            .count();
    return std::move(report_);
  }

 private:
  std::chrono::steady_clock::time_point start_;
  SuiteReport report_;
};

// Quotient by a partition divisor: the divisor must be the restriction of the
// dividend to the divisor's own range.
inline Partition quotient_by_partition(const Partition& p, const Partition& divisor) {
  Block r = divisor.range();
  if (!(restriction(p, r) == divisor))
    fail(errc::not_a_restriction, "divisor is not the restriction of the dividend");
  return quotient(p, r).partition;
}

inline Block shift_block(const Block& b, Atom d) {
  std::vector<Atom> out;
  out.reserve(b.size());
  for (Atom x : b) out.push_back(x + d);
  return Block(std::move(out));
}

inline Partition shift_partition(const Partition& p, Atom d) {
  std::vector<Block> blocks;
  blocks.reserve(p.size());
  for (const auto& b : p.blocks()) blocks.push_back(shift_block(b, d));
  return Partition(std::move(blocks));
}

inline StructureMap shift_sigma(const StructureMap& s, Atom d) {
  std::vector<std::pair<Atom, Atom>> pairs;
  for (auto [e, f] : s.pairs()) pairs.emplace_back(e + d, f + d);
  return StructureMap(pairs, shift_block(s.fixed_points(), d));
}

inline FeynmanDiagram shift_feynman(const FeynmanDiagram& g, Atom d) {
  return FeynmanDiagram{shift_sigma(g.sigma, d), shift_partition(g.vertices, d)};
}

inline OrdinaryGraph shift_ordinary(const OrdinaryGraph& g, Atom d) {
  return OrdinaryGraph{shift_sigma(g.sigma, d), shift_partition(g.vertices, d)};
}

inline AdmissibleGraph shift_admissible(const AdmissibleGraph& g, Atom d) {
  return AdmissibleGraph{shift_sigma(g.sigma, d), shift_partition(g.first_type, d),
                         shift_partition(g.second_type, d)};
}

// Half-edges 1..n paired by an involution image vector (indices 0-based).
inline StructureMap involution_sigma(const std::vector<std::size_t>& image) {
  std::vector<std::pair<Atom, Atom>> pairs;
  std::vector<Atom> fixed;
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (image[i] == i)
      fixed.push_back(static_cast<Atom>(i + 1));
    else if (i < image[i])
      pairs.emplace_back(static_cast<Atom>(i + 1), static_cast<Atom>(image[i] + 1));
  }
  return StructureMap(pairs, Block(std::move(fixed)));
}

inline StructureMap matching_sigma(const std::vector<std::pair<std::size_t, std::size_t>>& m) {
  std::vector<std::pair<Atom, Atom>> pairs;
  pairs.reserve(m.size());
  for (auto [i, j] : m)
    pairs.emplace_back(static_cast<Atom>(i + 1), static_cast<Atom>(j + 1));
  return StructureMap(pairs, Block{});
}

inline std::vector<std::vector<std::size_t>> index_subsets(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::size_t> sel;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) sel.push_back(i);
    out.push_back(std::move(sel));
  }
  return out;
}

inline std::string chain_str(const TensorChain& ch) {
  std::string s = "[";
  for (std::size_t i = 0; i < ch.size(); ++i) {
    if (i) s += " | ";
    s += ch[i].str();
  }
  return s + "]";
}

// The laws quantified over one partition and a disjoint pair of range subsets.
inline void quotient_restriction_laws(SuiteRun& run, const Partition& p, const Block& b,
                                      const Block& c) {
  run.instance();
  const LabelTable& lt = suite_labels();
  auto rep = [&] {
    json r = json::object();
    r["p"] = print_partition(p, lt);
    r["b"] = print_block(b, lt);
    r["c"] = print_block(c, lt);
    return r;
  };
  try {
    Partition pb = quotient(p, b).partition;
    if (!(pb.range() == p.range() - b))
      return run.fail_case("quotient range is not the carrier minus B", rep());

    Partition lhs = restriction(pb, c);
    Partition one_step = quotient(restriction(p, b | c), b).partition;
    if (!(lhs == one_step))
      return run.fail_case("restricting a quotient differs from quotienting the restriction",
                           rep());

    Partition two_step = quotient(pb, c).partition;
    if (!(quotient_by_partition(pb, one_step) == two_step))
      return run.fail_case("quotient by the restricted divisor differs from the plain quotient",
                           rep());

    if (!(two_step == quotient(quotient(p, c).partition, b).partition))
      return run.fail_case("double quotients by disjoint sets do not commute", rep());

    Block rb = touched_range(p, b);
    Block rc = touched_range(p, c);
    if (rb.disjoint(rc)) {
      if (!(lhs == restriction(p, c)))
        return run.fail_case("restriction changed by a quotient with untouched range", rep());
      if (!(one_step == restriction(p, c)))
        return run.fail_case("restricted divisor differs from the plain restriction", rep());
    } else {
      if (!(two_step == quotient(p, b | c).partition))
        return run.fail_case("two-step quotient differs from the fused quotient", rep());
    }
  } catch (const error& e) {
    run.fail_case(std::string("unexpected error: ") + e.what(), rep());
  }
}

// Decode a base-3 mask into two disjoint subsets of the given atoms.
inline void split_ternary(const std::vector<Atom>& atoms, std::uint64_t mask, Block& one,
                          Block& two) {
  std::vector<Atom> a1, a2;
  for (Atom x : atoms) {
    switch (mask % 3) {
      case 1: a1.push_back(x); break;
      case 2: a2.push_back(x); break;
      default: break;
    }
    mask /= 3;
  }
  one = Block(std::move(a1));
  two = Block(std::move(a2));
}

inline std::uint64_t pow3(std::size_t n) {
  std::uint64_t r = 1;
  while (n--) r *= 3;
  return r;
}

}  // namespace detail

// Quotient and restriction interplay: two-step vs one-step quotients, the
// divisor form, commutation, and the fused quotient on overlapping touched
// ranges. Exhaustive on small carriers, then seeded random on carriers up to
// 8 atoms.
inline SuiteReport run_prop21(const SuiteConfig& cfg) {
  detail::SuiteRun run("prop21", cfg.seed);
  const LabelTable& lt = detail::suite_labels();
  for (const auto& p : partial_partitions(detail::atom_run(1, static_cast<Atom>(cfg.max_atoms)))) {
    std::vector<Atom> carrier = p.range().atoms();
    std::uint64_t total = detail::pow3(carrier.size());
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      Block b, c;
      detail::split_ternary(carrier, mask, b, c);
      detail::quotient_restriction_laws(run, p, b, c);
    }
    // restriction transitivity: D inside B inside the carrier
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      Block mid, d;
      detail::split_ternary(carrier, mask, mid, d);
      Block b = mid | d;
      run.instance();
      if (!(restriction(restriction(p, b), d) == restriction(p, d))) {
        json r = json::object();
        r["p"] = print_partition(p, lt);
        r["b"] = print_block(b, lt);
        r["d"] = print_block(d, lt);
        run.fail_case("restriction is not transitive", r);
      }
    }
  }
  Sampler smp(cfg.seed);
  for (std::size_t i = 0; i < cfg.samples; ++i) {
    Partition p = smp.partition(8, 8);
    Block b = smp.subset(p.range());
    Block c = smp.subset(p.range() - b);
    detail::quotient_restriction_laws(run, p, b, c);
  }
  return run.finish();
}

// Quotients are invertible: canonical reinsertion undoes them, including into
// a further restriction, and every insertion factors back to its parts.
inline SuiteReport run_duality(const SuiteConfig& cfg) {
  detail::SuiteRun run("duality", cfg.seed);
  const LabelTable& lt = detail::suite_labels();

  for (const auto& p : partial_partitions(detail::atom_run(1, static_cast<Atom>(cfg.max_atoms)))) {
    std::vector<Atom> carrier = p.range().atoms();
    for (const auto& b : all_subsets(carrier)) {
      run.instance();
      json rep = json::object();
      rep["p"] = print_partition(p, lt);
      rep["b"] = print_block(b, lt);
      try {
        QuotientResult q = quotient(p, b);
        Partition touched = restriction(p, touched_range(p, b));
        if (!(canonical_reinsert(q.partition, touched, b) == p))
          run.fail_case("reinserting the restriction does not undo the quotient", rep);
      } catch (const error& e) {
        run.fail_case(std::string("unexpected error: ") + e.what(), rep);
      }
    }
    // reinsertion into a further restriction of the quotient
    std::uint64_t total = detail::pow3(carrier.size());
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      Block b, c;
      detail::split_ternary(carrier, mask, b, c);
      run.instance();
      json rep = json::object();
      rep["p"] = print_partition(p, lt);
      rep["b"] = print_block(b, lt);
      rep["c"] = print_block(c, lt);
      try {
        Partition host = restriction(quotient(p, b).partition, c);
        Partition expected = restriction(p, b | c);
        Block rb = touched_range(p, b);
        if (rb.disjoint(touched_range(p, c))) {
          if (!(trivial_insert(host, restriction(p, b)) == expected))
            run.fail_case("side-by-side reassembly differs from the joint restriction", rep);
        } else {
          if (!(canonical_reinsert(host, restriction(p, rb), b) == expected))
            run.fail_case("reinsertion into the restricted quotient differs from the joint "
                          "restriction",
                          rep);
        }
      } catch (const error& e) {
        run.fail_case(std::string("unexpected error: ") + e.what(), rep);
      }
    }
  }

  // insertion factors back to (host, site, map), and the quotient by the
  // guest's range recovers the host
  std::vector<Partition> hosts = partial_partitions(detail::atom_run(1, 3));
  std::vector<Partition> guests = partial_partitions(detail::atom_run(4, 6));
  for (const auto& host : hosts) {
    if (host.empty()) continue;
    for (const auto& guest : guests) {
      if (guest.empty()) continue;
      for (std::size_t a = 0; a < host.size(); ++a) {
        for (const auto& iota : enumerate_insertions(host, a, guest)) {
          run.instance();
          json rep = json::object();
          rep["host"] = print_partition_stored(host, lt);
          rep["a"] = a;
          rep["guest"] = print_partition_stored(guest, lt);
          try {
            Partition k = insert(host, a, guest, iota);
            if (!(restriction(k, guest.range()) == guest)) {
              run.fail_case("guest is not the restriction of the composite", rep);
              continue;
            }
            Factorization f = factor_quotient(k, guest);
            if (!(f.host == host)) {
              run.fail_case("factorization recovers the wrong host", rep);
              continue;
            }
            if (!(insert(f.host, f.a, guest, f.iota) == k)) {
              run.fail_case("reassembling the factorization loses the composite", rep);
              continue;
            }
            if (!(quotient(k, guest.range()).partition == host))
              run.fail_case("quotient by the guest range does not recover the host", rep);
          } catch (const error& e) {
            run.fail_case(std::string("unexpected error: ") + e.what(), rep);
          }
        }
      }
    }
  }
  return run.finish();
}

// Adjustment: coarsening any family to an admissible one preserves the
// iterated quotient, lands on the same carrier, and is idempotent.
inline SuiteReport run_adjust(const SuiteConfig& cfg) {
  detail::SuiteRun run("adjust", cfg.seed);
  const LabelTable& lt = detail::suite_labels();
  std::vector<Partition> all =
      partial_partitions(detail::atom_run(1, static_cast<Atom>(cfg.max_atoms)));
  for (const auto& p : all) {
    for (const auto& f : partial_partitions(p.range().atoms())) {
      run.instance();
      json rep = json::object();
      rep["p"] = print_partition(p, lt);
      rep["family"] = print_partition_stored(f, lt);
      try {
        Partition a = adjust(p, f);
        if (!(a.range() == f.range())) {
          run.fail_case("adjustment changed the family's carrier", rep);
          continue;
        }
        if (!is_admissible(p, a)) {
          run.fail_case("adjustment output is not admissible", rep);
          continue;
        }
        Partition direct = iterated_quotient(p, f);
        if (!(iterated_quotient(p, a) == direct)) {
          run.fail_case("adjustment changed the iterated quotient", rep);
          continue;
        }
        std::vector<Block> rev(f.blocks().rbegin(), f.blocks().rend());
        if (!(iterated_quotient(p, rev) == direct)) {
          run.fail_case("iterated quotient depends on the family's order", rep);
          continue;
        }
        if (!(adjust(p, a) == a)) {
          run.fail_case("adjustment is not idempotent", rep);
          continue;
        }
        if (is_admissible(p, f) && !(a == f))
          run.fail_case("adjustment moved an already admissible family", rep);
      } catch (const error& e) {
        run.fail_case(std::string("unexpected error: ") + e.what(), rep);
      }
    }
  }
  return run.finish();
}

// Coassociativity of the coproduct, plus the single-family witness for double
// quotients: merging (J, K) into one admissible family reproduces (P/J)/K.
inline SuiteReport run_coassoc(const SuiteConfig& cfg) {
  detail::SuiteRun run("coassoc", cfg.seed);
  const LabelTable& lt = detail::suite_labels();
  std::vector<Partition> all =
      partial_partitions(detail::atom_run(1, static_cast<Atom>(cfg.max_atoms)));
  for (const auto& p : all) {
    run.instance();
    json rep = json::object();
    rep["p"] = print_partition(p, lt);
    auto [lhs, rhs] = coassociativity_sides(p);
    if (!(lhs == rhs)) {
      LinComb<TensorChain> diff = lhs - rhs;
      std::string msg = "coassociativity fails: " + std::to_string(diff.size()) +
                        " unbalanced chains, first ";
      const auto& terms = diff.terms();
      if (!terms.empty())
        msg += detail::chain_str(terms.begin()->first) + " with coefficient " +
               rational_str(terms.begin()->second);
      run.fail_case(msg, rep);
    }
  }
  std::size_t witness_checked = 0;
  for (const auto& p : all) {
    for (const auto& f : partial_partitions(p.range().atoms())) {
      if (!is_admissible(p, f)) continue;
      Partition q = iterated_quotient(p, f);
      for (const auto& k : partial_partitions(q.range().atoms())) {
        if (!is_admissible(q, k)) continue;
        run.instance();
        ++witness_checked;
        json rep = json::object();
        rep["p"] = print_partition(p, lt);
        rep["j"] = print_partition_stored(f, lt);
        rep["k"] = print_partition_stored(k, lt);
        try {
          Partition m = merge_witness(p, f, k);
          if (!is_admissible(p, m)) {
            run.fail_case("witness family is not admissible", rep);
            continue;
          }
          if (!(iterated_quotient(p, m) == iterated_quotient(q, k)))
            run.fail_case("witness family misses the double quotient", rep);
        } catch (const error& e) {
          run.fail_case(std::string("unexpected error: ") + e.what(), rep);
        }
      }
    }
  }
  run.note("double-quotient witness verified on " + std::to_string(witness_checked) +
           " (P, J, K) triples");
  return run.finish();
}

// The reduced coproduct is nilpotent, with index exactly max(1, |carrier|).
// The coarser bound |blocks|+1 fails; violations are counted, not failed, and
// the acceptance gate reports on that bound separately.
inline SuiteReport run_nilpotent(const SuiteConfig& cfg) {
  detail::SuiteRun run("nilpotent", cfg.seed);
  const LabelTable& lt = detail::suite_labels();
  std::size_t bound_violations = 0, total = 0;
  std::string first_violator;
  for (const auto& p : partial_partitions(detail::atom_run(1, static_cast<Atom>(cfg.max_atoms)))) {
    run.instance();
    ++total;
    json rep = json::object();
    rep["p"] = print_partition(p, lt);
    bool zero = reduced_coproduct(p).is_zero();
    if (zero != (p.range().size() <= 1)) {
      run.fail_case("reduced coproduct should vanish exactly on at most one atom", rep);
      continue;
    }
    std::size_t m = nilpotency_index(p);
    std::size_t expected = p.range().empty() ? 1 : p.range().size();
    if (m != expected) {
      run.fail_case("nilpotency index " + std::to_string(m) + " differs from max(1, |carrier|) = " +
                        std::to_string(expected),
                    rep);
      continue;
    }
    if (m > p.size() + 1) {
      ++bound_violations;
      if (first_violator.empty()) first_violator = p.str();
    }
  }
  run.note("index equals max(1, |carrier|) on all " + std::to_string(total) + " partitions");
  if (bound_violations)
    run.note("the bound index <= |blocks|+1 fails on " + std::to_string(bound_violations) + " of " +
             std::to_string(total) + " partitions, e.g. " + first_violator);
  return run.finish();
}

// Two insertions at distinct blocks commute once the later index is shifted
// past the earlier guest's blocks.
inline SuiteReport run_lemma31(const SuiteConfig& cfg) {
  detail::SuiteRun run("lemma31", cfg.seed);
  const LabelTable& lt = detail::suite_labels();
  std::vector<Partition> hosts =
      partial_partitions(detail::atom_run(1, static_cast<Atom>(cfg.max_atoms)));
  std::vector<Partition> gj = partial_partitions(detail::atom_run(5, 6));
  std::vector<Partition> gk = partial_partitions(detail::atom_run(7, 8));
  for (const auto& p : hosts) {
    if (p.size() < 2) continue;
    for (std::size_t a = 0; a < p.size(); ++a) {
      for (std::size_t b = 0; b < p.size(); ++b) {
        if (a == b) continue;
        for (const auto& j : gj) {
          if (j.empty()) continue;
          for (const auto& k : gk) {
            if (k.empty()) continue;
            for (const auto& iota : enumerate_insertions(p, a, j)) {
              for (const auto& mu : enumerate_insertions(p, b, k)) {
                run.instance();
                json rep = json::object();
                rep["p"] = print_partition_stored(p, lt);
                rep["a"] = a;
                rep["b"] = b;
                rep["j"] = print_partition_stored(j, lt);
                rep["k"] = print_partition_stored(k, lt);
                try {
                  std::size_t b_after = b < a ? b : b - 1 + j.size();
                  Partition left = insert(insert(p, a, j, iota), b_after, k, mu);
                  std::size_t a_after = a < b ? a : a - 1 + k.size();
                  Partition right = insert(insert(p, b, k, mu), a_after, j, iota);
                  if (!(left == right))
                    run.fail_case("insertions at distinct blocks do not commute", rep);
                } catch (const error& e) {
                  run.fail_case(std::string("unexpected error: ") + e.what(), rep);
                }
              }
            }
          }
        }
      }
    }
  }
  return run.finish();
}

// The associator's failure splits off the cross-insertion sum, which is
// symmetric in the two guests.
inline SuiteReport run_prelie(const SuiteConfig& cfg) {
  detail::SuiteRun run("prelie", cfg.seed);
  const LabelTable& lt = detail::suite_labels();
  std::vector<Partition> hosts =
      partial_partitions(detail::atom_run(1, static_cast<Atom>(cfg.max_atoms)));
  std::vector<Partition> gq = partial_partitions(detail::atom_run(5, 6));
  std::vector<Partition> gs = partial_partitions(detail::atom_run(7, 8));
  for (const auto& p : hosts) {
    if (p.empty()) continue;
    for (const auto& q : gq) {
      if (q.empty()) continue;
      for (const auto& s : gs) {
        if (s.empty()) continue;
        run.instance();
        json rep = json::object();
        rep["p"] = print_partition(p, lt);
        rep["q"] = print_partition(q, lt);
        rep["s"] = print_partition(s, lt);
        try {
          if (!prelie_decomposition_check(p, q, s)) {
            run.fail_case("associator does not reduce to the cross-insertion sum", rep);
            continue;
          }
          if (!(i_part(p, q, s) == i_part(p, s, q)))
            run.fail_case("cross-insertion sum is not symmetric in the guests", rep);
        } catch (const error& e) {
          run.fail_case(std::string("unexpected error: ") + e.what(), rep);
        }
      }
    }
  }
  return run.finish();
}

namespace detail {

// The five partitions with at most two blocks of at most two atoms each, up
// to relabeling, planted at the given base atom.
inline std::vector<Partition> small_shapes(Atom base) {
  return {
      Partition({Block{base}}),
      Partition({Block{base, static_cast<Atom>(base + 1)}}),
      Partition({Block{base}, Block{static_cast<Atom>(base + 1)}}),
      Partition({Block{base, static_cast<Atom>(base + 1)}, Block{static_cast<Atom>(base + 2)}}),
      Partition({Block{base, static_cast<Atom>(base + 1)},
                 Block{static_cast<Atom>(base + 2), static_cast<Atom>(base + 3)}}),
  };
}

}  // namespace detail

// The unsigned bracket satisfies Jacobi: exhaustive over small shapes, then
// seeded random triples over three disjoint 4-atom windows.
inline SuiteReport run_jacobi(const SuiteConfig& cfg) {
  detail::SuiteRun run("jacobi", cfg.seed);
  const LabelTable& lt = detail::suite_labels();
  auto check = [&](const Partition& p, const Partition& q, const Partition& s) {
    run.instance();
    json rep = json::object();
    rep["p"] = print_partition(p, lt);
    rep["q"] = print_partition(q, lt);
    rep["s"] = print_partition(s, lt);
    try {
      if (!jacobi_defect(p, q, s).is_zero())
        run.fail_case("jacobi defect is nonzero", rep);
    } catch (const error& e) {
      run.fail_case(std::string("unexpected error: ") + e.what(), rep);
    }
  };
  for (const auto& p : detail::small_shapes(1))
    for (const auto& q : detail::small_shapes(5))
      for (const auto& s : detail::small_shapes(9)) check(p, q, s);

  Sampler smp(cfg.seed);
  auto draw_nonempty = [&](Atom delta) {
    for (int tries = 0; tries < 100; ++tries) {
      Partition p = smp.partition(4, 4);
      if (!p.empty()) return detail::shift_partition(p, delta);
    }
    return detail::shift_partition(Partition({Block{1}}), delta);
  };
  std::size_t random_triples = cfg.samples < 200 ? cfg.samples : 200;
  for (std::size_t i = 0; i < random_triples; ++i)
    check(draw_nonempty(0), draw_nonempty(4), draw_nonempty(8));
  run.note("random triples drawn over three disjoint 4-atom windows: " +
           std::to_string(random_triples));
  return run.finish();
}

// Report-only probe of the signed bracket on the same small-shape family.
// Failures stay empty by design; the per-instance outcomes land in the notes.
inline SuiteReport run_jacobi_signed(const SuiteConfig& cfg) {
  detail::SuiteRun run("jacobi-signed", cfg.seed);
  std::size_t zero = 0, total = 0;
  std::vector<std::string> lines;
  for (const auto& p : detail::small_shapes(1)) {
    for (const auto& q : detail::small_shapes(5)) {
      for (const auto& s : detail::small_shapes(9)) {
        run.instance();
        ++total;
        LinComb<OrderedPartition> d = jacobi_defect_signed(p, q, s);
        bool ok = d.is_zero();
        if (ok) ++zero;
        lines.push_back(p.str() + " , " + q.str() + " , " + s.str() + ": " +
                        (ok ? "zero" : "nonzero (" + std::to_string(d.size()) + " terms)"));
      }
    }
  }
  run.note("signed jacobi defect vanishes on " + std::to_string(zero) + " of " +
           std::to_string(total) + " shape triples");
  for (auto& l : lines) run.note(std::move(l));
  return run.finish();
}

// The half-edge picture tracks the partition calculus: subgraphs validate,
// contraction is the partition quotient on vertices, insertion and bracket
// are the partition operations under the glued pairing.
inline SuiteReport run_graph_bridge(const SuiteConfig& cfg) {
  detail::SuiteRun run("graph-bridge", cfg.seed);
  const LabelTable& lt = detail::suite_labels();

  std::size_t feyn_total = 0, feyn_connected = 0;
  std::vector<FeynmanDiagram> feyn_small;  // up to 3 half-edges, for insert/bracket
  std::vector<FeynmanDiagram> feyn_mid;    // up to 5 half-edges, for component folds

  for (std::size_t n = 0; n <= 6; ++n) {
    std::vector<Partition> parts = set_partitions(detail::atom_run(1, static_cast<Atom>(n)));
    for (const auto& image : involutions(n)) {
      StructureMap sigma = detail::involution_sigma(image);
      for (const auto& vertices : parts) {
        FeynmanDiagram g{sigma, vertices};
        ++feyn_total;
        run.instance();
        json grep = json::object();
        grep["graph"] = print_feynman(g, lt);
        auto vg = validate(g);
        if (!vg.empty()) {
          run.fail_case("enumerated diagram fails validation: " + vg.front(), grep);
          continue;
        }
        bool gconn = is_connected(g);
        if (gconn) ++feyn_connected;
        if (n <= 3 && !g.vertices.empty()) feyn_small.push_back(g);
        if (n <= 5 && gconn && g.vertices.size() >= 2) feyn_mid.push_back(g);
        GraphLines gl = lines(g);

        for (const auto& sel : detail::index_subsets(g.vertices.size())) {
          run.instance();
          auto rep = [&] {
            json r = json::object();
            r["graph"] = print_feynman(g, lt);
            r["selection"] = sel;
            return r;
          };
          try {
            Block content;
            for (std::size_t idx : sel) content |= g.vertices.blocks()[idx];
            FeynmanDiagram sub = subgraph(g, sel);
            auto vs = validate(sub);
            if (!vs.empty()) {
              run.fail_case("subgraph fails validation: " + vs.front(), rep());
              continue;
            }
            std::vector<std::pair<Atom, Atom>> want_pairs;
            std::vector<Atom> want_ext, want_internal;
            for (Atom e : content) {
              Atom f = g.sigma.apply(e);
              if (f == e || !content.contains(f)) {
                want_ext.push_back(e);
              } else {
                want_internal.push_back(e);
                if (e < f) want_pairs.emplace_back(e, f);
              }
            }
            GraphLines sl = lines(sub);
            if (!(sl.external == Block(want_ext)) || sl.internal != want_pairs) {
              run.fail_case("subgraph lines drift from the ambient pairing", rep());
              continue;
            }
            if (sel.size() == g.vertices.size() &&
                (!(sub.sigma == g.sigma) || !(sub.vertices == g.vertices))) {
              run.fail_case("full selection does not reproduce the diagram", rep());
              continue;
            }
            if (!gconn) continue;
            if (is_connected(sub)) {
              FeynmanDiagram q = quotient_graph(g, sel);
              auto vq = validate(q);
              if (!vq.empty()) {
                run.fail_case("contraction fails validation: " + vq.front(), rep());
                continue;
              }
              if (!(q.vertices == quotient(g.vertices, Block(want_internal)).partition)) {
                run.fail_case("contracted vertices differ from the partition quotient", rep());
                continue;
              }
              if (!(lines(q).external == gl.external)) {
                run.fail_case("external legs changed under contraction", rep());
                continue;
              }
              if (!is_connected(q))
                run.fail_case("contraction broke connectivity", rep());
            } else {
              try {
                quotient_graph(g, sel);
                run.fail_case("disconnected selection was not refused", rep());
              } catch (const error& e) {
                if (e.code() != errc::disconnected)
                  run.fail_case(std::string("wrong refusal: ") + e.what(), rep());
              }
            }
          } catch (const error& e) {
            run.fail_case(std::string("unexpected error: ") + e.what(), rep());
          }
        }
      }
    }
  }
  if (feyn_total != 16956)
    run.fail_case("half-edge census mismatch: " + std::to_string(feyn_total) +
                      " diagrams on up to 6 half-edges, expected 16956",
                  json::object());
  run.note("feynman diagrams on up to 6 half-edges: " + std::to_string(feyn_total) +
           " (connected: " + std::to_string(feyn_connected) + ")");

  // contraction folded over the components of a disconnected selection
  for (const auto& g : feyn_mid) {
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
      for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
        run.instance();
        json rep = json::object();
        rep["graph"] = print_feynman(g, lt);
        rep["components"] = json::array({json::array({i}), json::array({j})});
        try {
          auto internal_of = [&](std::size_t idx) {
            const Block& blk = g.vertices.blocks()[idx];
            std::vector<Atom> v;
            for (Atom e : blk) {
              Atom f = g.sigma.apply(e);
              if (f != e && blk.contains(f)) v.push_back(e);
            }
            return Block(std::move(v));
          };
          Block ji = internal_of(i), jj = internal_of(j);
          FeynmanDiagram qd = quotient_disconnected(g, {{i}, {j}});
          if (!(qd.vertices == iterated_quotient(g.vertices, std::vector<Block>{ji, jj}))) {
            run.fail_case("component fold differs from the iterated quotient", rep);
            continue;
          }
          if (!(qd.sigma == g.sigma.restricted(g.sigma.carrier() - (ji | jj)))) {
            run.fail_case("component fold kept the wrong half-edges", rep);
            continue;
          }
          FeynmanDiagram qd2 = quotient_disconnected(g, {{j}, {i}});
          if (!(qd2.vertices == qd.vertices) || !(qd2.sigma == qd.sigma))
            run.fail_case("component order leaks into the fold", rep);
        } catch (const error& e) {
          run.fail_case(std::string("unexpected error: ") + e.what(), rep);
        }
      }
    }
  }

  // ordinary graphs: even carriers, perfect matchings
  std::size_t ord_total = 0, ord_connected = 0;
  std::vector<OrdinaryGraph> ord_small;
  for (std::size_t n = 0; n <= 6; n += 2) {
    std::vector<Partition> parts = set_partitions(detail::atom_run(1, static_cast<Atom>(n)));
    for (const auto& m : perfect_matchings(n)) {
      StructureMap sigma = detail::matching_sigma(m);
      for (const auto& vertices : parts) {
        OrdinaryGraph g{sigma, vertices};
        ++ord_total;
        run.instance();
        json grep = json::object();
        grep["graph"] = print_ordinary(g, lt);
        auto vg = validate(g);
        if (!vg.empty()) {
          run.fail_case("enumerated graph fails validation: " + vg.front(), grep);
          continue;
        }
        bool gconn = is_connected(g);
        if (gconn) ++ord_connected;
        if (n == 2 && !g.vertices.empty()) ord_small.push_back(g);

        for (const auto& sel : detail::index_subsets(g.vertices.size())) {
          run.instance();
          auto rep = [&] {
            json r = json::object();
            r["graph"] = print_ordinary(g, lt);
            r["selection"] = sel;
            return r;
          };
          try {
            Block content;
            for (std::size_t idx : sel) content |= g.vertices.blocks()[idx];
            std::vector<Atom> keep;
            for (Atom e : content)
              if (content.contains(g.sigma.apply(e))) keep.push_back(e);
            Block internal(std::move(keep));

            OrdinaryGraph sub = subgraph(g, sel);
            auto vs = validate(sub);
            if (!vs.empty()) {
              run.fail_case("subgraph fails validation: " + vs.front(), rep());
              continue;
            }
            std::vector<Block> want;
            for (std::size_t idx : sel) {
              Block t = g.vertices.blocks()[idx] & internal;
              if (!t.empty()) want.push_back(std::move(t));
            }
            if (!(sub.vertices == Partition(std::move(want)))) {
              run.fail_case("subgraph vertices differ from the internal traces", rep());
              continue;
            }
            if (!gconn) continue;
            if (is_connected(sub)) {
              OrdinaryGraph q = quotient_graph(g, sel);
              auto vq = validate(q);
              if (!vq.empty()) {
                run.fail_case("contraction fails validation: " + vq.front(), rep());
                continue;
              }
              if (!(q.vertices == quotient(g.vertices, internal).partition))
                run.fail_case("contracted vertices differ from the partition quotient", rep());
            } else {
              try {
                quotient_graph(g, sel);
                run.fail_case("disconnected selection was not refused", rep());
              } catch (const error& e) {
                if (e.code() != errc::disconnected)
                  run.fail_case(std::string("wrong refusal: ") + e.what(), rep());
              }
            }
          } catch (const error& e) {
            run.fail_case(std::string("unexpected error: ") + e.what(), rep());
          }
        }
      }
    }
  }
  run.note("ordinary graphs on even carriers up to 6: " + std::to_string(ord_total) +
           " (connected: " + std::to_string(ord_connected) + ")");

  // insertion and bracket lift the partition operations
  std::size_t feyn_inserts = 0;
  std::vector<FeynmanDiagram> guests;
  for (const auto& g : feyn_small)
    if (g.sigma.carrier().size() <= 2) guests.push_back(detail::shift_feynman(g, 3));
  for (const auto& host : feyn_small) {
    for (const auto& guest : guests) {
      for (std::size_t a = 0; a < host.vertices.size(); ++a) {
        for (const auto& iota : enumerate_insertions(host.vertices, a, guest.vertices)) {
          run.instance();
          ++feyn_inserts;
          json rep = json::object();
          rep["host"] = print_feynman(host, lt);
          rep["guest"] = print_feynman(guest, lt);
          rep["a"] = a;
          try {
            FeynmanDiagram r = insert_graph(host, a, guest, iota);
            auto vr = validate(r);
            if (!vr.empty()) {
              run.fail_case("insertion fails validation: " + vr.front(), rep);
              continue;
            }
            if (!(r.vertices == insert(host.vertices, a, guest.vertices, iota))) {
              run.fail_case("inserted vertices differ from the partition insertion", rep);
              continue;
            }
            if (!(lines(r).external == (lines(host).external | lines(guest).external)))
              run.fail_case("insertion changed the external legs", rep);
          } catch (const error& e) {
            run.fail_case(std::string("unexpected error: ") + e.what(), rep);
          }
        }
      }
    }
  }
  std::size_t brackets = 0;
  for (const auto& host : feyn_small) {
    for (const auto& guest : guests) {
      run.instance();
      ++brackets;
      json rep = json::object();
      rep["g1"] = print_feynman(host, lt);
      rep["g2"] = print_feynman(guest, lt);
      try {
        GraphLinComb bg = bracket_graphs(host, guest);
        if (!(bg.terms == bracket(host.vertices, guest.vertices)))
          run.fail_case("graph bracket differs from the partition bracket", rep);
      } catch (const error& e) {
        run.fail_case(std::string("graph bracket failed: ") + e.what(), rep);
      }
    }
  }
  for (const auto& host : ord_small) {
    OrdinaryGraph guest = detail::shift_ordinary(host, 2);
    run.instance();
    ++brackets;
    json rep = json::object();
    rep["g1"] = print_ordinary(host, lt);
    rep["g2"] = print_ordinary(guest, lt);
    try {
      GraphLinComb bg = bracket_graphs(host, guest);
      if (!(bg.terms == bracket(host.vertices, guest.vertices)))
        run.fail_case("graph bracket differs from the partition bracket", rep);
    } catch (const error& e) {
      run.fail_case(std::string("graph bracket failed: ") + e.what(), rep);
    }
  }
  run.note("insertions checked: " + std::to_string(feyn_inserts) +
           ", brackets checked: " + std::to_string(brackets));
  {
    run.instance();
    FeynmanDiagram none{};
    try {
      bracket_graphs(none, feyn_small.front());
      run.fail_case("bracket accepted a graph without vertices", json::object());
    } catch (const error& e) {
      if (e.code() != errc::empty_operand)
        run.fail_case(std::string("wrong refusal: ") + e.what(), json::object());
    }
  }

  // two-type graphs: full census with at most 2+2 vertices on up to 8
  // half-edges, then selections, contractions, and sampled insertions
  std::size_t adm_candidates = 0, adm_valid = 0, adm_connected = 0;
  std::size_t adm_bad_selection = 0, adm_q_disconnected = 0, adm_q_rejected = 0, adm_q_ok = 0;
  std::vector<AdmissibleGraph> pool;
  for (std::size_t n = 0; n <= 8; n += 2) {
    std::vector<Partition> parts = set_partitions(detail::atom_run(1, static_cast<Atom>(n)));
    for (const auto& m : perfect_matchings(n)) {
      StructureMap sigma = detail::matching_sigma(m);
      for (const auto& pt : parts) {
        if (pt.size() > 4) continue;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pt.size()); ++mask) {
          std::vector<Block> first, second;
          for (std::size_t i = 0; i < pt.size(); ++i)
            (mask >> i & 1 ? first : second).push_back(pt.blocks()[i]);
          if (first.size() > 2 || second.size() > 2) continue;
          ++adm_candidates;
          AdmissibleGraph g{sigma, Partition(std::move(first)), Partition(std::move(second))};
          if (!validate(g).empty()) continue;
          ++adm_valid;
          bool gconn = is_connected(g);
          if (gconn) ++adm_connected;
          pool.push_back(g);

          for (const auto& sf : detail::index_subsets(g.first_type.size())) {
            for (const auto& ss : detail::index_subsets(g.second_type.size())) {
              run.instance();
              auto rep = [&] {
                json r = json::object();
                r["graph"] = print_admissible(g, lt);
                r["first"] = sf;
                r["second"] = ss;
                return r;
              };
              try {
                AdmissibleGraph sub = subgraph(g, sf, ss);
                auto vs = validate(sub);
                if (!vs.empty()) {
                  run.fail_case("subgraph fails validation: " + vs.front(), rep());
                  continue;
                }
                if (!gconn) continue;
                bool sconn = is_connected(sub);
                try {
                  AdmissibleGraph q = quotient_graph(g, sf, ss);
                  if (!sconn) {
                    run.fail_case("disconnected selection was not refused", rep());
                    continue;
                  }
                  ++adm_q_ok;
                  Block lp = sub.first_type.range();
                  Block kp = sub.second_type.range();
                  if (!(q.first_type == quotient(g.first_type, lp).partition) ||
                      !(q.second_type == quotient(g.second_type, kp).partition))
                    run.fail_case("contracted vertices differ from the partition quotients",
                                  rep());
                } catch (const error& e) {
                  if (e.code() == errc::disconnected) {
                    if (sconn)
                      run.fail_case("connected selection refused as disconnected", rep());
                    else
                      ++adm_q_disconnected;
                  } else if (e.code() == errc::result_not_admissible) {
                    ++adm_q_rejected;
                  } else {
                    run.fail_case(std::string("unexpected error: ") + e.what(), rep());
                  }
                }
              } catch (const error& e) {
                if (e.code() == errc::bad_selection)
                  ++adm_bad_selection;
                else
                  run.fail_case(std::string("unexpected error: ") + e.what(), rep());
              }
            }
          }
        }
      }
    }
  }
  run.note("two-type census up to 8 half-edges: " + std::to_string(adm_valid) + " valid of " +
           std::to_string(adm_candidates) + " candidates (connected: " +
           std::to_string(adm_connected) + ")");
  run.note("two-type selections refused: " + std::to_string(adm_bad_selection) +
           "; contractions: " + std::to_string(adm_q_ok) + " ok, " +
           std::to_string(adm_q_disconnected) + " disconnected, " +
           std::to_string(adm_q_rejected) + " rejected");

  std::vector<const AdmissibleGraph*> hosts;
  std::vector<AdmissibleGraph> adm_guests;
  for (const auto& g : pool) {
    if (g.first_type.empty()) continue;
    hosts.push_back(&g);
    if (g.sigma.carrier().size() <= 4) adm_guests.push_back(detail::shift_admissible(g, 16));
  }
  std::size_t ins_tries = cfg.samples < 200 ? cfg.samples : 200;
  std::size_t ins_ok = 0, ins_rejected = 0;
  Sampler smp(cfg.seed);
  if (!hosts.empty() && !adm_guests.empty()) {
    for (std::size_t t = 0; t < ins_tries; ++t) {
      run.instance();
      const AdmissibleGraph& h = *hosts[smp.draw(hosts.size())];
      const AdmissibleGraph& u = adm_guests[smp.draw(adm_guests.size())];
      std::size_t a = smp.draw(h.first_type.size());
      InsertionMap iota;
      for (Atom x : h.first_type.blocks()[a]) iota[x] = smp.draw(u.first_type.size());
      bool paired = !h.second_type.empty() && !u.second_type.empty() && smp.draw(2);
      std::size_t b = 0;
      InsertionMap kappa;
      if (paired) {
        b = smp.draw(h.second_type.size());
        for (Atom x : h.second_type.blocks()[b]) kappa[x] = smp.draw(u.second_type.size());
      }
      json rep = json::object();
      rep["host"] = print_admissible(h, lt);
      rep["guest"] = print_admissible(u, lt);
      rep["a"] = a;
      rep["mode"] = paired ? "paired" : "trivial-second";
      try {
        AdmissibleGraph out = insert_admissible(
            h, u, paired ? InsertMode::paired : InsertMode::trivial_second, a, iota, b, kappa);
        ++ins_ok;
        if (!(out.first_type == insert(h.first_type, a, u.first_type, iota))) {
          run.fail_case("first-type insertion differs from the partition insertion", rep);
          continue;
        }
        Partition want_second = paired ? insert(h.second_type, b, u.second_type, kappa)
                                       : trivial_insert(h.second_type, u.second_type);
        if (!(out.second_type == want_second))
          run.fail_case("second-type insertion differs from the partition insertion", rep);
      } catch (const error& e) {
        if (e.code() == errc::result_not_admissible)
          ++ins_rejected;
        else
          run.fail_case(std::string("unexpected error: ") + e.what(), rep);
      }
    }
  }
  run.note("two-type insertions sampled: " + std::to_string(ins_ok) + " ok, " +
           std::to_string(ins_rejected) + " rejected of " + std::to_string(ins_tries));
  return run.finish();
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "prop21", "duality", "adjust",  "coassoc",       "nilpotent",
      "lemma31", "prelie",  "jacobi", "jacobi-signed", "graph-bridge"};
  return names;
}

inline SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "prop21") return run_prop21(cfg);
  if (name == "duality") return run_duality(cfg);
  if (name == "adjust") return run_adjust(cfg);
  if (name == "coassoc") return run_coassoc(cfg);
  if (name == "nilpotent") return run_nilpotent(cfg);
  if (name == "lemma31") return run_lemma31(cfg);
  if (name == "prelie") return run_prelie(cfg);
  if (name == "jacobi") return run_jacobi(cfg);
  if (name == "jacobi-signed") return run_jacobi_signed(cfg);
  if (name == "graph-bridge") return run_graph_bridge(cfg);
  fail(errc::bad_index, "unknown suite \"" + name + "\"");
}

inline std::vector<SuiteReport> run_all_suites(const SuiteConfig& cfg) {
  std::vector<SuiteReport> out;
  out.reserve(suite_names().size());
  for (const auto& name : suite_names()) out.push_back(run_suite(name, cfg));
  return out;
}

}  // namespace partcalc
