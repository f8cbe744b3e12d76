#include <catch2/catch_amalgamated.hpp>

#include <partcalc/core_ops.hpp>
#include <partcalc/partition.hpp>

#include "test_util.hpp"

using namespace partcalc;
using testutil::thrown;

TEST_CASE("partition equality ignores stored block order", "[partition]") {
  Partition a{Block{3, 4}, Block{1, 2}};
  Partition b{Block{1, 2}, Block{3, 4}};
  REQUIRE(a == b);
  REQUIRE(a.blocks().front() == Block{3, 4});
  REQUIRE(a.canonical_blocks().front() == Block{1, 2});
  REQUIRE(a.canonical().blocks().front() == Block{1, 2});
}

TEST_CASE("partition construction rejects bad block sets", "[partition]") {
  REQUIRE(thrown([] { Partition{Block{1, 2}, Block{2, 3}}; }) == errc::validation_error);
  REQUIRE(thrown([] { Partition{Block{1}, Block{}}; }) == errc::validation_error);
  REQUIRE(Partition{}.empty());
}

TEST_CASE("reversion is the union of the blocks", "[partition]") {
  REQUIRE(Partition{Block{1, 2}, Block{3, 4}}.range() == Block{1, 2, 3, 4});
  REQUIRE(Partition{}.range() == Block{});
  REQUIRE(Partition{Block{5}, Block{1, 9}}.range() == Block{1, 5, 9});
}

TEST_CASE("restriction keeps the traces of B on each block", "[partition]") {
  Partition p{Block{1, 2}, Block{3, 4}, Block{5, 6}};
  REQUIRE(restriction(p, Block{2, 3}) == Partition{Block{2}, Block{3}});
  REQUIRE(restriction(p, Block{}) == Partition{});
  REQUIRE(restriction(p, Block{1, 2}) == Partition{Block{1, 2}});
}

TEST_CASE("touched range collects the blocks meeting B", "[partition]") {
  Partition p{Block{1, 2}, Block{3, 4}, Block{5, 6}};
  REQUIRE(touched_range(p, Block{2, 3}) == Block{1, 2, 3, 4});
  REQUIRE(touched_range(Partition{Block{1, 2}}, Block{1, 2}) == Block{1, 2});
  REQUIRE(touched_range(p, Block{}) == Block{});
}

TEST_CASE("quotient merges the touched remainder into the ideal block", "[partition]") {
  Partition p{Block{1, 2}, Block{3, 4}, Block{5, 6}};

  QuotientResult r = quotient(p, Block{2, 3});
  REQUIRE(r.partition == Partition{Block{5, 6}, Block{1, 4}});
  REQUIRE(r.ideal_part == Block{1, 4});
  REQUIRE_FALSE(r.trivial);

  QuotientResult travail = quotient(p, Block{3, 4});
  REQUIRE(travail.partition == Partition{Block{1, 2}, Block{5, 6}});
  REQUIRE(travail.ideal_part.empty());
  REQUIRE(travail.trivial);

  QuotientResult unit = quotient(Partition{Block{1, 2}}, Block{});
  REQUIRE(unit.partition == Partition{Block{1, 2}});
  REQUIRE(unit.trivial);
}

TEST_CASE("iterated quotient folds the family in order", "[partition]") {
  Partition p{Block{1, 2}, Block{3, 4}, Block{5}};
  REQUIRE(iterated_quotient(p, std::vector<Block>{Block{2, 3}}) ==
          quotient(p, Block{2, 3}).partition);
  REQUIRE(iterated_quotient(p, std::vector<Block>{Block{2, 3}, Block{1}}) ==
          Partition{Block{5}, Block{4}});
  REQUIRE(iterated_quotient(p, std::vector<Block>{}) == p);
  REQUIRE(thrown([&] { iterated_quotient(p, std::vector<Block>{Block{1}, Block{1, 3}}); }) ==
          errc::atom_not_in_range);
}

TEST_CASE("admissibility means pairwise disjoint touched ranges", "[partition]") {
  REQUIRE(is_admissible(Partition{Block{1}, Block{2}}, Partition{Block{1}, Block{2}}));
  REQUIRE_FALSE(is_admissible(Partition{Block{1, 2}, Block{3, 4}}, Partition{Block{1}, Block{2}}));
  REQUIRE(is_admissible(Partition{Block{1, 2}}, Partition{Block{1, 2}}));
}

TEST_CASE("adjust merges family blocks with overlapping touched ranges", "[partition]") {
  REQUIRE(adjust(Partition{Block{1, 2}, Block{3, 4}}, Partition{Block{1}, Block{2}}) ==
          Partition{Block{1, 2}});
  Partition already{Block{1}, Block{2}};
  REQUIRE(adjust(already, already) == already);
  Partition p{Block{1, 2}, Block{3, 4}, Block{5, 6}};
  Partition f{Block{1}, Block{4}, Block{5}};
  REQUIRE(adjust(p, f) == f);
  REQUIRE(is_admissible(p, adjust(p, Partition{Block{1}, Block{2}, Block{5}})));
}

TEST_CASE("adjust preserves the iterated quotient", "[partition]") {
  Partition p{Block{1, 2}, Block{3, 4}, Block{5, 6}};
  Partition f{Block{1}, Block{2}, Block{5}};
  Partition g = adjust(p, f);
  REQUIRE(g.range() == f.range());
  REQUIRE(is_admissible(p, g));
  REQUIRE(iterated_quotient(p, g) == iterated_quotient(p, f));
}

TEST_CASE("insert replaces a block by the guest enlarged along the map", "[partition]") {
  Partition host{Block{1, 2}, Block{3}};
  Partition guest{Block{4}, Block{5, 6}};
  REQUIRE(insert(host, 0, guest, InsertionMap{{1, 0}, {2, 1}}) ==
          Partition{Block{1, 4}, Block{2, 5, 6}, Block{3}});
  REQUIRE(insert(Partition{Block{1}}, 0, Partition{Block{2}}, InsertionMap{{1, 0}}) ==
          Partition{Block{1, 2}});
  REQUIRE(insert(host, 1, Partition{Block{4}, Block{5}}, InsertionMap{{3, 0}}) ==
          Partition{Block{1, 2}, Block{3, 4}, Block{5}});
}

TEST_CASE("insert keeps the guest blocks in place of the site", "[partition]") {
  Partition host{Block{1, 2}, Block{3}};
  Partition out = insert(host, 0, Partition{Block{5}, Block{4}}, InsertionMap{{1, 0}, {2, 1}});
  REQUIRE(out.blocks() == std::vector<Block>{Block{1, 5}, Block{2, 4}, Block{3}});
}

TEST_CASE("insert validates the site, the map, and the ranges", "[partition]") {
  Partition host{Block{1, 2}, Block{3}};
  Partition guest{Block{4}};
  REQUIRE(thrown([&] { insert(host, 2, guest, InsertionMap{}); }) == errc::bad_index);
  REQUIRE(thrown([&] { insert(host, 0, guest, InsertionMap{{1, 0}}); }) ==
          errc::incomplete_insertion_map);
  REQUIRE(thrown([&] { insert(host, 0, guest, InsertionMap{{1, 0}, {2, 0}, {3, 0}}); }) ==
          errc::incomplete_insertion_map);
  REQUIRE(thrown([&] { insert(host, 0, guest, InsertionMap{{1, 0}, {2, 1}}); }) ==
          errc::bad_index);
  REQUIRE(thrown([&] { insert(host, 0, Partition{Block{2}}, InsertionMap{{1, 0}, {2, 0}}); }) ==
          errc::ranges_not_disjoint);
}

TEST_CASE("trivial insertion is disjoint union", "[partition]") {
  REQUIRE(trivial_insert(Partition{Block{1}}, Partition{Block{2}}) ==
          Partition{Block{1}, Block{2}});
  REQUIRE(trivial_insert(Partition{}, Partition{Block{2, 3}}) == Partition{Block{2, 3}});
  REQUIRE(trivial_insert(Partition{Block{1, 2}, Block{3}}, Partition{Block{4}, Block{5}}) ==
          Partition{Block{1, 2}, Block{3}, Block{4}, Block{5}});
}

TEST_CASE("canonical reinsert undoes a quotient", "[partition]") {
  Partition p{Block{1, 2}, Block{3, 4}, Block{5, 6}};
  Block b{2, 3};
  QuotientResult q = quotient(p, b);
  Partition touched = restriction(p, touched_range(p, b));
  REQUIRE(canonical_reinsert(q.partition, touched, b) == p);

  Partition two{Block{1}, Block{2}};
  QuotientResult travail = quotient(two, Block{1});
  REQUIRE(travail.trivial);
  REQUIRE(canonical_reinsert(travail.partition, restriction(two, Block{1}), Block{1}) == two);
}

TEST_CASE("canonical reinsert recovers the original over every subset", "[partition]") {
  Partition p{Block{1, 3}, Block{2, 5}, Block{4}};
  for (Atom mask = 0; mask < 32; ++mask) {
    std::vector<Atom> atoms;
    for (Atom i = 0; i < 5; ++i)
      if (mask & (Atom{1} << i)) atoms.push_back(i + 1);
    Block b{std::move(atoms)};
    QuotientResult q = quotient(p, b);
    REQUIRE(canonical_reinsert(q.partition, restriction(p, touched_range(p, b)), b) == p);
  }
}

TEST_CASE("factor quotient recovers host, site, and insertion map", "[partition]") {
  Partition k{Block{1, 4}, Block{2, 5, 6}, Block{3}};
  Partition j{Block{4}, Block{5, 6}};
  Factorization f = factor_quotient(k, j);
  REQUIRE(f.host == Partition{Block{1, 2}, Block{3}});
  REQUIRE(f.host.block(f.a) == Block{1, 2});
  REQUIRE(f.iota == InsertionMap{{1, 0}, {2, 1}});
  REQUIRE(insert(f.host, f.a, j, f.iota) == k);
  REQUIRE(quotient(k, j.range()).partition == f.host);

  Factorization small = factor_quotient(Partition{Block{1, 2}}, Partition{Block{2}});
  REQUIRE(small.host == Partition{Block{1}});
  REQUIRE(small.a == 0);
  REQUIRE(small.iota == InsertionMap{{1, 0}});

  REQUIRE(thrown([] {
            factor_quotient(Partition{Block{1}, Block{2}}, Partition{Block{2}});
          }) == errc::trivial_quotient);
  REQUIRE(thrown([] {
            factor_quotient(Partition{Block{1, 2}}, Partition{Block{1}, Block{2}});
          }) == errc::not_a_restriction);
}

TEST_CASE("merge witness reproduces a double quotient in one step", "[partition]") {
  Partition p{Block{1, 2}, Block{3, 4}, Block{5}};
  Partition j{Block{2, 3}};
  Partition k{Block{1}};
  Partition m = merge_witness(p, j, k);
  REQUIRE(m == Partition{Block{1, 2, 3}});
  REQUIRE(iterated_quotient(quotient(p, Block{2, 3}).partition, k) ==
          iterated_quotient(p, m));
  REQUIRE(iterated_quotient(p, m) == Partition{Block{5}, Block{4}});

  REQUIRE(merge_witness(Partition{Block{1}, Block{2}}, Partition{Block{1}}, Partition{Block{2}}) ==
          Partition{Block{1}, Block{2}});
  REQUIRE(merge_witness(p, j, Partition{}) == j);
}

TEST_CASE("subpartition test requires every block inside a host block", "[partition]") {
  Partition p{Block{1, 2}, Block{3, 4}};
  REQUIRE(is_subpartition(Partition{Block{1}, Block{3}}, p));
  REQUIRE_FALSE(is_subpartition(Partition{Block{1, 3}}, p));
  REQUIRE(is_subpartition(Partition{}, p));
}

TEST_CASE("tuples canonicalize and reject overlapping components", "[partition]") {
  PartitionTuple t(std::vector<Partition>{Partition{Block{3}, Block{4}}, Partition{},
                                          Partition{Block{1, 2}}});
  REQUIRE(t.size() == 2);
  REQUIRE(t.parts().front() == Partition{Block{1, 2}});
  REQUIRE(t.merged() == Partition{Block{1, 2}, Block{3}, Block{4}});
  REQUIRE(PartitionTuple{}.empty());
  REQUIRE(thrown([] {
            PartitionTuple(std::vector<Partition>{Partition{Block{1, 2}}, Partition{Block{2, 3}}});
          }) == errc::validation_error);
}

TEST_CASE("tuple quotient acts on the component holding each family block", "[partition]") {
  PartitionTuple t(std::vector<Partition>{Partition{Block{1, 2}}, Partition{Block{3}, Block{4}}});
  PartitionTuple after = tuple_quotient(t, Partition{Block{3}});
  REQUIRE(after ==
          PartitionTuple(std::vector<Partition>{Partition{Block{1, 2}}, Partition{Block{4}}}));

  PartitionTuple single = PartitionTuple::of(Partition{Block{1, 2}, Block{3, 4}});
  REQUIRE(tuple_quotient(single, Partition{Block{2, 3}}) ==
          PartitionTuple::of(Partition{Block{1, 4}}));

  REQUIRE(tuple_quotient(PartitionTuple{}, Partition{}) == PartitionTuple{});
}

TEST_CASE("tuple admissibility localizes each family block", "[partition]") {
  PartitionTuple t(std::vector<Partition>{Partition{Block{1, 2}}, Partition{Block{3}, Block{4}}});
  REQUIRE(admits_to_tuple(t, Partition{Block{1}, Block{3}}));
  REQUIRE_FALSE(admits_to_tuple(t, Partition{Block{2, 3}}));
  REQUIRE(admits_to_tuple(t, Partition{}));
}
