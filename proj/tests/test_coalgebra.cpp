#include <algorithm>

#include <catch2/catch_amalgamated.hpp>

#include <partcalc/coalgebra.hpp>
#include <partcalc/enumerate.hpp>

#include "test_util.hpp"

using namespace partcalc;

namespace {

TensorTerm term(PartitionTuple l, PartitionTuple r) {
  return TensorTerm{std::move(l), std::move(r)};
}

PartitionTuple tup(std::vector<Partition> parts) { return PartitionTuple(std::move(parts)); }

}  // namespace

TEST_CASE("family enumeration excludes empty-quotient and straddling families", "[coalgebra]") {
  auto sorted = [](std::vector<Partition> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  auto two_singletons = sorted(enumerate_admissible_families(Partition{Block{1}, Block{2}}));
  REQUIRE(two_singletons == std::vector<Partition>{Partition{Block{1}}, Partition{Block{2}}});

  REQUIRE(enumerate_admissible_families(Partition{}).empty());

  auto one_block = sorted(enumerate_admissible_families(Partition{Block{1, 2}}));
  REQUIRE(one_block == std::vector<Partition>{Partition{Block{1}}, Partition{Block{2}}});
}

TEST_CASE("coproduct lists boundary terms plus one term per family", "[coalgebra]") {
  Partition p{Block{1, 2}};
  LinComb<TensorTerm> d = coproduct(p);
  REQUIRE(d.size() == 4);
  REQUIRE(d.coeff(term(PartitionTuple{}, PartitionTuple::of(p))) == 1);
  REQUIRE(d.coeff(term(PartitionTuple::of(p), PartitionTuple{})) == 1);
  REQUIRE(d.coeff(term(PartitionTuple::of(Partition{Block{1}}),
                       PartitionTuple::of(Partition{Block{2}}))) == 1);
  REQUIRE(d.coeff(term(PartitionTuple::of(Partition{Block{2}}),
                       PartitionTuple::of(Partition{Block{1}}))) == 1);
}

TEST_CASE("coproduct of the unit is unit tensor unit", "[coalgebra]") {
  LinComb<TensorTerm> d = coproduct(Partition{});
  REQUIRE(d.size() == 1);
  REQUIRE(d.coeff(TensorTerm{}) == 1);
  REQUIRE(coproduct_tuple(PartitionTuple{}) == d);
}

TEST_CASE("reduced coproduct drops exactly the boundary", "[coalgebra]") {
  LinComb<TensorTerm> d = reduced_coproduct(Partition{Block{1}, Block{2}});
  REQUIRE(d.size() == 2);
  REQUIRE(d.coeff(term(PartitionTuple::of(Partition{Block{1}}),
                       PartitionTuple::of(Partition{Block{2}}))) == 1);
  REQUIRE(d.coeff(term(PartitionTuple::of(Partition{Block{2}}),
                       PartitionTuple::of(Partition{Block{1}}))) == 1);

  REQUIRE(reduced_coproduct(Partition{}).is_zero());
  REQUIRE(reduced_coproduct(Partition{Block{1}}).is_zero());
  REQUIRE(reduced_coproduct(Partition{Block{1, 2, 3}}).size() > 0);
}

TEST_CASE("reduced coproduct vanishes exactly on ranges of size at most one", "[coalgebra]") {
  for (const auto& p : partial_partitions({1, 2, 3})) {
    CAPTURE(p.str());
    REQUIRE(reduced_coproduct(p).is_zero() == (p.range().size() <= 1));
  }
}

TEST_CASE("coproduct restricts family blocks componentwise on tuples", "[coalgebra]") {
  PartitionTuple t = tup({Partition{Block{1, 2}}, Partition{Block{3}}});
  LinComb<TensorTerm> d = coproduct_tuple(t);
  REQUIRE(d.coeff(term(tup({Partition{Block{1}}}), tup({Partition{Block{2}}, Partition{Block{3}}}))) == 1);
  REQUIRE(d.coeff(term(tup({Partition{Block{3}}}), tup({Partition{Block{1, 2}}}))) == 1);
  REQUIRE(d.coeff(term(tup({Partition{Block{1}}, Partition{Block{3}}}),
                       tup({Partition{Block{2}}}))) == 1);
}

TEST_CASE("coassociativity holds on every partition with at most four atoms", "[coalgebra]") {
  for (const auto& p : partial_partitions({1, 2, 3, 4})) {
    CAPTURE(p.str());
    REQUIRE(check_coassociativity(p));
  }
}

TEST_CASE("both coassociativity sides expand to the same chain count", "[coalgebra]") {
  Partition p{Block{1, 2}, Block{3}};
  auto [lhs, rhs] = coassociativity_sides(p);
  REQUIRE(lhs == rhs);
  REQUIRE_FALSE(lhs.is_zero());
}

TEST_CASE("nilpotency index counts the atoms of the range", "[coalgebra]") {
  REQUIRE(nilpotency_index(Partition{}) == 1);
  REQUIRE(nilpotency_index(Partition{Block{1}}) == 1);
  REQUIRE(nilpotency_index(Partition{Block{1}, Block{2}}) == 2);
  REQUIRE(nilpotency_index(Partition{Block{1, 2}}) == 2);
  REQUIRE(nilpotency_index(Partition{Block{1, 2, 3}}) == 3);
  REQUIRE(nilpotency_index(Partition{Block{1, 4}, Block{2}, Block{3}}) == 4);

  for (const auto& p : partial_partitions({1, 2, 3, 4})) {
    CAPTURE(p.str());
    std::size_t expected = p.range().empty() ? 1 : p.range().size();
    REQUIRE(nilpotency_index(p) == expected);
  }
}
