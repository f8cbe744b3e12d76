#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "block.hpp"
#include "error.hpp"
#include "partition.hpp"

// Set-level calculus on partial partitions: restriction, quotient, insertion,
// admissibility, adjustment, and the tuple quotient.

namespace partcalc {

// Union of a family of blocks.
inline Block reversion(const std::vector<Block>& family) {
  Block r;
  for (const auto& b : family) r |= b;
  return r;
}

inline Block reversion(const Partition& p) { return p.range(); }

namespace detail {
inline void require_in_range(const Partition& p, const Block& b, const char* who) {
  if (!p.range().contains_all(b))
    fail(errc::atom_not_in_range, std::string(who) + ": " + b.str() + " not within " +
                                      reversion(p).str());
}
}  // namespace detail

// The nonempty traces {I_i ∩ B}.
inline Partition restriction(const Partition& p, const Block& b) {
  detail::require_in_range(p, b, "restriction");
  std::vector<Block> out;
  for (const auto& blk : p.blocks()) {
    Block t = blk & b;
    if (!t.empty()) out.push_back(std::move(t));
  }
  return Partition(std::move(out));
}

// R_B: union of the blocks of P meeting B.
inline Block touched_range(const Partition& p, const Block& b) {
  detail::require_in_range(p, b, "touched_range");
  Block r;
  for (const auto& blk : p.blocks())
    if (blk.intersects(b)) r |= blk;
  return r;
}

// Blocks disjoint from B plus the single remainder block R_B \ B. When
// R_B = B the remainder is empty and dropped (the travail case).
inline QuotientResult quotient(const Partition& p, const Block& b) {
  detail::require_in_range(p, b, "quotient");
  std::vector<Block> out;
  Block touched;
  for (const auto& blk : p.blocks()) {
    if (blk.intersects(b))
      touched |= blk;
    else
      out.push_back(blk);
  }
  QuotientResult res;
  res.ideal_part = touched - b;
  res.trivial = res.ideal_part.empty();
  if (!res.trivial) out.push_back(res.ideal_part);
  res.partition = Partition(std::move(out));
  return res;
}

// Left fold of `quotient`; the divisor at each step is the restriction of the
// current partition to the next family block (always a plain quotient here,
// because earlier steps only remove atoms of earlier blocks).
inline Partition iterated_quotient(const Partition& p, const std::vector<Block>& family) {
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (family[i].intersects(family[j]))
        fail(errc::atom_not_in_range, "iterated_quotient: family blocks overlap");
  if (!p.range().contains_all(reversion(family)))
    fail(errc::atom_not_in_range, "iterated_quotient: family not within range");
  Partition cur = p;
  for (const auto& b : family) cur = quotient(cur, b).partition;
  return cur;
}

inline Partition iterated_quotient(const Partition& p, const Partition& family) {
  return iterated_quotient(p, family.blocks());
}

// Touched ranges of the family's blocks pairwise disjoint (which makes the
// iterated quotient order-independent).
inline bool is_admissible(const Partition& p, const Partition& family) {
  detail::require_in_range(p, family.range(), "is_admissible");
  std::vector<Block> ranges;
  ranges.reserve(family.size());
  for (const auto& b : family.blocks()) ranges.push_back(touched_range(p, b));
  for (std::size_t i = 0; i < ranges.size(); ++i)
    for (std::size_t j = i + 1; j < ranges.size(); ++j)
      if (ranges[i].intersects(ranges[j])) return false;
  return true;
}

// Merge family blocks along the transitive closure of "touched ranges
// intersect". The result is admissible, has the same reversion, and divides P
// to the same quotient.
inline Partition adjust(const Partition& p, const Partition& family) {
  detail::require_in_range(p, family.range(), "adjust");
  const auto& blocks = family.blocks();
  std::vector<Block> ranges;
  ranges.reserve(blocks.size());
  for (const auto& b : blocks) ranges.push_back(touched_range(p, b));

  std::vector<std::size_t> parent(blocks.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (ranges[i].intersects(ranges[j])) parent[find(i)] = find(j);

  std::vector<Block> merged(blocks.size());
  for (std::size_t i = 0; i < blocks.size(); ++i) merged[find(i)] |= blocks[i];
  std::vector<Block> out;
  for (std::size_t i = 0; i < blocks.size(); ++i)
    if (find(i) == i) out.push_back(std::move(merged[i]));
  return Partition(std::move(out));
}

// Replace host block `a` in place by the guest blocks, each enlarged by its
// fiber under iota. Stored order: host blocks before a, then the guest blocks
// in their stored order, then the rest.
inline Partition insert(const Partition& host, std::size_t a, const Partition& guest,
                        const InsertionMap& iota) {
  if (a >= host.size()) fail(errc::bad_index, "insert: block index " + std::to_string(a));
  if (host.range().intersects(guest.range()))
    fail(errc::ranges_not_disjoint, "insert: host and guest share atoms");
  const Block& site = host.blocks()[a];
  std::vector<Block> fibers(guest.size());
  for (Atom x : site) {
    auto it = iota.find(x);
    if (it == iota.end())
      fail(errc::incomplete_insertion_map, "insert: atom " + std::to_string(x) + " unmapped");
    if (it->second >= guest.size())
      fail(errc::bad_index, "insert: target block " + std::to_string(it->second));
    fibers[it->second] |= Block{x};
  }
  for (const auto& [atom, target] : iota) {
    (void)target;
    if (!site.contains(atom))
      fail(errc::incomplete_insertion_map,
           "insert: map source atom " + std::to_string(atom) + " outside host block");
  }
  std::vector<Block> out;
  out.reserve(host.size() - 1 + guest.size());
  for (std::size_t i = 0; i < a; ++i) out.push_back(host.blocks()[i]);
  for (std::size_t j = 0; j < guest.size(); ++j) out.push_back(guest.blocks()[j] | fibers[j]);
  for (std::size_t i = a + 1; i < host.size(); ++i) out.push_back(host.blocks()[i]);
  return Partition(std::move(out));
}

// Insertion at the empty block: plain disjoint union.
inline Partition trivial_insert(const Partition& host, const Partition& guest) {
  if (host.range().intersects(guest.range()))
    fail(errc::ranges_not_disjoint, "trivial_insert: ranges share atoms");
  std::vector<Block> out;
  out.reserve(host.size() + guest.size());
  for (const auto& b : host.blocks()) out.push_back(b);
  for (const auto& b : guest.blocks()) out.push_back(b);
  return Partition(std::move(out));
}

// Undo a quotient: re-insert the restriction-to-B at the ideal block.
//
// `touched` must be the original blocks meeting B (that is,
// restrict(P, touched_range(P,B)) for the P that produced `host`). The
// insertion map is canonical: an ideal atom x lying in original block T goes
// to the guest block T ∩ B. The insertion site is (R(touched) \ B) ∩ R(host),
// so the same routine also reinserts into a further-restricted quotient; when
// the site is empty (the travail case) this degenerates to a disjoint union.
inline Partition canonical_reinsert(const Partition& host, const Partition& touched,
                                    const Block& b) {
  if (!touched.range().contains_all(b))
    fail(errc::not_a_quotient_shape, "canonical_reinsert: B not within touched blocks");
  Partition guest = restriction(touched, b);
  Block site = (touched.range() - b) & host.range();
  if (site.empty()) return trivial_insert(host, guest);
  std::size_t a = host.find_block(site);
  if (a == Partition::npos)
    fail(errc::not_a_quotient_shape, "canonical_reinsert: ideal block " + site.str() +
                                         " absent from host " + host.str());
  InsertionMap iota;
  for (Atom x : site) {
    std::size_t t = touched.block_of(x);
    if (t == Partition::npos)
      fail(errc::not_a_quotient_shape,
           "canonical_reinsert: ideal atom " + std::to_string(x) + " missing from touched blocks");
    Block target = touched.blocks()[t] & b;
    std::size_t g = guest.find_block(target);
    if (g == Partition::npos)
      fail(errc::not_a_quotient_shape, "canonical_reinsert: trace " + target.str() + " not a block");
    iota[x] = g;
  }
  return insert(host, a, guest, iota);
}

struct Factorization {
  Partition host;      // the quotient K / R(J), canonical block order
  std::size_t a;       // canonical index of the ideal block R_J \ J
  InsertionMap iota;   // ideal atoms to J's stored block indices
};

// Unique decomposition K = insert(I, a, J, iota) of a partition K containing J
// as the restriction to R(J), provided the quotient by R(J) is nontrivial.
inline Factorization factor_quotient(const Partition& k, const Partition& j) {
  Block jr = j.range();
  if (!k.range().contains_all(jr) || !(restriction(k, jr) == j))
    fail(errc::not_a_restriction, "factor_quotient: J is not the restriction of K to R(J)");
  Block rj = touched_range(k, jr);
  Block ideal = rj - jr;
  if (ideal.empty()) fail(errc::trivial_quotient, "factor_quotient: R_J = J");
  Factorization f;
  f.host = quotient(k, jr).partition.canonical();
  f.a = f.host.find_block(ideal);
  for (Atom x : ideal) {
    std::size_t kb = k.block_of(x);
    Block trace = k.blocks()[kb] & jr;
    std::size_t target = j.find_block(trace);
    if (target == Partition::npos)
      fail(errc::not_a_restriction, "factor_quotient: trace " + trace.str() + " not a J block");
    f.iota[x] = target;
  }
  return f;
}

// The witness family {M_k}: a single admissible family over P whose quotient
// equals the double quotient (P/J)/K. One block per block of K, merging each
// K-block with the J-blocks whose touched range it meets, plus one block per
// J-block that no K-block touches. Dropping those untouched J-blocks (tempting,
// since the K-indexed part of the formula never sees them) breaks the law
// (P/J)/K = P/M whenever J does real work away from K.
inline Partition merge_witness(const Partition& p, const Partition& j, const Partition& k) {
  if (!is_admissible(p, j)) fail(errc::not_admissible, "merge_witness: J not admissible over P");
  Partition pj = iterated_quotient(p, j);
  if (!pj.range().contains_all(k.range()) || !is_admissible(pj, k))
    fail(errc::not_admissible, "merge_witness: K not admissible over P/J");
  Block jr = j.range();
  Block kr = k.range();
  Block jk = jr | kr;
  std::vector<Block> out;
  out.reserve(k.size() + j.size());
  std::vector<bool> j_touched(j.size(), false);
  for (const auto& kk : k.blocks()) {
    Block m;
    for (const auto& blk : p.blocks())
      if (blk.disjoint(jr) && blk.intersects(kk)) m |= blk & kr;
    for (std::size_t idx = 0; idx < j.size(); ++idx) {
      Block rjj = touched_range(p, j.blocks()[idx]);
      if (rjj.intersects(kk)) {
        m |= rjj & jk;
        j_touched[idx] = true;
      }
    }
    out.push_back(std::move(m));
  }
  for (std::size_t idx = 0; idx < j.size(); ++idx)
    if (!j_touched[idx]) out.push_back(j.blocks()[idx]);
  return Partition(std::move(out));
}

// Every block of F lies inside some block of P.
inline bool is_subpartition(const Partition& f, const Partition& p) {
  for (const auto& fb : f.blocks()) {
    bool inside = false;
    for (const auto& pb : p.blocks())
      if (pb.contains_all(fb)) {
        inside = true;
        break;
      }
    if (inside) continue;
    return false;
  }
  return true;
}

// F admits to the tuple T: every F-block lies inside one component's range and
// the blocks meeting each component form a family admissible to it.
inline bool admits_to_tuple(const PartitionTuple& t, const Partition& f) {
  std::vector<Block> ranges;
  ranges.reserve(t.size());
  for (const auto& part : t.parts()) ranges.push_back(part.range());
  for (const auto& fb : f.blocks()) {
    bool inside = false;
    for (const auto& r : ranges)
      if (r.contains_all(fb)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  for (std::size_t i = 0; i < t.size(); ++i) {
    std::vector<Block> local;
    for (const auto& fb : f.blocks())
      if (ranges[i].contains_all(fb)) local.push_back(fb);
    if (!local.empty() && !is_admissible(t.parts()[i], Partition(std::move(local)))) return false;
  }
  return true;
}

// Componentwise iterated quotient; each component is divided only by the
// F-blocks inside its range, and emptied components are dropped.
inline PartitionTuple tuple_quotient(const PartitionTuple& t, const Partition& f) {
  if (!admits_to_tuple(t, f))
    fail(errc::not_admissible_to_tuple, "tuple_quotient: family does not admit to tuple");
  std::vector<Partition> out;
  out.reserve(t.size());
  for (const auto& part : t.parts()) {
    Block r = part.range();
    std::vector<Block> local;
    for (const auto& fb : f.blocks())
      if (r.contains_all(fb)) local.push_back(fb);
    out.push_back(iterated_quotient(part, local));
  }
  return PartitionTuple(std::move(out));
}

}  // namespace partcalc
