#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "core_ops.hpp"
#include "error.hpp"
#include "lincomb.hpp"
#include "partition.hpp"

// Insertion composition, its signed variant, and the Lie bracket.

namespace partcalc {

// A partition compared by its stored block sequence rather than canonically.
// The signed composition is only well defined on these: the inserted blocks
// occupy the host block's position, and the sign reads off the position.
struct OrderedPartition {
  Partition value;
  friend bool operator==(const OrderedPartition& a, const OrderedPartition& b) {
    return a.value.blocks() == b.value.blocks();
  }
  friend auto operator<=>(const OrderedPartition& a, const OrderedPartition& b) {
    return a.value.blocks() <=> b.value.blocks();
  }
};

namespace detail {
inline void require_compose_args(const Partition& host, std::size_t a, const Partition& guest,
                                 const char* who) {
  if (a >= host.size()) fail(errc::bad_index, std::string(who) + ": block index");
  if (guest.empty()) fail(errc::empty_guest, std::string(who) + ": empty guest");
  if (host.range().intersects(guest.range()))
    fail(errc::ranges_not_disjoint, std::string(who) + ": operands share atoms");
}
}  // namespace detail

// All |guest|^{|host block a|} total maps, ordered lexicographically with the
// smallest atom as the most significant digit.
inline std::vector<InsertionMap> enumerate_insertions(const Partition& host, std::size_t a,
                                                      const Partition& guest) {
  detail::require_compose_args(host, a, guest, "enumerate_insertions");
  const auto& site = host.blocks()[a].atoms();
  std::vector<std::size_t> digits(site.size(), 0);
  std::vector<InsertionMap> out;
  for (;;) {
    InsertionMap m;
    for (std::size_t i = 0; i < site.size(); ++i) m[site[i]] = digits[i];
    out.push_back(std::move(m));
    std::size_t i = site.size();
    while (i-- > 0) {
      if (++digits[i] < guest.size()) break;
      digits[i] = 0;
      if (i == 0) return out;
    }
    if (site.empty()) return out;
  }
}

// One summand of the composition with the indices that produced it, for
// identities quantified over individual insertions.
struct CompositionTerm {
  Partition partition;
  std::size_t a = 0;
  InsertionMap iota;
};

inline std::vector<CompositionTerm> compose_terms(const Partition& host, std::size_t a,
                                                  const Partition& guest) {
  std::vector<CompositionTerm> out;
  for (auto& m : enumerate_insertions(host, a, guest)) {
    Partition r = insert(host, a, guest, m);
    out.push_back(CompositionTerm{std::move(r), a, std::move(m)});
  }
  return out;
}

inline LinComb<Partition> compose_at(const Partition& host, std::size_t a,
                                     const Partition& guest) {
  LinComb<Partition> out;
  for (const auto& m : enumerate_insertions(host, a, guest))
    out.add(insert(host, a, guest, m), 1);
  return out;
}

inline LinComb<Partition> compose(const Partition& p, const Partition& q) {
  if (p.empty() || q.empty()) fail(errc::empty_operand, "compose: empty operand");
  LinComb<Partition> out;
  for (std::size_t a = 0; a < p.size(); ++a) out += compose_at(p, a, q);
  return out;
}

// Σ_a (−1)^a with a the 1-based stored position of the host block. Terms are
// kept in their in-place block order, not canonicalized.
inline LinComb<OrderedPartition> compose_signed(const Partition& p, const Partition& q) {
  if (p.empty() || q.empty()) fail(errc::empty_operand, "compose_signed: empty operand");
  LinComb<OrderedPartition> out;
  for (std::size_t a = 0; a < p.size(); ++a) {
    Rational sign = (a % 2 == 0) ? -1 : 1;
    for (const auto& m : enumerate_insertions(p, a, q))
      out.add(OrderedPartition{insert(p, a, q, m)}, sign);
  }
  return out;
}

// The cross terms of the associator: insert the two guests into two distinct
// host blocks. After inserting `q` at block a, the block that sat at b sits at
// b when b < a and at b − 1 + |q| otherwise.
inline LinComb<Partition> i_part(const Partition& p, const Partition& q, const Partition& s) {
  if (p.range().intersects(q.range()) || p.range().intersects(s.range()) ||
      q.range().intersects(s.range()))
    fail(errc::ranges_not_disjoint, "i_part: operands share atoms");
  LinComb<Partition> out;
  if (q.empty() || s.empty()) return out;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = 0; b < p.size(); ++b) {
      if (b == a) continue;
      std::size_t b_after = b < a ? b : b - 1 + q.size();
      for (const auto& iota : enumerate_insertions(p, a, q)) {
        Partition mid = insert(p, a, q, iota);
        for (const auto& mu : enumerate_insertions(p, b, s))
          out.add(insert(mid, b_after, s, mu), 1);
      }
    }
  }
  return out;
}

inline LinComb<Partition> bracket(const Partition& p, const Partition& q) {
  return compose(p, q) - compose(q, p);
}

// Bilinear extensions. Terms of a combination always carry the full atom set
// of the operands that built it, so range checks inside `compose` still apply.
inline LinComb<Partition> compose(const LinComb<Partition>& x, const Partition& q) {
  LinComb<Partition> out;
  for (const auto& [t, c] : x.terms()) {
    LinComb<Partition> inner = compose(t, q);
    inner.scale(c);
    out += inner;
  }
  return out;
}

inline LinComb<Partition> compose(const Partition& p, const LinComb<Partition>& y) {
  LinComb<Partition> out;
  for (const auto& [t, c] : y.terms()) {
    LinComb<Partition> inner = compose(p, t);
    inner.scale(c);
    out += inner;
  }
  return out;
}

inline LinComb<Partition> bracket(const Partition& p, const LinComb<Partition>& y) {
  return compose(p, y) - compose(y, p);
}

inline LinComb<Partition> jacobi_defect(const Partition& p, const Partition& q,
                                        const Partition& s) {
  if (p.range().intersects(q.range()) || p.range().intersects(s.range()) ||
      q.range().intersects(s.range()))
    fail(errc::ranges_not_disjoint, "jacobi_defect: operands share atoms");
  LinComb<Partition> out;
  out += bracket(p, bracket(q, s));
  out += bracket(q, bracket(s, p));
  out += bracket(s, bracket(p, q));
  return out;
}

inline bool prelie_decomposition_check(const Partition& p, const Partition& q,
                                       const Partition& s) {
  LinComb<Partition> lhs = compose(compose(p, q), s);
  LinComb<Partition> rhs = compose(p, compose(q, s));
  rhs += i_part(p, q, s);
  return lhs == rhs;
}

// Signed counterparts over ordered terms.
inline LinComb<OrderedPartition> compose_signed(const LinComb<OrderedPartition>& x,
                                                const LinComb<OrderedPartition>& y) {
  LinComb<OrderedPartition> out;
  for (const auto& [tx, cx] : x.terms())
    for (const auto& [ty, cy] : y.terms()) {
      LinComb<OrderedPartition> inner = compose_signed(tx.value, ty.value);
      inner.scale(cx * cy);
      out += inner;
    }
  return out;
}

inline LinComb<OrderedPartition> bracket_signed(const LinComb<OrderedPartition>& x,
                                                const LinComb<OrderedPartition>& y) {
  return compose_signed(x, y) - compose_signed(y, x);
}

inline LinComb<OrderedPartition> jacobi_defect_signed(const Partition& p, const Partition& q,
                                                      const Partition& s) {
  if (p.range().intersects(q.range()) || p.range().intersects(s.range()) ||
      q.range().intersects(s.range()))
    fail(errc::ranges_not_disjoint, "jacobi_defect_signed: operands share atoms");
  auto one = [](const Partition& t) {
    LinComb<OrderedPartition> lc;
    lc.add(OrderedPartition{t}, 1);
    return lc;
  };
  LinComb<OrderedPartition> out;
  out += bracket_signed(one(p), bracket_signed(one(q), one(s)));
  out += bracket_signed(one(q), bracket_signed(one(s), one(p)));
  out += bracket_signed(one(s), bracket_signed(one(p), one(q)));
  return out;
}

}  // namespace partcalc
