#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "block.hpp"
#include "error.hpp"

namespace partcalc {

// An ordered sequence of pairwise-disjoint nonempty blocks. Equality and
// ordering ignore the stored block order (they compare canonical forms, blocks
// sorted by least atom); the stored order is significant only to the signed
// composition, which indexes blocks as given.
class Partition {
 public:
  Partition() = default;

  Partition(std::initializer_list<Block> blocks) : blocks_(blocks) { validate_and_index(); }

  explicit Partition(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
    validate_and_index();
  }

  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }
  bool empty() const { return blocks_.empty(); }

  // The reversion: union of all blocks.
  Block range() const {
    Block r;
    for (const auto& b : blocks_) r |= b;
    return r;
  }

  const Block& block(std::size_t i) const {
    if (i >= blocks_.size()) fail(errc::bad_index, "block index " + std::to_string(i));
    return blocks_[i];
  }

  // Blocks in canonical order (sorted by least atom).
  std::vector<Block> canonical_blocks() const {
    std::vector<Block> out;
    out.reserve(blocks_.size());
    for (std::size_t i : canon_) out.push_back(blocks_[i]);
    return out;
  }

  Partition canonical() const { return Partition(canonical_blocks()); }

  // Index of the canonical position of stored block `stored`, and vice versa.
  std::size_t canonical_index_of(std::size_t stored) const {
    for (std::size_t i = 0; i < canon_.size(); ++i)
      if (canon_[i] == stored) return i;
    fail(errc::bad_index, "stored block index " + std::to_string(stored));
  }

  // Stored index of the block equal to `b`, or npos.
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::size_t find_block(const Block& b) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i] == b) return i;
    return npos;
  }

  // Stored index of the block containing atom `a`, or npos.
  std::size_t block_of(Atom a) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      if (blocks_[i].contains(a)) return i;
    return npos;
  }

  bool operator==(const Partition& o) const { return compare(o) == 0; }

  std::strong_ordering operator<=>(const Partition& o) const {
    int c = compare(o);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string str() const {
    std::ostringstream os;
    os << '{';
    auto cb = canonical_blocks();
    for (std::size_t i = 0; i < cb.size(); ++i) {
      if (i) os << ',';
      os << cb[i].str();
    }
    os << '}';
    return os.str();
  }

 private:
  // Lexicographic comparison of canonical block sequences.
  int compare(const Partition& o) const {
    std::size_t n = std::min(canon_.size(), o.canon_.size());
    for (std::size_t i = 0; i < n; ++i) {
      const Block& a = blocks_[canon_[i]];
      const Block& b = o.blocks_[o.canon_[i]];
      if (a < b) return -1;
      if (b < a) return 1;
    }
    if (canon_.size() < o.canon_.size()) return -1;
    if (canon_.size() > o.canon_.size()) return 1;
    return 0;
  }

  void validate_and_index() {
    for (const auto& b : blocks_)
      if (b.empty()) fail(errc::validation_error, "empty block in partition");
    for (std::size_t i = 0; i < blocks_.size(); ++i)
      for (std::size_t j = i + 1; j < blocks_.size(); ++j)
        if (blocks_[i].intersects(blocks_[j]))
          fail(errc::validation_error,
               "blocks not disjoint: " + blocks_[i].str() + " and " + blocks_[j].str());
    canon_.resize(blocks_.size());
    std::iota(canon_.begin(), canon_.end(), std::size_t{0});
    std::sort(canon_.begin(), canon_.end(), [this](std::size_t a, std::size_t b) {
      return blocks_[a].min() < blocks_[b].min();
    });
  }

  std::vector<Block> blocks_;
  std::vector<std::size_t> canon_;  // canonical order of blocks_
};

struct QuotientResult {
  Partition partition;
  Block ideal_part;  // R_B \ B; empty in the travail case
  bool trivial = false;
};

// Total map from the atoms of one host block to guest block indices.
using InsertionMap = std::map<Atom, std::size_t>;

// Components with pairwise-disjoint ranges. Canonicalized at construction:
// empty components are dropped and the rest sorted by least atom of their
// range. The length-0 tuple is the unit and doubles as the empty Partition.
class PartitionTuple {
 public:
  PartitionTuple() = default;

  explicit PartitionTuple(std::vector<Partition> parts) {
    for (auto& p : parts)
      if (!p.empty()) parts_.push_back(std::move(p));
    std::sort(parts_.begin(), parts_.end(), [](const Partition& a, const Partition& b) {
      return a.range().min() < b.range().min();
    });
    for (std::size_t i = 0; i < parts_.size(); ++i)
      for (std::size_t j = i + 1; j < parts_.size(); ++j)
        if (parts_[i].range().intersects(parts_[j].range()))
          fail(errc::validation_error, "tuple components with overlapping ranges");
  }

  static PartitionTuple of(const Partition& p) {
    return PartitionTuple(std::vector<Partition>{p});
  }

  const std::vector<Partition>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  Block range() const {
    Block r;
    for (const auto& p : parts_) r |= p.range();
    return r;
  }

  // All components' blocks merged into a single Partition.
  Partition merged() const {
    std::vector<Block> blocks;
    for (const auto& p : parts_)
      for (const auto& b : p.blocks()) blocks.push_back(b);
    return Partition(std::move(blocks));
  }

  bool operator==(const PartitionTuple& o) const { return (*this <=> o) == 0; }

  std::strong_ordering operator<=>(const PartitionTuple& o) const {
    std::size_t n = std::min(parts_.size(), o.parts_.size());
    for (std::size_t i = 0; i < n; ++i) {
      auto c = parts_[i] <=> o.parts_[i];
      if (c != 0) return c;
    }
    if (parts_.size() < o.parts_.size()) return std::strong_ordering::less;
    if (parts_.size() > o.parts_.size()) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) os << ',';
      os << parts_[i].str();
    }
    os << ')';
    return os.str();
  }

 private:
  std::vector<Partition> parts_;
};

}  // namespace partcalc
