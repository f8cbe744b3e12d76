#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "block.hpp"
#include "partition.hpp"

// Exhaustive generators for small ground sets and a deterministic sampler.
// The generators return materialized vectors; every caller here works at
// sizes where that is a few thousand objects at most.

namespace partcalc {

// All subsets of the given atoms, empty set first.
inline std::vector<Block> all_subsets(const std::vector<Atom>& atoms) {
  std::vector<Block> out;
  out.reserve(std::size_t{1} << atoms.size());
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << atoms.size()); ++mask) {
    std::vector<Atom> sel;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (mask >> i & 1) sel.push_back(atoms[i]);
    out.push_back(Block(std::move(sel)));
  }
  return out;
}

// All partitions of exactly the given atoms, via restricted growth strings.
inline std::vector<Partition> set_partitions(const std::vector<Atom>& atoms) {
  std::vector<Partition> out;
  if (atoms.empty()) {
    out.push_back(Partition{});
    return out;
  }
  std::vector<std::size_t> rgs(atoms.size(), 0);
  for (;;) {
    std::size_t nblocks = 0;
    for (auto v : rgs) nblocks = std::max(nblocks, v + 1);
    std::vector<std::vector<Atom>> groups(nblocks);
    for (std::size_t i = 0; i < atoms.size(); ++i) groups[rgs[i]].push_back(atoms[i]);
    std::vector<Block> blocks;
    blocks.reserve(nblocks);
    for (auto& g : groups) blocks.push_back(Block(std::move(g)));
    out.push_back(Partition(std::move(blocks)));

    // next restricted growth string
    std::size_t i = atoms.size();
    while (i-- > 1) {
      std::size_t cap = 0;
      for (std::size_t j = 0; j < i; ++j) cap = std::max(cap, rgs[j] + 1);
      if (rgs[i] < cap) {
        ++rgs[i];
        for (std::size_t j = i + 1; j < atoms.size(); ++j) rgs[j] = 0;
        break;
      }
      rgs[i] = 0;
      if (i == 1) return out;
    }
    if (atoms.size() == 1) return out;
  }
}

// All partial partitions over the given ambient atoms: every subset, every
// partition of it. Includes the empty partition.
inline std::vector<Partition> partial_partitions(const std::vector<Atom>& ambient) {
  std::vector<Partition> out;
  for (const auto& sub : all_subsets(ambient))
    for (auto& p : set_partitions(sub.atoms())) out.push_back(std::move(p));
  return out;
}

// All involutions of {0,..,n-1} as images sigma[i].
inline std::vector<std::vector<std::size_t>> involutions(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(n);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    while (i < n && cur[i] != std::size_t(-1)) ++i;  // already paired
    if (i >= n) {
      out.push_back(cur);
      return;
    }
    cur[i] = i;  // fixed point
    self(self, i + 1);
    for (std::size_t j = i + 1; j < n; ++j) {
      if (cur[j] != std::size_t(-1)) continue;
      cur[i] = j;
      cur[j] = i;
      self(self, i + 1);
      cur[j] = std::size_t(-1);
    }
    cur[i] = std::size_t(-1);
  };
  std::fill(cur.begin(), cur.end(), std::size_t(-1));
  rec(rec, 0);
  return out;
}

// All perfect matchings of the given elements (size must be even) as lists of
// index pairs into the input vector.
inline std::vector<std::vector<std::pair<std::size_t, std::size_t>>> perfect_matchings(
    std::size_t n) {
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> out;
  if (n % 2 != 0) return out;
  std::vector<bool> used(n, false);
  std::vector<std::pair<std::size_t, std::size_t>> cur;
  auto rec = [&](auto&& self) -> void {
    std::size_t i = 0;
    while (i < n && used[i]) ++i;
    if (i >= n) {
      out.push_back(cur);
      return;
    }
    used[i] = true;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      cur.emplace_back(i, j);
      self(self);
      cur.pop_back();
      used[j] = false;
    }
    used[i] = false;
  };
  rec(rec);
  return out;
}

// Deterministic sampler. Draws go through draw()/pick() only, never through
// std::uniform_int_distribution, whose output differs across standard library
// implementations.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  std::uint64_t draw(std::uint64_t bound) { return bound == 0 ? 0 : rng_() % bound; }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(draw(v.size()))];
  }

  // Random partial partition on atoms drawn from {1,..,ambient}.
  Partition partition(Atom ambient, std::size_t max_atoms) {
    std::size_t want = static_cast<std::size_t>(draw(max_atoms + 1));
    std::vector<Atom> pool(ambient);
    for (Atom i = 0; i < ambient; ++i) pool[i] = i + 1;
    for (std::size_t i = 0; i < want && i < pool.size(); ++i) {
      std::size_t j = i + static_cast<std::size_t>(draw(pool.size() - i));
      std::swap(pool[i], pool[j]);
    }
    want = std::min(want, pool.size());
    std::vector<std::vector<Atom>> groups;
    for (std::size_t i = 0; i < want; ++i) {
      std::size_t g = static_cast<std::size_t>(draw(groups.size() + 1));
      if (g == groups.size()) groups.emplace_back();
      groups[g].push_back(pool[i]);
    }
    std::vector<Block> blocks;
    blocks.reserve(groups.size());
    for (auto& g : groups) blocks.push_back(Block(std::move(g)));
    return Partition(std::move(blocks));
  }

  // Random subset of the given block.
  Block subset(const Block& b) {
    std::vector<Atom> sel;
    for (Atom x : b)
      if (draw(2)) sel.push_back(x);
    return Block(std::move(sel));
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace partcalc
