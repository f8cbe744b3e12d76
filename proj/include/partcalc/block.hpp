#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "error.hpp"

namespace partcalc {

// Atoms are dense integer ids. Human-readable labels exist only at the I/O
// boundary; see json_io.hpp.
using Atom = std::uint32_t;

// A finite set of atoms, stored sorted and duplicate-free.
class Block {
 public:
  Block() = default;
  Block(std::initializer_list<Atom> atoms) : atoms_(atoms) { normalize(); }
  explicit Block(std::vector<Atom> atoms) : atoms_(std::move(atoms)) { normalize(); }

  const std::vector<Atom>& atoms() const { return atoms_; }
  std::size_t size() const { return atoms_.size(); }
  bool empty() const { return atoms_.empty(); }
  Atom min() const { return atoms_.front(); }  // undefined on the empty block

  bool contains(Atom a) const { return std::binary_search(atoms_.begin(), atoms_.end(), a); }

  bool contains_all(const Block& other) const {
    return std::includes(atoms_.begin(), atoms_.end(), other.atoms_.begin(), other.atoms_.end());
  }

  bool intersects(const Block& other) const {
    auto i = atoms_.begin();
    auto j = other.atoms_.begin();
    while (i != atoms_.end() && j != other.atoms_.end()) {
      if (*i < *j) {
        ++i;
      } else if (*j < *i) {
        ++j;
      } else {
        return true;
      }
    }
    return false;
  }

  bool disjoint(const Block& other) const { return !intersects(other); }

  friend Block operator|(const Block& a, const Block& b) {
    std::vector<Atom> out;
    out.reserve(a.size() + b.size());
    std::set_union(a.atoms_.begin(), a.atoms_.end(), b.atoms_.begin(), b.atoms_.end(),
                   std::back_inserter(out));
    return Block::presorted(std::move(out));
  }

  friend Block operator&(const Block& a, const Block& b) {
    std::vector<Atom> out;
    std::set_intersection(a.atoms_.begin(), a.atoms_.end(), b.atoms_.begin(), b.atoms_.end(),
                          std::back_inserter(out));
    return Block::presorted(std::move(out));
  }

  friend Block operator-(const Block& a, const Block& b) {
    std::vector<Atom> out;
    std::set_difference(a.atoms_.begin(), a.atoms_.end(), b.atoms_.begin(), b.atoms_.end(),
                        std::back_inserter(out));
    return Block::presorted(std::move(out));
  }

  Block& operator|=(const Block& other) {
    *this = *this | other;
    return *this;
  }

  // Lexicographic on the sorted atom list. For disjoint blocks this coincides
  // with ordering by minimum atom.
  auto operator<=>(const Block&) const = default;

  auto begin() const { return atoms_.begin(); }
  auto end() const { return atoms_.end(); }

  std::string str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < atoms_.size(); ++i) {
      if (i) os << ',';
      os << atoms_[i];
    }
    os << '}';
    return os.str();
  }

 private:
  static Block presorted(std::vector<Atom> atoms) {
    Block b;
    b.atoms_ = std::move(atoms);
    return b;
  }

  void normalize() {
    std::sort(atoms_.begin(), atoms_.end());
    atoms_.erase(std::unique(atoms_.begin(), atoms_.end()), atoms_.end());
  }

  std::vector<Atom> atoms_;
};

}  // namespace partcalc
