#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>

namespace partcalc {

using Rational = boost::multiprecision::cpp_rational;

// Always "n/d", denominator positive, even for integers ("3/1").
inline std::string rational_str(const Rational& q) {
  return numerator(q).str() + "/" + denominator(q).str();
}

// Formal linear combination over Q with canonical-form keys. Zero coefficients
// are erased eagerly so equality is map equality.
template <class T>
class LinComb {
 public:
  using map_type = std::map<T, Rational>;

  LinComb() = default;

  void add(T key, Rational coeff) {
    if (coeff == 0) return;
    auto [it, fresh] = terms_.try_emplace(std::move(key), coeff);
    if (!fresh) {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  LinComb& operator+=(const LinComb& other) {
    for (const auto& [k, c] : other.terms_) add(k, c);
    return *this;
  }
  LinComb& operator-=(const LinComb& other) {
    for (const auto& [k, c] : other.terms_) add(k, -c);
    return *this;
  }
  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }

  LinComb& scale(const Rational& s) {
    if (s == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const map_type& terms() const { return terms_; }

  Rational coeff(const T& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  friend bool operator==(const LinComb&, const LinComb&) = default;

 private:
  map_type terms_;
};

}  // namespace partcalc
