#pragma once

// Monomials over a contiguous variable range x_low..x_high, the Borel
// partial order, and the elementary moves that generate it.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "borel/errors.hpp"

namespace borel {

// Names a poset of monomials: variables x_low..x_high at a fixed degree.
struct Ambient {
  int low = 0;
  int high = 0;
  int degree = 0;

  Ambient() = default;
  Ambient(int low_, int high_, int degree_)
      : low(low_), high(high_), degree(degree_) {
    if (low < 0 || high < low || degree < 0)
      throw Error("invalid ambient");
  }

  int variable_count() const { return high - low + 1; }

  bool operator==(const Ambient& o) const {
    return low == o.low && high == o.high && degree == o.degree;
  }
  bool operator!=(const Ambient& o) const { return !(*this == o); }
};

class Monomial {
 public:
  Monomial() : low_(0), exps_(1, 0) {}

  Monomial(int low, std::vector<std::uint8_t> exps)
      : low_(low), exps_(std::move(exps)) {
    if (low_ < 0 || exps_.empty()) throw Error("invalid monomial range");
  }

  static Monomial unit(int low, int high) {
    return Monomial(low, std::vector<std::uint8_t>(high - low + 1, 0));
  }

  static Monomial variable_power(int var, int exp, int low, int high) {
    if (var < low || var > high) throw Error("variable outside range");
    if (exp < 0 || exp > 255) throw Error("exponent outside representation");
    std::vector<std::uint8_t> e(high - low + 1, 0);
    e[var - low] = static_cast<std::uint8_t>(exp);
    return Monomial(low, std::move(e));
  }

  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(exps_.size()) - 1; }

  int exponent(int var) const {
    if (var < low_ || var > high()) return 0;
    return exps_[var - low_];
  }

  int degree() const {
    int d = 0;
    for (auto e : exps_) d += e;
    return d;
  }

  bool is_unit() const {
    for (auto e : exps_)
      if (e) return false;
    return true;
  }

  // Smallest variable with positive exponent; the unit monomial answers
  // high by convention (it makes the generator-update rule uniform).
  int min_var() const {
    for (std::size_t i = 0; i < exps_.size(); ++i)
      if (exps_[i]) return low_ + static_cast<int>(i);
    return high();
  }

  int max_var() const {
    for (std::size_t i = exps_.size(); i-- > 0;)
      if (exps_[i]) return low_ + static_cast<int>(i);
    return high();
  }

  // Drop the full power of the range's smallest variable.
  Monomial strip_smallest() const {
    Monomial m = *this;
    m.exps_[0] = 0;
    return m;
  }

  Monomial multiplied_by(int var) const {
    Monomial m = *this;
    if (var < low_ || var > high()) throw Error("variable outside range");
    m.exps_[var - low_] += 1;
    return m;
  }

  // x_{i+1}/x_i moves, one per variable carrying positive exponent.
  std::vector<Monomial> up_neighbors() const {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i + 1 < exps_.size(); ++i) {
      if (!exps_[i]) continue;
      Monomial m = *this;
      m.exps_[i] -= 1;
      m.exps_[i + 1] += 1;
      out.push_back(std::move(m));
    }
    return out;
  }

  // x_{j-1}/x_j moves.
  std::vector<Monomial> down_neighbors() const {
    std::vector<Monomial> out;
    for (std::size_t j = 1; j < exps_.size(); ++j) {
      if (!exps_[j]) continue;
      Monomial m = *this;
      m.exps_[j] -= 1;
      m.exps_[j - 1] += 1;
      out.push_back(std::move(m));
    }
    return out;
  }

  // Re-range with additional zero-exponent variables at the bottom.
  Monomial extended_low(int new_low) const {
    if (new_low > low_) throw Error("cannot shrink range");
    std::vector<std::uint8_t> e(exps_.size() + (low_ - new_low), 0);
    std::copy(exps_.begin(), exps_.end(), e.begin() + (low_ - new_low));
    return Monomial(new_low, std::move(e));
  }

  // Transfer the x_low exponent onto a freshly adjoined smaller variable.
  Monomial transported_low() const {
    if (low_ == 0) throw NoSmallerVariable("no variable below x0");
    std::vector<std::uint8_t> e(exps_.size() + 1, 0);
    e[0] = exps_[0];
    std::copy(exps_.begin() + 1, exps_.end(), e.begin() + 2);
    return Monomial(low_ - 1, std::move(e));
  }

  // Canonical rendering: factors in descending variable order, '^' for
  // exponents above one, '*'-separated; the unit renders as "1".
  std::string to_string() const {
    std::string out;
    for (std::size_t i = exps_.size(); i-- > 0;) {
      if (!exps_[i]) continue;
      if (!out.empty()) out += "*";
      out += "x" + std::to_string(low_ + static_cast<int>(i));
      if (exps_[i] > 1) out += "^" + std::to_string(exps_[i]);
    }
    return out.empty() ? "1" : out;
  }

  static Monomial parse(std::string_view text, int low, int high);

  bool operator==(const Monomial& o) const {
    return low_ == o.low_ && exps_ == o.exps_;
  }
  bool operator!=(const Monomial& o) const { return !(*this == o); }

  const std::vector<std::uint8_t>& raw_exponents() const { return exps_; }

 private:
  int low_;
  std::vector<std::uint8_t> exps_;
};

// Borel order: a >= b iff the top-down partial sums of exponent
// differences are all non-negative. Requires matching range and degree.
inline bool borel_geq(const Monomial& a, const Monomial& b) {
  if (a.low() != b.low() || a.high() != b.high())
    throw AmbientMismatch("borel_geq across variable ranges");
  if (a.degree() != b.degree())
    throw AmbientMismatch("borel_geq across degrees");
  int sum = 0;
  for (int i = a.high(); i >= a.low(); --i) {
    sum += a.exponent(i) - b.exponent(i);
    if (sum < 0) return false;
  }
  return true;
}

// DegLex: degree first, ties by lexicographic comparison with
// x_high > ... > x_low. Compares across ranges by global variable index,
// so the unit monomial is comparable to everything.
inline bool deglex_greater(const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  const int top = std::max(a.high(), b.high());
  const int bottom = std::min(a.low(), b.low());
  for (int i = top; i >= bottom; --i) {
    const int d = a.exponent(i) - b.exponent(i);
    if (d != 0) return d > 0;
  }
  return false;
}

// Pure lexicographic comparison (no degree step); the order generator
// lists are rendered in.
inline bool lex_greater(const Monomial& a, const Monomial& b) {
  const int top = std::max(a.high(), b.high());
  const int bottom = std::min(a.low(), b.low());
  for (int i = top; i >= bottom; --i) {
    const int d = a.exponent(i) - b.exponent(i);
    if (d != 0) return d > 0;
  }
  return false;
}

inline Monomial Monomial::parse(std::string_view text, int low, int high) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s == "1") return unit(low, high);
  std::vector<std::uint8_t> exps(high - low + 1, 0);
  std::size_t i = 0;
  while (i < s.size()) {
    if (i > 0) {
      if (s[i] != '*') throw Error("malformed monomial: expected '*'");
      ++i;
    }
    if (i >= s.size() || s[i] != 'x')
      throw Error("malformed monomial: expected variable");
    ++i;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw Error("malformed monomial: missing variable index");
    const int var = std::stoi(s.substr(start, i - start));
    int exp = 1;
    if (i < s.size() && s[i] == '^') {
      ++i;
      start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        ++i;
      if (i == start) throw Error("malformed monomial: missing exponent");
      exp = std::stoi(s.substr(start, i - start));
    }
    if (var < low || var > high)
      throw Error("malformed monomial: variable outside range");
    if (exp < 0 || exp > 255) throw Error("malformed monomial: exponent");
    exps[var - low] = static_cast<std::uint8_t>(exps[var - low] + exp);
  }
  return Monomial(low, std::move(exps));
}

}  // namespace borel

template <>
struct std::hash<borel::Monomial> {
  std::size_t operator()(const borel::Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](std::size_t v) {
      h ^= v;
      h *= 1099511628211ull;
    };
    mix(static_cast<std::size_t>(m.low()));
    for (auto e : m.raw_exponents()) mix(static_cast<std::size_t>(e));
    return h;
  }
};
