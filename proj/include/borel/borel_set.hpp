#pragma once

// Compact representation of a Borel set (an up-closed subset of the
// monomials of one degree): the antichain of minimal elements, a histogram
// of the complement keyed by smallest-variable exponent, and the minimal
// generators of the saturated ideal it spans. The histogram and the
// generators are maintained incrementally across embed/remove so that
// neither the set nor its complement is ever expanded on the hot path.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "borel/errors.hpp"
#include "borel/hilbert.hpp"
#include "borel/monomial.hpp"

namespace borel {

inline Int poset_size(const Ambient& a) {
  return int_binomial(Int(a.degree + a.high - a.low), a.high - a.low);
}

inline constexpr std::int64_t kDefaultExpandCap = 1000000;

class BorelSet {
 public:
  // The whole poset: minimal element x_low^r, empty complement, unit ideal.
  static BorelSet full_poset(const Ambient& ambient) {
    if (ambient.degree > 255)
      throw CapExceeded("degree exceeds the exponent representation");
    BorelSet b(ambient);
    b.minimals_.push_back(
        Monomial::variable_power(ambient.low, ambient.degree, ambient.low,
                                 ambient.high));
    b.generators_.push_back(Monomial::unit(ambient.low, ambient.high));
    return b;
  }

  // Degree-r slice of (x_high^c) in a two-variable ambient. The complement
  // has one monomial per x_low exponent r-c+1..r.
  static BorelSet principal_power(const Ambient& ambient, int c) {
    if (ambient.variable_count() != 2)
      throw AmbientMismatch("principal_power needs a two-variable ambient");
    if (c > ambient.degree)
      throw DegreeTooSmall("power exceeds ambient degree");
    if (c < 0) throw Error("negative power");
    if (ambient.degree > 255)
      throw CapExceeded("degree exceeds the exponent representation");
    BorelSet b(ambient);
    std::vector<std::uint8_t> e(2);
    e[0] = static_cast<std::uint8_t>(ambient.degree - c);
    e[1] = static_cast<std::uint8_t>(c);
    b.minimals_.emplace_back(ambient.low, std::move(e));
    b.generators_.push_back(
        Monomial::variable_power(ambient.high, c, ambient.low, ambient.high));
    for (int j = ambient.degree - c + 1; j <= ambient.degree; ++j)
      b.histogram_[j] = 1;
    return b;
  }

  const Ambient& ambient() const { return ambient_; }
  const std::vector<Monomial>& minimals() const { return minimals_; }
  const std::vector<Monomial>& generators() const { return generators_; }
  const std::vector<std::int64_t>& histogram() const { return histogram_; }

  std::int64_t complement_total() const {
    std::int64_t s = 0;
    for (auto v : histogram_) s += v;
    return s;
  }

  bool contains(const Monomial& m) const {
    if (m.low() != ambient_.low || m.high() != ambient_.high ||
        m.degree() != ambient_.degree)
      throw AmbientMismatch("membership test outside the ambient");
    return contains_unchecked(m);
  }

  // Transfer to the ambient extended by the next smaller variable: the
  // degree-r slice of the same saturated ideal in one more variable.
  // Minimal elements carry their x_low exponent onto the new variable;
  // every complement monomial with x_low exponent i yields i+1 complement
  // monomials below, so the histogram picks up cumulative sums from above.
  BorelSet embed() const {
    if (ambient_.low == 0)
      throw NoSmallerVariable("ambient already starts at x0");
    BorelSet b(Ambient(ambient_.low - 1, ambient_.high, ambient_.degree));
    b.minimals_.reserve(minimals_.size());
    for (const auto& m : minimals_)
      b.minimals_.push_back(m.transported_low());
    b.generators_.reserve(generators_.size());
    for (const auto& g : generators_)
      b.generators_.push_back(g.extended_low(ambient_.low - 1));
    std::int64_t acc = 0;
    for (int i = ambient_.degree; i >= 0; --i) {
      acc += histogram_[i];
      b.histogram_[i] = acc;
    }
    return b;
  }

  // Minimal elements eligible for removal: those divisible by x_low.
  std::vector<Monomial> removable_minimals() const {
    std::vector<Monomial> out;
    for (const auto& m : minimals_)
      if (m.exponent(ambient_.low) > 0) out.push_back(m);
    return out;
  }

  // Remove one removable minimal element. New minimal elements can only be
  // its upper neighbors; the stripped monomial is always a current
  // generator and is replaced by its multiples up to its own least
  // variable.
  BorelSet remove(const Monomial& m) const {
    auto it = std::find(minimals_.begin(), minimals_.end(), m);
    if (it == minimals_.end())
      throw NotRemovable("not a minimal element");
    if (m.exponent(ambient_.low) == 0)
      throw NotRemovable("minimal element not divisible by the smallest "
                         "variable");
    BorelSet b(ambient_);
    b.histogram_ = histogram_;
    b.histogram_[m.exponent(ambient_.low)] += 1;

    b.minimals_.reserve(minimals_.size() + ambient_.variable_count());
    for (const auto& x : minimals_)
      if (x != m) b.minimals_.push_back(x);
    for (auto& z : m.up_neighbors()) {
      bool covered = false;
      for (const auto& x : b.minimals_) {
        if (borel_geq(z, x)) {
          covered = true;
          break;
        }
      }
      if (!covered) b.minimals_.push_back(std::move(z));
    }
    sort_deglex_desc(b.minimals_);

    const Monomial g = m.strip_smallest();
    auto git = std::find(generators_.begin(), generators_.end(), g);
    if (git == generators_.end())
      throw Error("internal: stripped minimal is not a generator");
    b.generators_.reserve(generators_.size() + ambient_.variable_count());
    for (const auto& x : generators_)
      if (x != g) b.generators_.push_back(x);
    for (int j = ambient_.low + 1; j <= g.min_var(); ++j)
      b.generators_.push_back(g.multiplied_by(j));
    sort_lex_desc(b.generators_);
    return b;
  }

  // All members, deglex-descending. Guarded by the poset size cap.
  std::vector<Monomial> expand(std::int64_t cap = kDefaultExpandCap) const {
    std::vector<Monomial> out;
    for (const auto& m : all_poset_monomials(ambient_, cap))
      if (contains_unchecked(m)) out.push_back(m);
    return out;
  }

  // True iff the set consists of the lex-greatest |B| monomials.
  bool is_lex_segment(std::int64_t cap = kDefaultExpandCap) const {
    const auto poset = all_poset_monomials(ambient_, cap);
    const auto members = expand(cap);
    for (std::size_t i = 0; i < members.size(); ++i)
      if (members[i] != poset[i]) return false;
    return true;
  }

  // Degree-r monomials of an ambient, deglex-descending.
  static std::vector<Monomial> all_poset_monomials(
      const Ambient& a, std::int64_t cap = kDefaultExpandCap) {
    if (poset_size(a) > cap)
      throw CapExceeded("poset size exceeds expansion cap");
    std::vector<Monomial> out;
    std::vector<std::uint8_t> e(a.variable_count(), 0);
    enumerate_rec(a, static_cast<int>(e.size()) - 1, a.degree, e, out);
    return out;
  }

  bool operator==(const BorelSet& o) const {
    return ambient_ == o.ambient_ && minimals_ == o.minimals_;
  }

 private:
  explicit BorelSet(const Ambient& ambient)
      : ambient_(ambient), histogram_(ambient.degree + 1, 0) {}

  bool contains_unchecked(const Monomial& m) const {
    for (const auto& x : minimals_)
      if (borel_geq(m, x)) return true;
    return false;
  }

  static void sort_deglex_desc(std::vector<Monomial>& v) {
    std::sort(v.begin(), v.end(),
              [](const Monomial& a, const Monomial& b) {
                return deglex_greater(a, b);
              });
  }

  static void sort_lex_desc(std::vector<Monomial>& v) {
    std::sort(v.begin(), v.end(), [](const Monomial& a, const Monomial& b) {
      return lex_greater(a, b);
    });
  }

  // Fill exponents from the top variable down so the output arrives
  // deglex-descending.
  static void enumerate_rec(const Ambient& a, int pos, int remaining,
                            std::vector<std::uint8_t>& e,
                            std::vector<Monomial>& out) {
    if (pos == 0) {
      e[0] = static_cast<std::uint8_t>(remaining);
      out.emplace_back(a.low, e);
      return;
    }
    for (int v = remaining; v >= 0; --v) {
      e[pos] = static_cast<std::uint8_t>(v);
      enumerate_rec(a, pos - 1, remaining - v, e, out);
    }
    e[pos] = 0;
  }

  Ambient ambient_;
  std::vector<Monomial> minimals_;
  std::vector<std::int64_t> histogram_;
  std::vector<Monomial> generators_;
};

}  // namespace borel
