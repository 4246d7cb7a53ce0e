#pragma once

// Reference implementations used to cross-check the enumeration. Counting
// and membership here are deliberately literal: ideal membership is
// divisibility against the generators, Hilbert functions count monomials,
// and Borel sets are found by exhaustive search over up-closed subsets.
// Nothing in this header touches the compact BorelSet machinery.

#include <algorithm>
#include <cstdint>
#include <queue>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "borel/errors.hpp"
#include "borel/hilbert.hpp"
#include "borel/ideal.hpp"
#include "borel/monomial.hpp"

namespace borel::oracle {

inline bool divides(const Monomial& a, const Monomial& b) {
  for (int v = std::min(a.low(), b.low());
       v <= std::max(a.high(), b.high()); ++v)
    if (a.exponent(v) > b.exponent(v)) return false;
  return true;
}

class MonomialIdeal {
 public:
  MonomialIdeal(int low, int high, const std::vector<Monomial>& generators)
      : low_(low), high_(high) {
    if (low < 0 || high < low) throw Error("invalid variable range");
    // normalize onto the full range, then keep divisibility-minimal ones
    std::vector<Monomial> gens;
    for (const auto& g : generators) {
      if (g.low() < low || g.high() > high)
        throw Error("generator outside the variable range");
      std::vector<std::uint8_t> e(high - low + 1, 0);
      for (int v = g.low(); v <= g.high(); ++v)
        e[v - low] = static_cast<std::uint8_t>(g.exponent(v));
      gens.emplace_back(low, std::move(e));
    }
    for (std::size_t i = 0; i < gens.size(); ++i) {
      bool redundant = false;
      for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
        if (j == i) continue;
        if (gens[j] == gens[i])
          redundant = j < i;  // keep the first of exact duplicates
        else if (divides(gens[j], gens[i]))
          redundant = true;
      }
      if (!redundant) gens_.push_back(gens[i]);
    }
  }

  int low() const { return low_; }
  int high() const { return high_; }
  const std::vector<Monomial>& generators() const { return gens_; }

  bool contains(const Monomial& m) const {
    for (const auto& g : gens_)
      if (divides(g, m)) return true;
    return false;
  }

 private:
  int low_;
  int high_;
  std::vector<Monomial> gens_;
};

// All monomials of one degree over [low..high] (own enumeration; the
// oracle does not borrow the enumeration engine's).
inline void degree_monomials_rec(int low, int pos, int remaining,
                                 std::vector<std::uint8_t>& e,
                                 std::vector<Monomial>& out) {
  if (pos == 0) {
    e[0] = static_cast<std::uint8_t>(remaining);
    out.emplace_back(low, e);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    e[pos] = static_cast<std::uint8_t>(v);
    degree_monomials_rec(low, pos - 1, remaining - v, e, out);
  }
  e[pos] = 0;
}

inline std::vector<Monomial> degree_monomials(int low, int high, int t) {
  std::vector<std::uint8_t> e(high - low + 1, 0);
  std::vector<Monomial> out;
  degree_monomials_rec(low, high - low, t, e, out);
  return out;  // deglex-descending by construction
}

inline bool is_borel_fixed(const MonomialIdeal& ideal) {
  for (const auto& g : ideal.generators()) {
    for (int i = ideal.low(); i <= ideal.high(); ++i) {
      if (g.exponent(i) == 0) continue;
      for (int j = i + 1; j <= ideal.high(); ++j) {
        // swap one factor x_i for x_j
        std::vector<std::uint8_t> e(ideal.high() - ideal.low() + 1, 0);
        for (int v = ideal.low(); v <= ideal.high(); ++v)
          e[v - ideal.low()] = static_cast<std::uint8_t>(g.exponent(v));
        e[i - ideal.low()] -= 1;
        e[j - ideal.low()] += 1;
        if (!ideal.contains(Monomial(ideal.low(), std::move(e))))
          return false;
      }
    }
  }
  return true;
}

inline bool is_saturated(const MonomialIdeal& ideal) {
  for (const auto& g : ideal.generators())
    if (g.exponent(ideal.low()) > 0) return false;
  return true;
}

// Complement of the degree-t piece, walked upward from x_low^t. Correct
// only for Borel-fixed ideals (their complements are closed under
// decreasing moves, hence connected to the bottom monomial).
inline constexpr std::int64_t kDefaultCountCap = 1000000;

inline std::vector<Monomial> complement_monomials(
    const MonomialIdeal& ideal, int t, std::int64_t cap = kDefaultCountCap) {
  const Monomial bottom =
      Monomial::variable_power(ideal.low(), t, ideal.low(), ideal.high());
  std::vector<Monomial> out;
  if (ideal.contains(bottom)) return out;
  std::unordered_set<Monomial> seen{bottom};
  std::queue<Monomial> frontier;
  frontier.push(bottom);
  while (!frontier.empty()) {
    Monomial m = std::move(frontier.front());
    frontier.pop();
    out.push_back(m);
    if (static_cast<std::int64_t>(out.size()) > cap)
      throw CapExceeded("complement walk exceeds cap");
    for (auto& z : m.up_neighbors()) {
      if (seen.count(z) || ideal.contains(z)) continue;
      seen.insert(z);
      frontier.push(std::move(z));
    }
  }
  return out;
}

// Number of degree-t monomials outside the ideal. Exhaustive when the
// stratum is small; above the cap a Borel-fixed ideal's complement is
// walked instead (the walk only visits the complement itself).
inline std::int64_t hilbert_function(const MonomialIdeal& ideal, int t,
                                     std::int64_t cap = kDefaultCountCap) {
  const int vars = ideal.high() - ideal.low() + 1;
  if (int_binomial(Int(t + vars - 1), vars - 1) <= Int(cap)) {
    std::int64_t count = 0;
    for (const auto& m : degree_monomials(ideal.low(), ideal.high(), t))
      if (!ideal.contains(m)) ++count;
    return count;
  }
  if (!is_borel_fixed(ideal))
    throw CapExceeded("degree stratum exceeds enumeration cap");
  return static_cast<std::int64_t>(
      complement_monomials(ideal, t, cap).size());
}

inline bool verify_hilbert_polynomial(const MonomialIdeal& ideal,
                                      const HilbertPolynomial& p, int r,
                                      std::int64_t cap = kDefaultCountCap) {
  if (r < gotzmann_number(p))
    throw Error("verification degree below the Gotzmann number");
  const int upto = r + std::max(p.degree(), 0) + 2;
  for (int t = r; t <= upto; ++t) {
    if (Rational(Int(hilbert_function(ideal, t, cap))) != p.evaluate(t))
      return false;
  }
  return true;
}

// Exhaustive search for the Borel sets matching p: enumerate up-closed
// subsets of the degree-r poset over x_0..x_n (deciding monomials in
// descending DegLex order, so every upper neighbor is decided first) and
// keep those whose complement counts match every successive difference of
// p at r. Returns their saturated ideals.
inline std::vector<IdealOutput> brute_force_borel_sets(
    int n, const HilbertPolynomial& p, std::int64_t poset_cap = 30) {
  const int r = gotzmann_number(p);
  if (int_binomial(Int(r + n), n) > Int(poset_cap))
    throw CapExceeded("poset too large for exhaustive search");

  const std::vector<Monomial> poset = degree_monomials(0, n, r);
  const int count = static_cast<int>(poset.size());

  // up-neighbor indices within the poset
  std::unordered_map<Monomial, int> index;
  for (int i = 0; i < count; ++i) index.emplace(poset[i], i);
  std::vector<std::vector<int>> ups(count);
  for (int i = 0; i < count; ++i)
    for (const auto& z : poset[i].up_neighbors())
      ups[i].push_back(index.at(z));

  // complement targets: |N with min var >= i| must equal delta^i p (r)
  std::vector<std::int64_t> target(n, 0);
  {
    HilbertPolynomial q = p;
    for (int i = 0; i < n; ++i) {
      const Rational v = q.evaluate(r);
      target[i] = static_cast<std::int64_t>(
          v.numerator().convert_to<long long>());
      q = delta(q);
    }
  }

  std::vector<char> in_set(count, 0);
  std::vector<std::int64_t> out_counts(n, 0);
  std::vector<IdealOutput> results;

  auto emit = [&] {
    std::vector<Monomial> strips;
    for (int i = 0; i < count; ++i)
      if (in_set[i]) strips.push_back(poset[i].strip_smallest());
    std::vector<Monomial> gens;
    for (const auto& g : strips) {
      bool minimal = true;
      for (const auto& h : strips) {
        if (h != g && divides(h, g)) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        if (std::find(gens.begin(), gens.end(), g) == gens.end())
          gens.push_back(g);
      }
    }
    std::sort(gens.begin(), gens.end(), lex_greater);
    results.push_back(IdealOutput{std::move(gens)});
  };

  auto rec = [&](auto&& self, int idx) -> void {
    if (idx == count) {
      for (int i = 0; i < n; ++i)
        if (out_counts[i] != target[i]) return;
      emit();
      return;
    }
    bool ups_in = true;
    for (int u : ups[idx])
      if (!in_set[u]) {
        ups_in = false;
        break;
      }
    const int top = std::min(poset[idx].min_var(), n - 1);
    auto try_out = [&] {
      bool ok = true;
      for (int i = 0; i <= top; ++i)
        if (++out_counts[i] > target[i]) ok = false;
      if (ok) {
        in_set[idx] = 0;
        self(self, idx + 1);
      }
      for (int i = 0; i <= top; ++i) --out_counts[i];
    };
    if (ups_in) {
      in_set[idx] = 1;
      self(self, idx + 1);
      in_set[idx] = 0;
    }
    try_out();
  };
  rec(rec, 0);

  std::sort(results.begin(), results.end(), ideal_less);
  return results;
}

}  // namespace borel::oracle
