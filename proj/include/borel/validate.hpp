#pragma once

// Post-run validation: every output is checked against the reference
// oracle (Borel-fixedness, saturation, Hilbert polynomial, per-level
// complement counts), plus the run-level facts that exactly one output is
// a lex segment and no output repeats. Complements are walked rather than
// expanded, so validation stays cheap even when the ambient poset is huge.

#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "borel/enumerate.hpp"
#include "borel/hilbert.hpp"
#include "borel/ideal.hpp"
#include "borel/monomial.hpp"
#include "borel/oracle.hpp"

namespace borel {

struct ValidationReport {
  bool passed = true;
  std::int64_t ideals_checked = 0;
  std::int64_t lex_segments = 0;
  std::vector<std::string> violations;

  void fail(std::string msg) {
    passed = false;
    violations.push_back(std::move(msg));
  }
};

namespace detail {

// First `count` degree-r monomials over x_0..x_n in ascending DegLex
// order (exponent tuples read from the top variable down, ascending).
inline std::vector<Monomial> deglex_bottom(int n, int r, std::int64_t count) {
  std::vector<Monomial> out;
  std::vector<std::uint8_t> e(n + 1, 0);
  auto rec = [&](auto&& self, int pos, int remaining) -> void {
    if (static_cast<std::int64_t>(out.size()) >= count) return;
    if (pos == 0) {
      e[0] = static_cast<std::uint8_t>(remaining);
      out.emplace_back(0, e);
      return;
    }
    for (int v = 0; v <= remaining; ++v) {
      e[pos] = static_cast<std::uint8_t>(v);
      self(self, pos - 1, remaining - v);
      if (static_cast<std::int64_t>(out.size()) >= count) break;
    }
    e[pos] = 0;
  };
  if (count > 0) rec(rec, n, r);
  return out;
}

}  // namespace detail

// Counting budget for the per-ideal Hilbert-function samples. Small on
// purpose: Borel-fixedness is established first, so past this stratum size
// the oracle switches to its complement walk, which touches only the p(t)
// monomials outside the ideal instead of the whole degree stratum.
inline constexpr std::int64_t kValidationCountCap = 4096;

inline ValidationReport validate_outputs(const EnumerationProblem& prob,
                                         const std::vector<IdealOutput>& ideals) {
  ValidationReport rep;
  const std::int64_t expected_complement = prob.delta_at_r[0];
  auto target = [&](int i) -> std::int64_t {
    return i < static_cast<int>(prob.delta_at_r.size()) ? prob.delta_at_r[i]
                                                        : 0;
  };

  for (std::size_t idx = 0; idx < ideals.size(); ++idx) {
    const auto& out = ideals[idx];
    const std::string name = out.to_string();
    const oracle::MonomialIdeal ideal(0, prob.n, out.generators);
    ++rep.ideals_checked;

    std::vector<Monomial> complement;
    try {
      if (!oracle::is_borel_fixed(ideal))
        rep.fail(name + ": not Borel-fixed");
      if (!oracle::is_saturated(ideal))
        rep.fail(name + ": not saturated");
      if (!oracle::verify_hilbert_polynomial(ideal, prob.p, prob.r,
                                             kValidationCountCap))
        rep.fail(name + ": Hilbert function disagrees with the polynomial");
      complement =
          oracle::complement_monomials(ideal, prob.r, expected_complement + 1);
    } catch (const CapExceeded&) {
      rep.fail(name + ": complement walk exceeded p(r)");
      continue;
    }
    for (int i = 0; i <= prob.n - 1; ++i) {
      std::int64_t have = 0;
      for (const auto& m : complement)
        if (m.min_var() >= i) ++have;
      if (have != target(i)) {
        rep.fail(name + ": complement count at level " + std::to_string(i) +
                 " is " + std::to_string(have) + ", expected " +
                 std::to_string(target(i)));
        break;
      }
    }

    // lex segment iff the complement is the DegLex bottom of the poset
    const auto bottom = detail::deglex_bottom(
        prob.n, prob.r, static_cast<std::int64_t>(complement.size()));
    std::unordered_set<Monomial> complement_set(complement.begin(),
                                                complement.end());
    bool lex = bottom.size() == complement.size();
    for (const auto& m : bottom)
      if (lex && !complement_set.count(m)) lex = false;
    if (lex) ++rep.lex_segments;
  }

  std::unordered_set<std::string> seen;
  for (const auto& out : ideals) {
    if (!seen.insert(out.to_string()).second)
      rep.fail(out.to_string() + ": duplicate output");
  }

  if (rep.lex_segments != 1)
    rep.fail("expected exactly one lex-segment output, found " +
             std::to_string(rep.lex_segments));
  return rep;
}

}  // namespace borel
