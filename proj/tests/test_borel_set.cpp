#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <unordered_set>
#include <vector>

#include "borel/borel_set.hpp"

using namespace borel;

namespace {

Monomial M(const char* text, int low, int high) {
  return Monomial::parse(text, low, high);
}

bool divides_test(const Monomial& a, const Monomial& b) {
  for (int j = std::min(a.low(), b.low()); j <= std::max(a.high(), b.high());
       ++j)
    if (a.exponent(j) > b.exponent(j)) return false;
  return true;
}

// From-scratch recomputation of the saturated-ideal generators: strip the
// smallest variable off every member, then keep the divisibility-minimal
// distinct results.
std::vector<Monomial> recompute_generators(const std::vector<Monomial>& members) {
  std::vector<Monomial> strips;
  for (const Monomial& m : members) {
    const Monomial s = m.strip_smallest();
    bool dup = false;
    for (const Monomial& t : strips)
      if (t == s) {
        dup = true;
        break;
      }
    if (!dup) strips.push_back(s);
  }
  std::vector<Monomial> out;
  for (const Monomial& s : strips) {
    bool redundant = false;
    for (const Monomial& t : strips)
      if (!(t == s) && divides_test(t, s)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), lex_greater);
  return out;
}

std::vector<Monomial> recompute_minimals(const std::vector<Monomial>& members) {
  std::vector<Monomial> out;
  for (const Monomial& m : members) {
    bool minimal = true;
    for (const Monomial& other : members)
      if (!(other == m) && borel_geq(m, other)) {
        minimal = false;
        break;
      }
    if (minimal) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), deglex_greater);
  return out;
}

std::vector<std::int64_t> recompute_histogram(const BorelSet& b) {
  std::vector<std::int64_t> h(b.ambient().degree + 1, 0);
  const std::vector<Monomial> members = b.expand();
  std::unordered_set<Monomial> inside(members.begin(), members.end());
  for (const Monomial& m :
       BorelSet::all_poset_monomials(b.ambient(), kDefaultExpandCap))
    if (inside.count(m) == 0) h[m.exponent(b.ambient().low)] += 1;
  return h;
}

void check_invariants(const BorelSet& b) {
  const std::vector<Monomial> members = b.expand();
  EXPECT_EQ(recompute_histogram(b), b.histogram());
  EXPECT_EQ(recompute_generators(members), b.generators());
  EXPECT_EQ(recompute_minimals(members), b.minimals());
  EXPECT_EQ(Int(members.size()) + Int(b.complement_total()),
            poset_size(b.ambient()));
  for (const Monomial& g : b.generators())
    EXPECT_EQ(g.exponent(b.ambient().low), 0);
}

}  // namespace

TEST(FullPoset, WorkedExamples) {
  const BorelSet a = BorelSet::full_poset(Ambient(1, 2, 2));
  ASSERT_EQ(a.minimals().size(), 1u);
  EXPECT_EQ(a.minimals()[0], M("x1^2", 1, 2));
  ASSERT_EQ(a.generators().size(), 1u);
  EXPECT_TRUE(a.generators()[0].is_unit());
  EXPECT_EQ(a.complement_total(), 0);

  const BorelSet root = BorelSet::full_poset(Ambient(2, 3, 8));
  ASSERT_EQ(root.minimals().size(), 1u);
  EXPECT_EQ(root.minimals()[0], M("x2^8", 2, 3));
}

TEST(PrincipalPower, WorkedExamples) {
  const BorelSet b = BorelSet::principal_power(Ambient(2, 3, 8), 3);
  ASSERT_EQ(b.minimals().size(), 1u);
  EXPECT_EQ(b.minimals()[0], M("x3^3*x2^5", 2, 3));
  ASSERT_EQ(b.generators().size(), 1u);
  EXPECT_EQ(b.generators()[0], M("x3^3", 2, 3));
  std::vector<std::int64_t> expected(9, 0);
  expected[6] = expected[7] = expected[8] = 1;
  EXPECT_EQ(b.histogram(), expected);
  EXPECT_EQ(b.complement_total(), 3);

  const BorelSet top = BorelSet::principal_power(Ambient(2, 3, 4), 4);
  EXPECT_EQ(top.minimals()[0], M("x3^4", 2, 3));
  EXPECT_EQ(top.histogram(), (std::vector<std::int64_t>{0, 1, 1, 1, 1}));

  const BorelSet line = BorelSet::principal_power(Ambient(0, 1, 1), 1);
  EXPECT_EQ(line.minimals()[0], M("x1", 0, 1));
  EXPECT_EQ(line.histogram(), (std::vector<std::int64_t>{0, 1}));

  EXPECT_THROW(BorelSet::principal_power(Ambient(2, 3, 4), 5), DegreeTooSmall);
  EXPECT_THROW(BorelSet::principal_power(Ambient(1, 3, 4), 2), AmbientMismatch);
}

TEST(Remove, WorkedChain) {
  const BorelSet b0 = BorelSet::full_poset(Ambient(0, 2, 2));
  EXPECT_EQ(b0.removable_minimals(),
            (std::vector<Monomial>{M("x0^2", 0, 2)}));

  const BorelSet b1 = b0.remove(M("x0^2", 0, 2));
  EXPECT_EQ(b1.minimals(), (std::vector<Monomial>{M("x1*x0", 0, 2)}));
  EXPECT_EQ(b1.histogram(), (std::vector<std::int64_t>{0, 0, 1}));
  EXPECT_EQ(b1.generators(),
            (std::vector<Monomial>{M("x2", 0, 2), M("x1", 0, 2)}));

  const BorelSet b2 = b1.remove(M("x1*x0", 0, 2));
  EXPECT_EQ(b2.minimals(),
            (std::vector<Monomial>{M("x2*x0", 0, 2), M("x1^2", 0, 2)}));
  EXPECT_EQ(b2.generators(),
            (std::vector<Monomial>{M("x2", 0, 2), M("x1^2", 0, 2)}));
  EXPECT_EQ(b2.complement_total(), 2);

  EXPECT_EQ(b2.removable_minimals(),
            (std::vector<Monomial>{M("x2*x0", 0, 2)}));
  EXPECT_THROW(b2.remove(M("x1^2", 0, 2)), NotRemovable);
  EXPECT_THROW(b2.remove(M("x2^2", 0, 2)), NotRemovable);
}

TEST(Remove, IncrementIsLocal) {
  BorelSet b = BorelSet::full_poset(Ambient(0, 3, 4));
  std::mt19937 rng(777);
  for (int step = 0; step < 12; ++step) {
    const std::vector<Monomial> rem = b.removable_minimals();
    if (rem.empty()) break;
    const Monomial m = rem[std::uniform_int_distribution<std::size_t>(
        0, rem.size() - 1)(rng)];
    const BorelSet next = b.remove(m);
    EXPECT_EQ(next.complement_total(), b.complement_total() + 1);
    for (int e = 0; e <= b.ambient().degree; ++e) {
      const std::int64_t want =
          b.histogram()[e] + (e == m.exponent(0) ? 1 : 0);
      EXPECT_EQ(next.histogram()[e], want);
    }
    b = next;
  }
}

// The degree-8 slice of the saturated ideal (x3, x2^5) over x1..x3, reached
// by the five-step removal chain from the embedded full poset.
namespace {
BorelSet figure_slice() {
  BorelSet b = BorelSet::full_poset(Ambient(2, 3, 8)).embed();
  for (int step = 0; step < 5; ++step) {
    // Keep removing along the branch that grows the pure x2-power.
    const std::vector<Monomial> rem = b.removable_minimals();
    const Monomial pick = *std::min_element(
        rem.begin(), rem.end(),
        [](const Monomial& a, const Monomial& c) { return deglex_greater(c, a); });
    b = b.remove(pick);
  }
  return b;
}
}  // namespace

TEST(Embed, WorkedSliceExample) {
  const BorelSet slice = figure_slice();
  EXPECT_EQ(slice.minimals(),
            (std::vector<Monomial>{M("x3*x1^7", 1, 3), M("x2^5*x1^3", 1, 3)}));
  EXPECT_EQ(slice.generators(),
            (std::vector<Monomial>{M("x3", 1, 3), M("x2^5", 1, 3)}));
  std::vector<std::int64_t> ones(9, 0);
  for (int i = 4; i <= 8; ++i) ones[i] = 1;
  EXPECT_EQ(slice.histogram(), ones);

  const BorelSet embedded = slice.embed();
  EXPECT_EQ(embedded.ambient(), Ambient(0, 3, 8));
  EXPECT_EQ(embedded.minimals(),
            (std::vector<Monomial>{M("x3*x0^7", 0, 3), M("x2^5*x0^3", 0, 3)}));
  EXPECT_EQ(embedded.generators(),
            (std::vector<Monomial>{M("x3", 0, 3), M("x2^5", 0, 3)}));
  EXPECT_EQ(embedded.complement_total(), 35);

  EXPECT_TRUE(embedded.contains(M("x3*x2^3*x1*x0^3", 0, 3)));
  EXPECT_FALSE(embedded.contains(M("x2^4*x1^4", 0, 3)));
  EXPECT_THROW(embedded.contains(M("x2^4*x1^4", 1, 3)), AmbientMismatch);
  EXPECT_EQ(embedded.removable_minimals().size(), 2u);
}

TEST(Embed, FullPosetStaysFull) {
  const BorelSet b = BorelSet::full_poset(Ambient(2, 3, 5)).embed();
  EXPECT_EQ(b.ambient(), Ambient(1, 3, 5));
  EXPECT_EQ(b.minimals(), (std::vector<Monomial>{M("x1^5", 1, 3)}));
  EXPECT_EQ(b.complement_total(), 0);
  EXPECT_THROW(BorelSet::full_poset(Ambient(0, 2, 3)).embed(),
               NoSmallerVariable);
}

TEST(Embed, TopHistogramEntrySpreadsToWholeFiber) {
  const int r = 4;
  BorelSet b = BorelSet::full_poset(Ambient(1, 2, r));
  b = b.remove(M("x1^4", 1, 2));
  EXPECT_EQ(b.histogram(), (std::vector<std::int64_t>{0, 0, 0, 0, 1}));
  const BorelSet e = b.embed();
  EXPECT_EQ(e.histogram(), (std::vector<std::int64_t>{1, 1, 1, 1, 1}));
  EXPECT_EQ(e.complement_total(), r + 1);
}

TEST(Expand, WorkedExamples) {
  BorelSet b = BorelSet::full_poset(Ambient(0, 2, 2));
  EXPECT_EQ(b.expand().size(), 6u);
  EXPECT_TRUE(b.is_lex_segment());

  b = b.remove(M("x0^2", 0, 2)).remove(M("x1*x0", 0, 2));
  std::vector<Monomial> got = b.expand();
  std::vector<Monomial> want = {M("x2^2", 0, 2), M("x2*x1", 0, 2),
                                M("x2*x0", 0, 2), M("x1^2", 0, 2)};
  std::sort(got.begin(), got.end(), deglex_greater);
  std::sort(want.begin(), want.end(), deglex_greater);
  EXPECT_EQ(got, want);
  EXPECT_TRUE(b.is_lex_segment());

  const BorelSet c = b.remove(M("x2*x0", 0, 2));
  EXPECT_EQ(c.minimals(), (std::vector<Monomial>{M("x1^2", 0, 2)}));
  std::vector<Monomial> got2 = c.expand();
  std::vector<Monomial> want2 = {M("x2^2", 0, 2), M("x2*x1", 0, 2),
                                 M("x1^2", 0, 2)};
  std::sort(got2.begin(), got2.end(), deglex_greater);
  EXPECT_EQ(got2, want2);
  EXPECT_FALSE(c.is_lex_segment());

  EXPECT_THROW(BorelSet::full_poset(Ambient(0, 2, 2)).expand(3), CapExceeded);
}

TEST(FullPoset, LineBundleCounts) {
  EXPECT_EQ(poset_size(Ambient(0, 1, 2)), Int(3));
  EXPECT_EQ(BorelSet::full_poset(Ambient(0, 1, 2)).expand().size(), 3u);
  EXPECT_EQ(poset_size(Ambient(0, 3, 8)), Int(165));
  EXPECT_EQ(poset_size(Ambient(1, 3, 8)), Int(45));
}

TEST(Invariants, RandomOperationSequences) {
  std::mt19937 rng(90210);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = std::uniform_int_distribution<int>(1, 3)(rng);
    const int low = std::uniform_int_distribution<int>(0, n)(rng);
    const int r = std::uniform_int_distribution<int>(1, 6)(rng);
    BorelSet b = BorelSet::full_poset(Ambient(low, n, r));
    check_invariants(b);
    for (int step = 0; step < 14; ++step) {
      const std::vector<Monomial> rem = b.removable_minimals();
      const bool can_embed = b.ambient().low > 0;
      const int coin = std::uniform_int_distribution<int>(0, 4)(rng);
      if (coin == 0 && can_embed) {
        b = b.embed();
      } else if (!rem.empty()) {
        b = b.remove(rem[std::uniform_int_distribution<std::size_t>(
            0, rem.size() - 1)(rng)]);
      } else if (can_embed) {
        b = b.embed();
      } else {
        break;
      }
      check_invariants(b);
    }
  }
}
