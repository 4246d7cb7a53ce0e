#pragma once

// Output record shared by the enumeration and the reference oracle: the
// minimal generators of one saturated Borel-fixed ideal, in canonical
// (descending lexicographic) order.

#include <string>
#include <vector>

#include "borel/monomial.hpp"

namespace borel {

struct IdealOutput {
  std::vector<Monomial> generators;

  std::string to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < generators.size(); ++i) {
      if (i) out += ", ";
      out += generators[i].to_string();
    }
    return out + ")";
  }

  bool operator==(const IdealOutput& o) const {
    return generators == o.generators;
  }
  bool operator!=(const IdealOutput& o) const { return !(*this == o); }
};

// Canonical listing order: compare generator sequences elementwise by
// DegLex, greater generators first.
inline bool ideal_less(const IdealOutput& a, const IdealOutput& b) {
  const std::size_t n = std::min(a.generators.size(), b.generators.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.generators[i] != b.generators[i])
      return deglex_greater(a.generators[i], b.generators[i]);
  }
  return a.generators.size() < b.generators.size();
}

}  // namespace borel
