#pragma once

// Numerical admissibility layer: Hilbert polynomials with exact rational
// coefficients, their Gotzmann decompositions, and the difference/sum
// operators the enumeration is driven by.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "borel/errors.hpp"

namespace borel {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::rational<Int>;

inline Int int_binomial(const Int& n, int k) {
  if (k < 0) return 0;
  Int num = 1, den = 1;
  for (int j = 0; j < k; ++j) {
    num *= n - j;
    den *= j + 1;
  }
  return num / den;  // exact: k! divides any product of k consecutive integers
}

// Dense univariate polynomial in t, trailing zeros trimmed; the zero
// polynomial has no coefficients and degree -1.
class HilbertPolynomial {
 public:
  HilbertPolynomial() = default;

  static HilbertPolynomial from_coefficients(std::vector<Rational> coeffs) {
    HilbertPolynomial p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
  }

  static HilbertPolynomial zero() { return HilbertPolynomial{}; }

  static HilbertPolynomial constant(Rational c) {
    return from_coefficients({std::move(c)});
  }

  // Accepts a signed sum of terms: coeff, coeff['*']t['^'k], or t['^'k],
  // with integer or p/q coefficients. Whitespace is ignored.
  static HilbertPolynomial parse(std::string_view text);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational coefficient(int k) const {
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[k];
  }

  Rational leading_coefficient() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
  }

  Rational evaluate(const Rational& t) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * t + *it;
    return acc;
  }

  Rational evaluate(long long t) const { return evaluate(Rational(Int(t))); }

  HilbertPolynomial operator+(const HilbertPolynomial& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()),
                            Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return from_coefficients(std::move(c));
  }

  HilbertPolynomial operator-(const HilbertPolynomial& o) const {
    std::vector<Rational> c(std::max(coeffs_.size(), o.coeffs_.size()),
                            Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
    return from_coefficients(std::move(c));
  }

  bool operator==(const HilbertPolynomial& o) const {
    return coeffs_ == o.coeffs_;
  }
  bool operator!=(const HilbertPolynomial& o) const { return !(*this == o); }

  // Canonical rendering: descending powers, unit coefficients elided,
  // fractions as p/q glued to the power of t. Round-trips through parse().
  std::string to_string() const;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == Rational(0))
      coeffs_.pop_back();
  }

  std::vector<Rational> coeffs_;
};

// C(t + shift, a) as a polynomial in t.
inline HilbertPolynomial binomial_polynomial(int a, long long shift) {
  std::vector<Rational> c{Rational(1)};
  for (int j = 0; j < a; ++j) {
    // multiply by (t + shift - j)
    std::vector<Rational> next(c.size() + 1, Rational(0));
    const Rational s(Int(shift - j));
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] += c[i] * s;
    }
    c = std::move(next);
  }
  Int fact = 1;
  for (int j = 2; j <= a; ++j) fact *= j;
  for (auto& x : c) x /= Rational(fact);
  return HilbertPolynomial::from_coefficients(std::move(c));
}

// Gotzmann decomposition p(t) = sum_i C(t + a_i - (i-1), a_i) with the
// indices a_i non-increasing. The index list determines the polynomial.
struct GotzmannDecomposition {
  std::vector<int> indices;

  int gotzmann_number() const { return static_cast<int>(indices.size()); }

  HilbertPolynomial reconstruct() const {
    HilbertPolynomial p;
    for (std::size_t i = 0; i < indices.size(); ++i)
      p = p + binomial_polynomial(indices[i],
                                  indices[i] - static_cast<long long>(i));
    return p;
  }
};

inline constexpr int kDefaultTermCap = 10000;

// Greedy decomposition: at each step subtract the binomial for the current
// remainder degree. Terminates with an empty remainder exactly when p is
// admissible.
inline GotzmannDecomposition decompose(const HilbertPolynomial& p,
                                       int term_cap = kDefaultTermCap) {
  GotzmannDecomposition d;
  HilbertPolynomial rem = p;
  while (!rem.is_zero()) {
    if (static_cast<int>(d.indices.size()) >= term_cap)
      throw CapExceeded("gotzmann decomposition exceeds term cap " +
                        std::to_string(term_cap));
    const int a = rem.degree();
    if (!d.indices.empty() && a > d.indices.back())
      throw NotAdmissible("decomposition indices must be non-increasing");
    if (rem.leading_coefficient() < Rational(0))
      throw NotAdmissible("greedy remainder has negative leading coefficient");
    rem = rem - binomial_polynomial(
                    a, a - static_cast<long long>(d.indices.size()));
    d.indices.push_back(a);
  }
  return d;
}

inline int gotzmann_number(const HilbertPolynomial& p,
                           int term_cap = kDefaultTermCap) {
  return decompose(p, term_cap).gotzmann_number();
}

// First difference p(t) - p(t-1), computed on coefficients.
inline HilbertPolynomial delta(const HilbertPolynomial& p) {
  const auto& c = p.coefficients();
  std::vector<Rational> shifted(c.size(), Rational(0));
  for (std::size_t k = 0; k < c.size(); ++k) {
    // c_k * (t-1)^k
    for (std::size_t j = 0; j <= k; ++j) {
      Int b = int_binomial(Int(k), static_cast<int>(j));
      if ((k - j) % 2 == 1) b = -b;
      shifted[j] += c[k] * Rational(b);
    }
  }
  return p - HilbertPolynomial::from_coefficients(std::move(shifted));
}

inline HilbertPolynomial delta_power(const HilbertPolynomial& p, int k) {
  HilbertPolynomial q = p;
  for (int i = 0; i < k; ++i) q = delta(q);
  return q;
}

// Inverse difference: increments every decomposition index by one.
inline HilbertPolynomial sigma(const HilbertPolynomial& p,
                               int term_cap = kDefaultTermCap) {
  const GotzmannDecomposition d = decompose(p, term_cap);
  HilbertPolynomial q;
  for (std::size_t i = 0; i < d.indices.size(); ++i)
    q = q + binomial_polynomial(d.indices[i] + 1,
                                d.indices[i] + 1 - static_cast<long long>(i));
  return q;
}

// --- parsing / rendering ---

namespace detail {

inline bool parse_uint(std::string_view s, std::size_t& i, Int& out) {
  if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
    return false;
  Int v = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
    v = v * 10 + (s[i] - '0');
    ++i;
  }
  out = v;
  return true;
}

}  // namespace detail

inline HilbertPolynomial HilbertPolynomial::parse(std::string_view text) {
  std::string s;
  s.reserve(text.size());
  bool gap = false;
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) {
      gap = true;
      continue;
    }
    // Whitespace may separate tokens but must not split a number in two.
    if (gap && !s.empty() &&
        std::isdigit(static_cast<unsigned char>(s.back())) &&
        std::isdigit(static_cast<unsigned char>(ch)))
      throw MalformedPolynomial("whitespace inside a number");
    gap = false;
    s.push_back(ch);
  }
  if (s.empty()) throw MalformedPolynomial("empty polynomial");

  std::vector<Rational> coeffs;
  auto add_term = [&](int k, const Rational& c) {
    if (k >= static_cast<int>(coeffs.size()))
      coeffs.resize(k + 1, Rational(0));
    coeffs[k] += c;
  };

  std::size_t i = 0;
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    } else if (!first) {
      throw MalformedPolynomial("expected '+' or '-' at position " +
                                std::to_string(i));
    }
    first = false;

    Rational coeff(1);
    bool have_coeff = false;
    Int num;
    if (detail::parse_uint(s, i, num)) {
      have_coeff = true;
      Int den = 1;
      if (i < s.size() && s[i] == '/') {
        ++i;
        if (!detail::parse_uint(s, i, den) || den == 0)
          throw MalformedPolynomial("bad denominator");
      }
      coeff = Rational(num, den);
      if (i < s.size() && s[i] == '*') {
        ++i;
        if (i >= s.size() || s[i] != 't')
          throw MalformedPolynomial("expected 't' after '*'");
      }
    }

    int k = 0;
    if (i < s.size() && s[i] == 't') {
      ++i;
      k = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        Int e;
        if (!detail::parse_uint(s, i, e))
          throw MalformedPolynomial("bad exponent");
        if (e > 10000) throw MalformedPolynomial("exponent too large");
        k = static_cast<int>(e);
      }
    } else if (!have_coeff) {
      throw MalformedPolynomial("expected term at position " +
                                std::to_string(i));
    }

    add_term(k, sign == 1 ? coeff : -coeff);
  }

  return from_coefficients(std::move(coeffs));
}

inline std::string HilbertPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  auto render_rat = [](const Rational& r) {
    std::string s = r.numerator().str();
    if (r.denominator() != 1) s += "/" + r.denominator().str();
    return s;
  };
  for (int k = degree(); k >= 0; --k) {
    const Rational c = coeffs_[k];
    if (c == Rational(0)) continue;
    const bool neg = c < Rational(0);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    const Rational mag = neg ? -c : c;
    if (k == 0) {
      out += render_rat(mag);
    } else {
      if (mag != Rational(1)) out += render_rat(mag);
      out += "t";
      if (k >= 2) out += "^" + std::to_string(k);
    }
  }
  return out;
}

}  // namespace borel
