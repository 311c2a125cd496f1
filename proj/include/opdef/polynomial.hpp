#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "opdef/scalar.hpp"

namespace opdef {

using Monomial = std::vector<unsigned>;  // exponents of g_1..g_n

unsigned degree(const Monomial& m);

/// Graded lexicographic order, ascending: lower degree first, and within a
/// degree g_1 > g_2 > .. (so g_1^2 comes before g_1 g_2).
struct GradedLexLess {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// All monomials in n variables of degree <= max_degree, graded-lex ascending.
std::vector<Monomial> monomials_up_to(std::size_t n, unsigned max_degree);

class Polynomial {
 public:
  using Terms = std::map<Monomial, Scalar, GradedLexLess>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  static Polynomial monomial(const Monomial& m, Scalar c = 1);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Lowest degree among the terms; 0 for the zero polynomial.
  unsigned low_degree() const;
  Scalar coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Scalar& c);
  Polynomial truncated(unsigned max_degree) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Scalar& s, const Polynomial& a);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Parses sums of terms like "3/2*x^2*y - y^3 + 1" over the given variable names.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names);
/// Terms in graded-lex ascending order, e.g. "x^2 - 3/2*x*y"; "0" for zero.
std::string to_string(const Polynomial& p, const std::vector<std::string>& names);
std::string monomial_string(const Monomial& m, const std::vector<std::string>& names);

/// Default generator names g1..gn.
std::vector<std::string> default_names(std::size_t n);

}  // namespace opdef
