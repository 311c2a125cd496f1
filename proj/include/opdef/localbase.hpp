#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "opdef/matrix.hpp"
#include "opdef/polynomial.hpp"

namespace opdef {

/// Finite-dimensional commutative local k-algebra with basis b_0 = 1, b_1..b_r,
/// where b_1..b_r span the maximal ideal M = ker(augmentation).
class LocalAlgebra {
 public:
  LocalAlgebra() : LocalAlgebra({"1"}, {{Vector{1}}}) {}
  /// products[i][j] = coordinates of b_i b_j. Throws InputError unless the table
  /// is unital, commutative, associative, and M is a nilpotent ideal.
  LocalAlgebra(std::vector<std::string> basis_names, std::vector<std::vector<Vector>> products);

  std::size_t dim() const { return names_.size(); }
  std::size_t ideal_dim() const { return dim() - 1; }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  const Vector& product(std::size_t i, std::size_t j) const { return products_[i][j]; }
  Vector multiply(const Vector& x, const Vector& y) const;
  /// dim M/M^2, the cotangent dimension.
  std::size_t cotangent_dim() const;
  /// Basis of M^2 (as coordinate vectors) in RREF form.
  std::vector<Vector> ideal_square() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<Vector>> products_;
};

/// k[[g_1..g_n]] / (I + M^{N+1}) with its standard-monomial basis.
///
/// All polynomials of degree <= N are ordered by ascending degree (graded lex
/// inside a degree) and the span of {m * f truncated at N} is row reduced. Pivots
/// are therefore lowest-order terms; the non-pivot monomials form the quotient
/// basis, and reduction never lowers degree.
class LocalTruncation {
 public:
  /// Throws InputError if a generator has a constant or linear term.
  LocalTruncation(std::size_t n, unsigned order, std::vector<Polynomial> ideal, std::vector<std::string> names = {});

  /// Smallest order N with M^{N+1} inside I (the quotient k[[g]]/I is then
  /// finite-dimensional); throws InputError if none exists up to max_order.
  static LocalTruncation artinian(std::size_t n, std::vector<Polynomial> ideal, std::vector<std::string> names = {},
                                  unsigned max_order = 24);

  std::size_t generators() const { return n_; }
  unsigned order() const { return order_; }
  const std::vector<Polynomial>& ideal() const { return ideal_; }
  const std::vector<std::string>& variable_names() const { return names_; }
  const LocalAlgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return basis_.size(); }

  const std::vector<Monomial>& basis() const { return basis_; }
  /// Coordinates of p (terms above the order are dropped) in the quotient basis.
  Vector reduce(const Polynomial& p) const;
  /// Whether p lies in I + M^{N+1}.
  bool contains(const Polynomial& p) const { return is_zero(reduce(p)); }
  Polynomial lift(const Vector& coords) const;
  /// Index of the basis element equal to the monomial, or dim() if it is not standard.
  std::size_t basis_index(const Monomial& m) const;
  std::string describe() const;

 private:
  std::size_t n_;
  unsigned order_;
  std::vector<Polynomial> ideal_;
  std::vector<std::string> names_;
  std::vector<Monomial> all_;     // monomials of degree <= order, ascending
  std::vector<Vector> rows_;      // RREF rows of the ideal span
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> standard_;  // indices into all_
  std::vector<Monomial> basis_;
  LocalAlgebra algebra_;
};

/// Parses "k", "k[x,y]" style generator lists with an ideal: "k[x]/(x^3)",
/// "k[x,y]/(x*y, x^2 - y^3)". An entry "M^d" truncates at degree d - 1, and
/// "k[[x,y]]/(x*y, M^4)" (the form describe() prints) is accepted as well.
/// Without an explicit order the quotient must be finite-dimensional.
LocalTruncation parse_base(std::string_view text);

// ---------------------------------------------------------------- Harrison

/// Chain basis of M^{(x)q}: tuples (i_1..i_q) of ideal-basis indices (1-based in
/// the algebra), index = sum (i_p - 1) r^{q-p}.
std::size_t chain_dim(const LocalAlgebra& a, std::size_t q);
/// Normalised bar boundary M^{(x)q} -> M^{(x)q-1}:
///   b(x_1..x_q) = sum_{i=1}^{q-1} (-1)^i (.., x_i x_{i+1}, ..).
Matrix bar_boundary(const LocalAlgebra& a, std::size_t q);
/// Spanning set of the signed shuffle products in M^{(x)q}, q <= 3.
std::vector<Vector> shuffle_span(const LocalAlgebra& a, std::size_t q);
/// Shuffles form a subcomplex for q <= qmax (rank containment test).
bool shuffles_form_subcomplex(const LocalAlgebra& a, std::size_t qmax = 3);

struct HarrisonResult {
  std::size_t q = 0;
  std::size_t coefficient_dim = 1;
  std::size_t dim = 0;
  /// Cocycles spanning H^q modulo coboundaries, as values on chain basis
  /// tuples: entry tuple * coefficient_dim + k.
  std::vector<Vector> representatives;
};

/// Harrison cohomology H^q(A; k^m), q in {1, 2}, coefficients acting through
/// the augmentation.
HarrisonResult harrison(const LocalAlgebra& a, std::size_t q, std::size_t coefficient_dim = 1);

// ---------------------------------------------------------------- I/MI

struct IdealGenerators {
  /// Basis of I/MI (classes of these polynomials), I = (ideal) + M^{N+1}.
  std::vector<Polynomial> basis;
  /// R/MI = k[[g]] / (MI + M^{N+2}).
  LocalTruncation extension;
};

/// Minimal generators of I = (ideal) + M^{N+1}, i.e. a basis of I/MI. Throws
/// InputError if some generator is not in M^2.
IdealGenerators ideal_generators_mod_mi(std::size_t n, const std::vector<Polynomial>& ideal, unsigned order,
                                        std::vector<std::string> names = {});

// ---------------------------------------------------------------- extensions

/// f: base x base -> k^m, f[a * dim + b] = f(b_a, b_b); must vanish when a or b is the unit.
using CocycleTable = std::vector<Vector>;

/// Hochschild coboundary of a normalised 2-cochain with augmentation coefficients,
/// (df)(x,y,z) = e(x) f(y,z) - f(xy,z) + f(x,yz) - f(x,y) e(z), on M^3.
bool is_cocycle(const LocalAlgebra& a, const CocycleTable& f, std::size_t m);
/// Harrison coboundary of g: M -> k^m, (dg)(x, y) = -g(xy).
CocycleTable coboundary(const LocalAlgebra& a, const std::vector<Vector>& g, std::size_t m);

/// Square-zero extension 0 -> N -> total -> base -> 0, N = k^m.
struct Extension {
  LocalAlgebra base;
  std::size_t module_dim = 0;
  CocycleTable cocycle;
  LocalAlgebra total;  // basis: base basis, then N basis
  Matrix inclusion;    // total x m
  Matrix projection;   // base x total
};

/// Total product (a1,k1)(a2,k2) = (a1 a2, e(a1) k2 + e(a2) k1 + f(a1,a2)).
/// Throws InputError if f is not a symmetric normalised cocycle.
Extension extension_from_cocycle(const LocalAlgebra& base, std::size_t m, const CocycleTable& f);

/// f_q(a1, a2) = i^-1(q(a1) q(a2) - q(a1 a2)) for a unital linear section q
/// (total x base matrix with projection * q = identity).
CocycleTable cocycle_from_splitting(const Extension& e, const Matrix& q);

}  // namespace opdef
