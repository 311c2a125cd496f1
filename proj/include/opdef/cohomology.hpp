#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "opdef/matrix.hpp"
#include "opdef/palgebra.hpp"
#include "opdef/perm.hpp"

namespace opdef {

/// Coordinates on Hom_{S_k}(M (x) V^{(x)k}, V) for a right S_k-module M, i.e. maps
/// with f(r . s, x) = f(r, s . x).
///
/// Such a map is fixed by its values on the sorted input tuples x0. At x0 the
/// functional r -> f(r, x0)_l must kill r . h - r for h in the stabiliser of x0;
/// the surviving functionals have a basis with an identity block on some
/// "free" module indices, and the values at those indices are the coordinates.
/// Coordinates are ordered by representative, then output index l, then free index.
class EquivariantHom {
 public:
  using Table = std::vector<Matrix>;  // entry j: n x n^k matrix of f(r_j, .)
  using Tuple = std::vector<std::size_t>;

  EquivariantHom(RightSModule module, std::size_t n);

  std::size_t dim() const { return dim_; }
  std::size_t arity() const { return module_.arity(); }
  std::size_t space_dim() const { return n_; }
  const RightSModule& module() const { return module_; }

  std::size_t representative_count() const { return reps_.size(); }
  const Tuple& representative(std::size_t r) const { return reps_[r].tuple; }

  Table expand(const Vector& coords) const;
  Vector coordinates(const Table& table) const;
  /// Coordinates from values at the representatives only: value(rep) is the
  /// module-dim x n matrix whose row j is f(r_j, rep).
  Vector coordinates_from(const std::function<Matrix(const Tuple&)>& value) const;
  bool is_equivariant(const Table& table) const;

  std::size_t tuple_index(const Tuple& t) const;
  Tuple tuple_at(std::size_t index) const;
  std::size_t tuple_count() const { return tuple_count_; }

 private:
  struct Rep {
    Tuple tuple;
    std::vector<std::size_t> free;  // module indices carrying coordinates
    std::vector<Vector> basis;      // allowed functionals, one per free index
    std::size_t offset;
  };
  struct Orbit {
    std::size_t rep;
    Perm sigma;  // tuple = sigma . rep tuple
  };

  RightSModule module_;
  std::size_t n_;
  std::size_t dim_ = 0;
  std::size_t tuple_count_ = 1;
  std::vector<Rep> reps_;
  std::map<Tuple, std::size_t> rep_index_;
  std::vector<Orbit> orbit_of_;  // indexed by tuple index
};

struct CohomologyReport {
  std::size_t dim_c1 = 0;
  std::size_t dim_c2 = 0;
  std::size_t dim_c3 = 0;
  std::size_t dim_z2 = 0;
  std::size_t dim_b2 = 0;
  std::size_t dim_h2 = 0;
  std::vector<Vector> representatives;  // C^2 coordinates of sigma(h_1..h_n)
};

struct Coker3 {
  Vector cls;                      // coordinates in C^3/B^3
  bool exact = false;
  std::optional<Vector> preimage;  // psi with d2(psi) = x when exact
};

/// Degrees 1..3 of the operadic cochain complex of a P-algebra with coefficients
/// in itself. C^1 = Hom(V, V) (row-major n x n coordinates), C^2 lives on E and
/// C^3 on span(R) with its induced S_3 action.
class CochainComplex {
 public:
  explicit CochainComplex(PAlgebra algebra);

  const PAlgebra& algebra() const { return algebra_; }
  bool algebra_valid() const { return valid_; }
  const EquivariantHom& c2() const { return c2_; }
  const EquivariantHom& c3() const { return c3_; }
  std::size_t dim_c1() const { return algebra_.dim() * algebra_.dim(); }

  /// The structure pi as a 2-cochain.
  const Vector& structure_cochain() const { return pi_; }

  Vector d1(const Matrix& f) const;
  Vector d2(const Vector& psi) const;
  /// (psi * phi)(r; a) with psi at the root and phi at the inner vertex.
  Vector star(const Vector& psi, const Vector& phi) const;
  Vector star_tables(const EquivariantHom::Table& psi, const EquivariantHom::Table& phi) const;

  const Matrix& d1_matrix() const { return d1_; }
  const Matrix& d2_matrix() const { return d2_; }

  /// Throws PreconditionError if the algebra fails check_algebra.
  const CohomologyReport& h2() const;
  /// Coordinates of a 2-cocycle in the basis [representatives] modulo B^2.
  std::optional<Vector> h2_coordinates(const Vector& cocycle) const;
  Coker3 coker3(const Vector& x) const;
  std::size_t coker3_dim() const { return coker_.dim(); }
  /// The complement vector sum_j cls_j e_{k_j} representing a C^3/B^3 class.
  Vector coker3_section(const Vector& cls) const;

  static Matrix cochain1(const Vector& coords, std::size_t n);
  static Vector cochain1_coordinates(const Matrix& f);

 private:
  PAlgebra algebra_;
  bool valid_;
  EquivariantHom c2_;
  EquivariantHom c3_;
  std::vector<Vector> relation_trees_;
  Vector pi_;
  Matrix d1_;
  Matrix d2_;
  LinearSolver d2_solver_;
  CokerProjection coker_;
  mutable std::optional<CohomologyReport> report_;
  mutable std::optional<LinearSolver> h2_solver_;
};

}  // namespace opdef
