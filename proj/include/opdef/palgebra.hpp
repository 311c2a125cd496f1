#pragma once

#include <cstddef>
#include <vector>

#include "opdef/matrix.hpp"
#include "opdef/operad.hpp"

namespace opdef {

/// A family of bilinear maps indexed by a basis of E. Entry k is the n x n^2
/// matrix of f(e_k): column i*n + j holds f(e_k)(v_i, v_j).
using Bilinear = std::vector<Matrix>;

/// Value of the n x n^2 matrix `op` on (x, y).
Vector apply_bilinear(const Matrix& op, const Vector& x, const Vector& y);

/// f(e_k . (1 2))(x, y) == f(e_k)(y, x) for all k and basis x, y.
bool is_equivariant(const RightSModule& e, const Bilinear& f);

/// Bilinear family of zeros with the right shape.
Bilinear zero_bilinear(std::size_t edim, std::size_t n);

/// Finite-dimensional algebra over a quadratic operad, by structure constants.
class PAlgebra {
 public:
  /// Rejects shape mismatches and non-equivariant structures with InputError.
  /// The relations are not checked here; see check_algebra.
  PAlgebra(OperadPresentation operad, Bilinear structure);

  /// c[k][i][j][l] is the coefficient of v_l in a(e_k)(v_i, v_j).
  static PAlgebra from_constants(OperadPresentation operad,
                                 const std::vector<std::vector<std::vector<Vector>>>& c);

  const OperadPresentation& operad() const { return operad_; }
  std::size_t dim() const { return dim_; }
  const Bilinear& structure() const { return structure_; }

 private:
  OperadPresentation operad_;
  std::size_t dim_;
  Bilinear structure_;
};

/// Value at (v_i, v_j, v_k) of the tree-coordinate element whose root vertex is
/// decorated by `outer` and whose inner vertex is decorated by `inner`.
Vector compose_at(const FreeArity3& f3, const Bilinear& outer, const Bilinear& inner, const Vector& tree_coords,
                  std::size_t i, std::size_t j, std::size_t k);

/// Trilinear map of x in F(E)(3) under a; n x n^3 with column (i*n + j)*n + k.
Matrix eval3(const PAlgebra& a, const Vector& x);

struct RelationViolation {
  std::size_t index;  // position in operad().relations()
  Matrix value;       // eval3 of that relation
};

struct AlgebraCheck {
  bool equivariance_ok = true;
  std::vector<RelationViolation> violations;
  bool ok() const { return equivariance_ok && violations.empty(); }
};

AlgebraCheck check_algebra(const PAlgebra& a);

}  // namespace opdef
